#include "mstable/contraction.hpp"

#include "mstable/error.hpp"

namespace mstable {

ContractionMap::ContractionMap(Space source, Space target) : source_(source), target_(target) {
    require(source.n() == target.n(), ErrorCode::SpaceMismatch, "contraction must preserve n");
    require(source.m() <= target.m(), ErrorCode::InvalidArgument,
            "contraction goes from smaller to larger m: " + source.to_string() + " -> " + target.to_string());
}

std::vector<MarkSet> ContractionMap::exceptional_divisors(const EnumLimits& limits) const {
    check_enumerable(source_, limits);
    std::vector<MarkSet> out;
    for (int k = std::max(2, exceptional_min()); k <= exceptional_max(); ++k) {
        auto layer = subsets_of_size(source_.n(), k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

DivisorClass ContractionMap::pushforward(const DivisorClass& d) const {
    require(d.space() == source_, ErrorCode::SpaceMismatch,
            "pushforward expects a class on " + source_.to_string() + ", got " + d.space().to_string());
    DivisorClass out(target_);
    out.set_lambda(d.lambda());
    for (const auto& [s, c] : d.boundary_coeffs())
        if (target_.in_basis(s)) out.set(s, c);
    return out;
}

DivisorClass ContractionMap::pullback(const DivisorClass& d, const EnumLimits& limits) const {
    require(d.space() == target_, ErrorCode::SpaceMismatch,
            "pullback expects a class on " + target_.to_string() + ", got " + d.space().to_string());
    DivisorClass out(source_);
    out.set_lambda(d.lambda());
    for (const auto& [s, c] : d.boundary_coeffs()) out.set(s, c);
    if (!d.lambda().is_zero())
        for (MarkSet s : exceptional_divisors(limits)) out.add_to(s, d.lambda());
    return out;
}

// ---------------------------------------------------------------------------

Rational DiscrepancyReport::coefficient_for(MarkSet s) const {
    for (const auto& e : by_cardinality)
        if (e.cardinality == s.size()) return e.coefficient;
    fail(ErrorCode::OutOfRange, "delta_{" + s.to_string() + "} is not exceptional");
}

DiscrepancyReport discrepancy_of_Ds(int n, int m, const Rational& s) {
    Space target(n, m);
    require(m >= 1, ErrorCode::OutOfRange, "discrepancy needs 1 <= m <= n-1");
    DiscrepancyReport r;
    r.n = n;
    r.m = m;
    r.s = s;
    for (int k = n - m + 1; k <= n; ++k) {
        Rational c = Rational(k + 11 - n) - s;
        if (r.by_cardinality.empty() || c < r.min_coefficient) r.min_coefficient = c;
        r.by_cardinality.push_back({k, c});
    }
    r.section_rings_equal = s <= Rational(12 - m);
    require(r.section_rings_equal == (r.min_coefficient.sign() >= 0), ErrorCode::InvariantBreach,
            "section-ring criterion disagrees with the sign of the discrepancies");
    return r;
}

std::string_view verdict_name(SmoothnessVerdict v) {
    switch (v) {
    case SmoothnessVerdict::Singular: return "SINGULAR";
    case SmoothnessVerdict::Inconclusive: return "INCONCLUSIVE";
    case SmoothnessVerdict::NotApplicable: return "NOT_APPLICABLE";
    }
    return "?";
}

bool consecutive_map_is_regular(int n, int m) { return m == 1 || m == n - 1; }

DivisorClass canonical_discrepancy(int n, int m_from, int m_to, const EnumLimits& limits) {
    ContractionMap phi(Space(n, m_from), Space(n, m_to));
    ExpandOptions opts{CanonicalConvention::Coarse, limits};
    DivisorClass k_source = expand(phi.source(), TautClass::canonical(), opts);
    DivisorClass k_target = expand(phi.target(), TautClass::canonical(), opts);
    return k_source - phi.pullback(k_target, limits);
}

CanonicalDiscrepancy smoothness_consistency(int n, int m_from, int m_to, const EnumLimits& limits) {
    ContractionMap phi(Space(n, m_from), Space(n, m_to));
    CanonicalDiscrepancy out{canonical_discrepancy(n, m_from, m_to, limits), 0, false, false, std::nullopt, SmoothnessVerdict::NotApplicable};
    out.dimension = phi.target().dimension();
    out.regular = m_to == m_from + 1 && consecutive_map_is_regular(n, m_to);

    auto exceptional = phi.exceptional_divisors(limits);
    out.point_image = !exceptional.empty();
    for (MarkSet s : exceptional) {
        if (s.size() != 2) out.point_image = false;
        Rational c = out.discrepancy.coefficient(s);
        if (!out.min_discrepancy || c < *out.min_discrepancy) out.min_discrepancy = c;
    }

    if (!out.regular || !out.point_image)
        out.verdict = SmoothnessVerdict::NotApplicable;
    else if (*out.min_discrepancy < Rational(out.dimension - 1))
        out.verdict = SmoothnessVerdict::Singular;
    else
        out.verdict = SmoothnessVerdict::Inconclusive;
    return out;
}

Rational alpha_of_s(const Rational& s) { return (s - Rational(1)) / Rational(12); }
Rational s_of_alpha(const Rational& alpha) { return Rational(12) * alpha + Rational(1); }
bool log_canonical(int m) { return m <= 10; }

}  // namespace mstable
