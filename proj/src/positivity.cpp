#include "mstable/positivity.hpp"

#include "mstable/contraction.hpp"
#include "mstable/error.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace mstable {

Rational intersect(const DivisorClass& d, const TestCurve& b) {
    require(d.space() == b.space, ErrorCode::SpaceMismatch,
            "divisor on " + d.space().to_string() + ", curve on " + b.space.to_string());
    Rational total = d.lambda() * b.lambda_deg;
    for (const auto& [s, c] : d.boundary_coeffs()) {
        auto it = b.boundary_degs.find(s);
        if (it != b.boundary_degs.end()) total += c * it->second;
    }
    return total;
}

std::string verdict_name(PositivityVerdict v) {
    switch (v) {
        case PositivityVerdict::AllPositive: return "ALL_POSITIVE";
        case PositivityVerdict::AllNonnegative: return "ALL_NONNEGATIVE";
        case PositivityVerdict::Fails: return "FAILS";
    }
    return "?";
}

namespace {

// Uniform random partition into exactly l blocks: walk the restricted growth string,
// weighting each choice by the number of completions.
Partition random_partition(int n, int l, std::mt19937_64& rng) {
    // ways[r][j]: completions with r positions left and j blocks open
    std::vector<std::vector<long double>> ways(n + 1, std::vector<long double>(l + 2, 0));
    ways[0][l] = 1;
    for (int r = 1; r <= n; ++r)
        for (int j = 0; j <= l; ++j) ways[r][j] = j * ways[r - 1][j] + (j < l ? ways[r - 1][j + 1] : 0);
    std::uniform_real_distribution<long double> unit(0, 1);
    std::vector<MarkSet> parts(l);
    int open = 0;
    for (int pos = 0; pos < n; ++pos) {
        int r = n - pos - 1;
        long double total = ways[r + 1][open];
        long double pick = unit(rng) * total;
        long double acc = 0;
        int choice = open < l ? open : open - 1;  // fallback
        for (int b = 0; b <= std::min(open, l - 1); ++b) {
            int next = b == open ? open + 1 : open;
            acc += ways[r][next];
            if (pick < acc) {
                choice = b;
                break;
            }
        }
        parts[choice] = parts[choice].with(pos + 1);
        if (choice == open) ++open;
    }
    return Partition::make(n, std::move(parts));
}

}  // namespace

std::vector<TestCurve> test_curve_library(int n, int m, const LibraryOptions& options) {
    Space space(n, m);
    require(m >= 1, ErrorCode::OutOfRange, "the library lives on m-stable models, m >= 1");
    check_enumerable(space, options.limits);

    std::vector<TestCurve> out;
    std::uint64_t total = 0;
    for (int l = 1; l <= m; ++l) total += stirling2(n, l) - (l == n ? 1 : 0);
    if (total <= options.max_fiber_curves) {
        for (int l = 1; l <= m; ++l)
            for (const auto& p : enumerate_components(n, m, l))
                if (!p.big_parts().empty()) out.push_back(esigma_fiber_curve(n, m, p));
    } else {
        std::mt19937_64 rng(options.seed);
        std::vector<long double> weight;
        for (int l = 1; l <= m; ++l) weight.push_back(static_cast<long double>(stirling2(n, l)));
        std::discrete_distribution<int> pick_l(weight.begin(), weight.end());
        std::set<std::string> seen;
        while (out.size() < options.max_fiber_curves) {
            int l = pick_l(rng) + 1;
            Partition p = random_partition(n, l, rng);
            if (p.big_parts().empty() || !seen.insert(p.to_string()).second) continue;
            out.push_back(esigma_fiber_curve(n, m, p));
        }
        std::sort(out.begin(), out.end(), [](const TestCurve& a, const TestCurve& b) { return a.name < b.name; });
    }
    for (MarkSet t : boundary_basis(space, options.limits)) out.push_back(bt_image_curve(n, m, t));
    out.push_back(interior_curve(n, m));
    return out;
}

PositivityReport verify_ample_range(int n, int m, const Rational& s, const LibraryOptions& options) {
    Space space(n, m);
    require(m >= 1, ErrorCode::OutOfRange, "m must satisfy 1 <= m <= n-1");
    ExpandOptions eo;
    eo.limits = options.limits;
    DivisorClass cls = expand(space, TautClass::psi(), eo) - expand(space, TautClass::delta0(), eo) -
                       s * DivisorClass::lambda_class(space);
    PositivityReport report{cls, {}, Rational{}, PositivityVerdict::AllPositive, "", ""};

    bool first = true;
    for (const TestCurve& b : test_curve_library(n, m, options)) {
        Rational deg = b.degree(TautClass::psi()) - b.degree(TautClass::delta0()) - s * b.lambda_deg;
        if (b.supported_in_basis())
            require(deg == intersect(cls, b), ErrorCode::InvariantBreach,
                    "basis pairing and tautological degree disagree on " + b.name);
        if (first || deg < report.min_degree) {
            report.min_degree = deg;
            report.witness = b.name;
        }
        first = false;
        report.evaluations.push_back({b.name, deg});
    }
    if (report.min_degree.sign() > 0) {
        report.verdict = PositivityVerdict::AllPositive;
        report.witness.clear();
        report.note = "positive on every library curve: consistent with ampleness";
    } else if (report.min_degree.sign() == 0) {
        report.verdict = PositivityVerdict::AllNonnegative;
        report.note = "nonnegative with a zero: consistent with nefness, not ampleness";
    } else {
        report.verdict = PositivityVerdict::Fails;
        report.note = "negative on a library curve: not nef";
    }
    return report;
}

bool ChamberAmplenessSummary::all_midpoints_positive() const {
    return std::all_of(chambers.begin(), chambers.end(),
                       [](const ChamberCheck& c) { return c.at_midpoint.verdict == PositivityVerdict::AllPositive; });
}

ChamberAmplenessSummary verify_chamber_ampleness(int n, const LibraryOptions& options) {
    require(n >= 3, ErrorCode::OutOfRange, "chamber check needs n >= 3");
    ChamberAmplenessSummary summary;
    summary.n = n;
    ExpandOptions eo;
    eo.limits = options.limits;
    for (int m = 1; m <= n - 1; ++m) {
        Rational s = Rational(23 - 2 * m, 2);
        Rational parameter = Rational(12) - s;

        Space src(n, 0), dst(n, m);
        ContractionMap phi(src, dst);
        DivisorClass pushed = phi.pushforward(expand(src, TautClass::ds(s), eo));
        DivisorClass expected = expand(dst, TautClass::psi(), eo) - expand(dst, TautClass::delta0(), eo) -
                                parameter * DivisorClass::lambda_class(dst);

        ChamberCheck c{m,
                       s,
                       parameter,
                       pushed == expected,
                       verify_ample_range(n, m, parameter, options),
                       verify_ample_range(n, m, Rational(m + 1), options),
                       verify_ample_range(n, m, Rational(m), options)};
        summary.chambers.push_back(std::move(c));
    }
    return summary;
}

}  // namespace mstable
