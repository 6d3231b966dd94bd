#include "mstable/strata.hpp"

#include "mstable/error.hpp"

#include <algorithm>
#include <limits>

namespace mstable {

Partition Partition::make(int n, std::vector<MarkSet> parts) {
    require(n >= 1 && n <= kMaxMarks, ErrorCode::OutOfRange, "partition n must lie in [1, 62]");
    MarkSet seen;
    for (MarkSet p : parts) {
        require(!p.empty(), ErrorCode::InvalidArgument, "partition has an empty part");
        require(p.disjoint(seen), ErrorCode::InvalidArgument, "partition parts overlap");
        seen = seen | p;
    }
    require(seen == MarkSet::full(n), ErrorCode::InvalidArgument, "parts do not cover {1.." + std::to_string(n) + "}");
    std::sort(parts.begin(), parts.end(), [](MarkSet a, MarkSet b) { return a.min_mark() < b.min_mark(); });
    return Partition{n, std::move(parts)};
}

std::vector<MarkSet> Partition::big_parts() const {
    std::vector<MarkSet> out;
    for (MarkSet p : parts)
        if (p.size() >= 2) out.push_back(p);
    return out;
}

std::string Partition::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "|" : "") + parts[i].to_string();
    return out + "}";
}

std::uint64_t stirling2(int n, int k) {
    require(n >= 0 && k >= 0, ErrorCode::OutOfRange, "stirling2 needs non-negative arguments");
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    // row-by-row S(i, j) = j S(i-1, j) + S(i-1, j-1)
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            std::uint64_t a = row[j], b = row[j - 1], prod = 0;
            if (a != 0 && static_cast<std::uint64_t>(j) > kMax / a)
                prod = kMax;
            else
                prod = a * static_cast<std::uint64_t>(j);
            row[j] = prod > kMax - b ? kMax : prod + b;
        }
        row[0] = 0;
    }
    return row[k];
}

namespace {

void grow(int n, int l, int pos, int blocks, std::vector<int>& rgs, std::vector<Partition>& out) {
    if (pos == n) {
        if (blocks != l) return;
        std::vector<MarkSet> parts(l);
        for (int i = 0; i < n; ++i) parts[rgs[i]] = parts[rgs[i]].with(i + 1);
        out.push_back(Partition::make(n, std::move(parts)));
        return;
    }
    // remaining positions must still open the missing blocks
    for (int b = 0; b <= std::min(blocks, l - 1); ++b) {
        int opened = b == blocks ? blocks + 1 : blocks;
        if (l - opened > n - pos - 1) continue;
        rgs[pos] = b;
        grow(n, l, pos + 1, opened, rgs, out);
    }
}

}  // namespace

std::vector<Partition> enumerate_components(int n, int m, int l, std::uint64_t max_count) {
    Space space(n, m);
    require(l >= 1 && l <= m, ErrorCode::OutOfRange,
            "l must satisfy 1 <= l <= m, got l=" + std::to_string(l) + " m=" + std::to_string(m));
    std::uint64_t count = stirling2(n, l);
    require(count <= max_count, ErrorCode::EnumerationCap,
            std::to_string(count) + " partitions exceed the enumeration cap " + std::to_string(max_count));
    std::vector<Partition> out;
    out.reserve(count);
    std::vector<int> rgs(n, 0);
    grow(n, l, 0, 0, rgs, out);
    return out;
}

int stratum_dimension(const Partition& p) {
    auto big = p.big_parts();
    require(!big.empty(), ErrorCode::EmptyStratum, "all-singletons partition " + p.to_string() + " has no stratum");
    int dim = static_cast<int>(big.size()) - 1;
    for (MarkSet s : big) dim += s.size() - 2;
    return dim;
}

int stratum_codimension(const Partition& p) { return p.n - stratum_dimension(p); }

bool TestCurve::supported_in_basis() const {
    return std::all_of(boundary_degs.begin(), boundary_degs.end(), [&](const auto& kv) { return space.in_basis(kv.first); });
}

Rational TestCurve::degree(const TautClass& cls) const {
    const int n = space.n();
    auto sum = [&](auto weight) {
        Rational total;
        for (const auto& [s, d] : boundary_degs) total += weight(s) * d;
        return total;
    };
    using K = TautClass::Kind;
    switch (cls.kind) {
        case K::Lambda: return lambda_deg;
        case K::DeltaIrr: return Rational(12) * lambda_deg;
        case K::Delta0S: {
            auto it = boundary_degs.find(cls.set);
            return it == boundary_degs.end() ? Rational{} : it->second;
        }
        case K::Delta0: return sum([](MarkSet) { return Rational(1); });
        case K::Delta: return Rational(12) * lambda_deg + sum([](MarkSet) { return Rational(1); });
        case K::PsiI:
            require(cls.index >= 1 && cls.index <= n, ErrorCode::InvalidIndex, "psi index out of range");
            return lambda_deg + sum([&](MarkSet s) { return Rational(s.contains(cls.index) ? 1 : 0); });
        case K::Psi: return Rational(n) * lambda_deg + sum([](MarkSet s) { return Rational(s.size()); });
        case K::K: {
            Rational d = Rational(n - 11) * lambda_deg + sum([](MarkSet s) { return Rational(s.size() - 2); });
            if (space.m() == 0) d -= degree(TautClass::delta0S(MarkSet::full(n)));
            return d;
        }
        case K::Ds:
            return (cls.s + Rational(n - 12)) * lambda_deg + sum([](MarkSet s) { return Rational(s.size() - 1); });
    }
    fail(ErrorCode::InvalidArgument, "unknown tautological class");
}

TestCurve esigma_fiber_curve(int n, int m, const Partition& p) {
    Space space(n, m);
    require(p.n == n, ErrorCode::InvalidArgument, "partition is not of {1..n}");
    require(p.l() <= m, ErrorCode::OutOfRange, "fiber curves need l <= m");
    auto big = p.big_parts();
    require(!big.empty(), ErrorCode::AllSingletons, "all-singletons partition has no fiber curve");
    TestCurve c{space, "E" + p.to_string(), Rational(-1), {}};
    for (MarkSet s : big) c.boundary_degs[s] = Rational(1);
    return c;
}

TestCurve bt_curve(int n, MarkSet t) {
    Space space(n, 0);
    require(t.size() >= 2 && t.subset_of(MarkSet::full(n)), ErrorCode::InvalidArgument,
            "B_T needs 2 <= |T| <= n, got {" + t.to_string() + "}");
    return TestCurve{space, "B{" + t.to_string() + "}", Rational(1), {{t, Rational(-1)}}};
}

TestCurve bt_image_curve(int n, int m, MarkSet t) {
    Space space(n, m);
    require(space.in_basis(t), ErrorCode::OutOfRange, "{" + t.to_string() + "} is contracted on " + space.to_string());
    return TestCurve{space, "B{" + t.to_string() + "}", Rational(1), {{t, Rational(-1)}}};
}

TestCurve interior_curve(int n, int m) { return TestCurve{Space(n, m), "B_irr", Rational(1), {}}; }

PullbackCoefficients recover_pullback_coefficients(int n, int m, MarkSet t) {
    Space target(n, m);
    require(m >= 1, ErrorCode::OutOfRange, "m must be >= 1");
    require(t.size() >= n - m + 1 && t.subset_of(MarkSet::full(n)), ErrorCode::OutOfRange,
            "{" + t.to_string() + "} is not exceptional for m=" + std::to_string(m));
    TestCurve b = bt_curve(n, t);
    Rational on_t = b.degree(TautClass::delta0S(t));
    require(!on_t.is_zero(), ErrorCode::InvariantBreach, "B_T misses delta_{0,T}");

    PullbackCoefficients out;
    // (Delta_irr + a delta_{0,T}).B_T = 0
    out.a_t = -b.degree(TautClass::delta_irr()) / on_t;
    if (n - m >= 2) {
        MarkSet s = MarkSet::of({1, 2});
        // (delta_{0,S} + b delta_{0,T}).B_T = 0 for a surviving S
        out.b_t = -b.degree(TautClass::delta0S(s)) / on_t;
    }
    return out;
}

}  // namespace mstable
