#include "mstable/picard.hpp"

#include "mstable/error.hpp"

#include <cctype>

namespace mstable {

Space::Space(int n, int m) : n_(n), m_(m) {
    require(n >= 1 && n <= kMaxMarks, ErrorCode::OutOfRange, "n must lie in [1, 62], got " + std::to_string(n));
    require(m >= 0 && m < n, ErrorCode::OutOfRange,
            "m must satisfy 0 <= m <= n-1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
}

bool Space::in_basis(MarkSet s) const {
    int k = s.size();
    return k >= 2 && k <= max_boundary() && s.subset_of(MarkSet::full(n_));
}

std::uint64_t Space::basis_size() const {
    std::uint64_t total = 1;
    std::uint64_t binom = 1;  // C(n, k)
    for (int k = 1; k <= max_boundary(); ++k) {
        binom = binom * static_cast<std::uint64_t>(n_ - k + 1) / static_cast<std::uint64_t>(k);
        if (k >= 2) total += binom;
    }
    return total;
}

std::string Space::to_string() const {
    return "(n=" + std::to_string(n_) + ", m=" + std::to_string(m_) + ")";
}

void check_enumerable(const Space& space, const EnumLimits& limits) {
    require(limits.max_n >= 1, ErrorCode::InvalidArgument, "enumeration cap must be >= 1");
    require(space.n() <= limits.max_n, ErrorCode::EnumerationCap,
            "n=" + std::to_string(space.n()) + " exceeds the subset enumeration cap " + std::to_string(limits.max_n));
}

// ---------------------------------------------------------------------------

Rational DivisorClass::coefficient(MarkSet s) const {
    auto it = boundary_.find(s);
    return it == boundary_.end() ? Rational{} : it->second;
}

void DivisorClass::set(MarkSet s, const Rational& c) {
    require(space_.in_basis(s), ErrorCode::OutOfRange,
            "delta_{" + s.to_string() + "} is not a basis divisor of " + space_.to_string());
    if (c.is_zero())
        boundary_.erase(s);
    else
        boundary_[s] = c;
}

void DivisorClass::add_to(MarkSet s, const Rational& c) { set(s, coefficient(s) + c); }

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    require(space_ == o.space_, ErrorCode::SpaceMismatch, space_.to_string() + " vs " + o.space_.to_string());
    lambda_ += o.lambda_;
    for (const auto& [s, c] : o.boundary_) {
        Rational v = coefficient(s) + c;
        if (v.is_zero())
            boundary_.erase(s);
        else
            boundary_[s] = v;
    }
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) { return *this += -o; }

DivisorClass& DivisorClass::operator*=(const Rational& c) {
    if (c.is_zero()) {
        lambda_ = 0;
        boundary_.clear();
        return *this;
    }
    lambda_ *= c;
    for (auto& [s, v] : boundary_) v *= c;
    return *this;
}

std::string DivisorClass::to_string() const {
    std::string out;
    auto term = [&out](const Rational& c, const std::string& sym) {
        if (c.is_zero()) return;
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        if (mag != Rational(1)) out += mag.to_string() + " ";
        out += sym;
    };
    term(lambda_, "lambda");
    for (const auto& [s, c] : boundary_) term(c, "delta_{" + s.to_string() + "}");
    return out.empty() ? "0" : out;
}

DivisorClass add(const DivisorClass& a, const DivisorClass& b) { return a + b; }
DivisorClass scale(const DivisorClass& a, const Rational& c) { return c * a; }

// ---------------------------------------------------------------------------

TautClass TautClass::parse(const std::string& text) {
    if (text == "lambda") return lambda();
    if (text == "delta_irr" || text == "Delta_irr") return delta_irr();
    if (text == "delta0" || text == "delta_0") return delta0();
    if (text == "delta") return delta();
    if (text == "psi") return psi();
    if (text == "K") return canonical();
    if (text.rfind("psi_", 0) == 0) {
        std::string idx = text.substr(4);
        require(!idx.empty() && std::isdigit(static_cast<unsigned char>(idx[0])), ErrorCode::ParseError,
                "bad psi index in '" + text + "'");
        return psi_i(std::stoi(idx));
    }
    if (text.rfind("delta0_", 0) == 0) return delta0S(MarkSet::parse(text.substr(7)));
    if (text.size() > 3 && text.rfind("D(", 0) == 0 && text.back() == ')')
        return ds(Rational::parse(text.substr(2, text.size() - 3)));
    fail(ErrorCode::ParseError, "unknown tautological class '" + text + "'");
}

std::string TautClass::to_string() const {
    switch (kind) {
    case Kind::Lambda: return "lambda";
    case Kind::DeltaIrr: return "delta_irr";
    case Kind::Delta0S: return "delta0_" + set.to_string();
    case Kind::Delta0: return "delta0";
    case Kind::Delta: return "delta";
    case Kind::PsiI: return "psi_" + std::to_string(index);
    case Kind::Psi: return "psi";
    case Kind::K: return "K";
    case Kind::Ds: return "D(" + s.to_string() + ")";
    }
    return "?";
}

std::vector<MarkSet> boundary_basis(const Space& space, const EnumLimits& limits) {
    check_enumerable(space, limits);
    std::vector<MarkSet> out;
    for (int k = 2; k <= space.max_boundary(); ++k) {
        auto layer = subsets_of_size(space.n(), k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<std::string> enumerate_basis(const Space& space, const EnumLimits& limits) {
    std::vector<std::string> out{"lambda"};
    for (MarkSet s : boundary_basis(space, limits)) out.push_back("delta_{" + s.to_string() + "}");
    return out;
}

namespace {

// lambda_coeff * lambda + sum_S weight(|S|) delta_{0,S}
template <class Weight>
DivisorClass weighted_boundary(const Space& space, const Rational& lambda_coeff, Weight weight,
                               const EnumLimits& limits) {
    DivisorClass d(space);
    d.set_lambda(lambda_coeff);
    for (MarkSet s : boundary_basis(space, limits)) {
        Rational w = weight(s);
        if (!w.is_zero()) d.set(s, w);
    }
    return d;
}

}  // namespace

DivisorClass expand(const Space& space, const TautClass& cls, const ExpandOptions& options) {
    const int n = space.n();
    const auto& limits = options.limits;
    using Kind = TautClass::Kind;
    switch (cls.kind) {
    case Kind::Lambda:
        return DivisorClass::lambda_class(space);
    case Kind::DeltaIrr:
        return Rational(12) * DivisorClass::lambda_class(space);
    case Kind::Delta0S:
        require(space.in_basis(cls.set), ErrorCode::OutOfRange,
                "delta_{0," + cls.set.to_string() + "} is not a divisor of " + space.to_string());
        return DivisorClass::boundary(space, cls.set);
    case Kind::Delta0:
        return weighted_boundary(space, 0, [](MarkSet) { return Rational(1); }, limits);
    case Kind::Delta:
        return weighted_boundary(space, 12, [](MarkSet) { return Rational(1); }, limits);
    case Kind::PsiI: {
        require(cls.index >= 1 && cls.index <= n, ErrorCode::InvalidIndex,
                "psi_" + std::to_string(cls.index) + " needs 1 <= i <= " + std::to_string(n));
        int i = cls.index;
        return weighted_boundary(space, 1, [i](MarkSet s) { return Rational(s.contains(i) ? 1 : 0); }, limits);
    }
    case Kind::Psi:
        return weighted_boundary(space, n, [](MarkSet s) { return Rational(s.size()); }, limits);
    case Kind::K: {
        // 13 lambda - 2 delta + psi = (n-11) lambda + sum (|S|-2) delta_{0,S}
        DivisorClass k = weighted_boundary(space, n - 11, [](MarkSet s) { return Rational(s.size() - 2); }, limits);
        MarkSet all = MarkSet::full(n);
        if (options.canonical == CanonicalConvention::Coarse && space.in_basis(all)) k.add_to(all, -1);
        return k;
    }
    case Kind::Ds:
        return weighted_boundary(space, cls.s + Rational(n - 12), [](MarkSet s) { return Rational(s.size() - 1); },
                                 limits);
    }
    fail(ErrorCode::InvalidArgument, "unknown tautological class");
}

}  // namespace mstable
