#pragma once

#include "mstable/markset.hpp"
#include "mstable/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mstable {

/// Selects Mbar_{1,n} (m = 0) or the normalized m-stable model Mbar_{1,n}(m)^* (1 <= m <= n-1).
class Space {
public:
    Space(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }
    /// Largest |S| with delta_{0,S} in the basis.
    int max_boundary() const { return n_ - m_; }
    /// 2 <= |S| <= n-m and S within {1..n}.
    bool in_basis(MarkSet s) const;
    /// 1 + #{S : 2 <= |S| <= n-m}
    std::uint64_t basis_size() const;
    /// Dimension of the moduli space (n).
    int dimension() const { return n_; }
    std::string to_string() const;

    friend bool operator==(const Space&, const Space&) = default;

private:
    int n_;
    int m_;
};

/// Limits on explicit subset enumeration. Operations that list every boundary
/// divisor refuse spaces with n above `max_n`.
struct EnumLimits {
    int max_n = 16;
};

void check_enumerable(const Space& space, const EnumLimits& limits);

/// Sparse exact vector in the basis {lambda} u {delta_{0,S}}. Zero coefficients are never stored,
/// so structural equality is equality of classes.
class DivisorClass {
public:
    explicit DivisorClass(Space space) : space_(space) {}
    static DivisorClass lambda_class(const Space& space) {
        DivisorClass d(space);
        d.set_lambda(1);
        return d;
    }
    static DivisorClass boundary(const Space& space, MarkSet s) {
        DivisorClass d(space);
        d.set(s, 1);
        return d;
    }

    const Space& space() const { return space_; }
    const Rational& lambda() const { return lambda_; }
    Rational coefficient(MarkSet s) const;
    const std::map<MarkSet, Rational>& boundary_coeffs() const { return boundary_; }
    bool is_zero() const { return lambda_.is_zero() && boundary_.empty(); }

    void set_lambda(const Rational& c) { lambda_ = c; }
    /// Throws OUT_OF_RANGE when S is not a basis label of the space.
    void set(MarkSet s, const Rational& c);
    void add_to(MarkSet s, const Rational& c);

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rational& c);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& c, DivisorClass a) { return a *= c; }
    friend DivisorClass operator*(DivisorClass a, const Rational& c) { return a *= c; }
    DivisorClass operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    /// Human-readable form such as "3/2 lambda + delta_{1,2}".
    std::string to_string() const;

private:
    Space space_;
    Rational lambda_;
    std::map<MarkSet, Rational> boundary_;
};

DivisorClass add(const DivisorClass& a, const DivisorClass& b);
DivisorClass scale(const DivisorClass& a, const Rational& c);

/// Tautological symbols: lambda, delta_irr, delta_{0,S}, delta_0, delta, psi_i, psi, K, D(s).
struct TautClass {
    enum class Kind { Lambda, DeltaIrr, Delta0S, Delta0, Delta, PsiI, Psi, K, Ds };

    Kind kind = Kind::Lambda;
    int index = 0;     // PsiI
    MarkSet set;       // Delta0S
    Rational s;        // Ds

    static TautClass of(Kind k) {
        TautClass t;
        t.kind = k;
        return t;
    }
    static TautClass lambda() { return of(Kind::Lambda); }
    static TautClass delta_irr() { return of(Kind::DeltaIrr); }
    static TautClass delta0S(MarkSet S) {
        TautClass t = of(Kind::Delta0S);
        t.set = S;
        return t;
    }
    static TautClass delta0() { return of(Kind::Delta0); }
    static TautClass delta() { return of(Kind::Delta); }
    static TautClass psi_i(int i) {
        TautClass t = of(Kind::PsiI);
        t.index = i;
        return t;
    }
    static TautClass psi() { return of(Kind::Psi); }
    static TautClass canonical() { return of(Kind::K); }
    static TautClass ds(const Rational& s) {
        TautClass t = of(Kind::Ds);
        t.s = s;
        return t;
    }

    /// Parses "lambda", "delta_irr", "delta0", "delta", "psi", "K", "psi_3", "delta0_1,2", "D(11/2)".
    static TautClass parse(const std::string& text);
    std::string to_string() const;
};

/// Which canonical class K denotes.
enum class CanonicalConvention {
    Coarse,  // 13 lambda - 2 delta + psi - delta_{0,[n]}
    Stack,   // 13 lambda - 2 delta + psi
};

struct ExpandOptions {
    CanonicalConvention canonical = CanonicalConvention::Coarse;
    EnumLimits limits{};
};

/// Unique expansion of a tautological class in the basis of `space`.
DivisorClass expand(const Space& space, const TautClass& cls, const ExpandOptions& options = {});

/// lambda-free basis labels of the space, ordered by (cardinality, bitmask).
std::vector<MarkSet> boundary_basis(const Space& space, const EnumLimits& limits = {});

/// Basis labels as strings: "lambda" followed by "delta_{1,2}", ...
std::vector<std::string> enumerate_basis(const Space& space, const EnumLimits& limits = {});

}  // namespace mstable
