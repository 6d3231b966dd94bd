#pragma once

#include "mstable/picard.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace mstable {

/// The birational contraction Mbar_{1,n}(m_from)^* --> Mbar_{1,n}(m_to)^* on divisor classes.
///
/// Maps between two intermediate models are defined by factoring through Mbar_{1,n}:
/// pushforward drops delta_{0,S} with |S| > n - m_to, and pullback sends
/// lambda to lambda + sum of the exceptional delta_{0,S}.
class ContractionMap {
public:
    ContractionMap(Space source, Space target);
    static ContractionMap from_mbar(int n, int m) { return {Space(n, 0), Space(n, m)}; }

    const Space& source() const { return source_; }
    const Space& target() const { return target_; }

    /// Exceptional divisors lie in this cardinality window: n - m_to + 1 <= |S| <= n - m_from.
    int exceptional_min() const { return target_.n() - target_.m() + 1; }
    int exceptional_max() const { return source_.n() - source_.m(); }
    bool is_exceptional(MarkSet s) const {
        return s.size() >= exceptional_min() && s.size() <= exceptional_max();
    }
    std::vector<MarkSet> exceptional_divisors(const EnumLimits& limits = {}) const;

    DivisorClass pushforward(const DivisorClass& d) const;
    DivisorClass pullback(const DivisorClass& d, const EnumLimits& limits = {}) const;

private:
    Space source_;
    Space target_;
};

/// Discrepancy of D(s) along the exceptional divisors of Mbar_{1,n} --> Mbar_{1,n}(m)^*.
/// Coefficients depend only on |S|: |S| + 11 - n - s.
struct DiscrepancyReport {
    int n = 0;
    int m = 0;
    Rational s;
    struct Entry {
        int cardinality;
        Rational coefficient;
    };
    std::vector<Entry> by_cardinality;  // ascending |S| in [n-m+1, n]
    Rational min_coefficient;
    bool section_rings_equal = false;

    Rational coefficient_for(MarkSet s) const;
};

DiscrepancyReport discrepancy_of_Ds(int n, int m, const Rational& s);

enum class SmoothnessVerdict { Singular, Inconclusive, NotApplicable };
std::string_view verdict_name(SmoothnessVerdict v);

struct CanonicalDiscrepancy {
    DivisorClass discrepancy;  // K_source - pullback(K_target) on the source
    int dimension = 0;         // dim of the target model (= n)
    bool regular = false;      // the map is a morphism (consecutive m, m_to in {1, n-1})
    bool point_image = false;  // every exceptional divisor maps to a point
    std::optional<Rational> min_discrepancy;  // over exceptional divisors, if any
    SmoothnessVerdict verdict = SmoothnessVerdict::NotApplicable;
};

/// K_source - phi^* K_target with coarse-space canonical classes.
DivisorClass canonical_discrepancy(int n, int m_from, int m_to, const EnumLimits& limits = {});

/// One-sided smoothness test: an exceptional discrepancy below dim - 1 under a
/// point-image regular contraction forces the target to be singular.
CanonicalDiscrepancy smoothness_consistency(int n, int m_from, int m_to, const EnumLimits& limits = {});

/// phi: Mbar_{1,n}(m-1) --> Mbar_{1,n}(m) is regular iff m = 1 or m = n - 1.
bool consecutive_map_is_regular(int n, int m);

/// alpha = (s-1)/12 for s lambda + psi - Delta = K + alpha Delta_irr + Delta_0 (stack convention).
Rational alpha_of_s(const Rational& s);
Rational s_of_alpha(const Rational& alpha);
/// Models Mbar_{1,n}(m) arise as log canonical models only for m <= 10.
bool log_canonical(int m);

}  // namespace mstable
