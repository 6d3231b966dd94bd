#pragma once

#include "mstable/picard.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mstable {

/// Set partition of {1..n}; parts ordered by their smallest mark.
struct Partition {
    int n = 0;
    std::vector<MarkSet> parts;

    /// Validates disjointness, cover and non-empty parts, then sorts.
    static Partition make(int n, std::vector<MarkSet> parts);
    int l() const { return static_cast<int>(parts.size()); }
    /// Parts with at least two marks.
    std::vector<MarkSet> big_parts() const;
    /// "{1,2|3}"
    std::string to_string() const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Stirling number of the second kind, saturating at UINT64_MAX.
std::uint64_t stirling2(int n, int k);

/// Partitions of {1..n} into exactly l parts, in restricted-growth-string order.
/// Requires 1 <= l <= m <= n-1. Throws ENUMERATION_CAP above `max_count` partitions.
std::vector<Partition> enumerate_components(int n, int m, int l, std::uint64_t max_count = 2'000'000);

/// Dimension of the stratum of curves with an elliptic l-fold point of the given
/// combinatorial type: sum over big parts of (|S|-2), plus (#big parts - 1) = n-l-1.
/// Throws EMPTY for the all-singletons partition.
int stratum_dimension(const Partition& p);
/// Codimension in the n-dimensional moduli space: l+1.
int stratum_codimension(const Partition& p);

/// Degrees of lambda and delta_{0,S} on a one-parameter family. The recorded S may
/// lie outside the basis of `space` (fiber curves of the strata carry the types of
/// their big parts); psi and delta_0 degrees are always derived from these.
struct TestCurve {
    Space space;
    std::string name;
    Rational lambda_deg;
    std::map<MarkSet, Rational> boundary_degs;

    /// True when every recorded S is a basis label of `space`.
    bool supported_in_basis() const;
    /// Degree of a tautological class: psi_i = lambda + sum_{i in S} delta_{0,S},
    /// delta_irr = 12 lambda, and so on, evaluated on the recorded degrees.
    Rational degree(const TautClass& cls) const;
};

/// Generic fiber of the projective bundle over the stratum of type `p` on the
/// m-stable model: lambda -1, delta_{0,S} 1 on each big part. Requires l <= m.
TestCurve esigma_fiber_curve(int n, int m, const Partition& p);

/// Pencil of elliptic tails attached to a fixed rational component carrying T, on
/// Mbar_{1,n}: lambda 1, delta_{0,T} -1.
TestCurve bt_curve(int n, MarkSet t);

/// The same pencil viewed on the m-stable model, where it avoids the indeterminacy
/// locus when |T| <= n-m.
TestCurve bt_image_curve(int n, int m, MarkSet t);

/// A family with only irreducible singular fibers: lambda 1, no disconnecting nodes.
TestCurve interior_curve(int n, int m);

struct PullbackCoefficients {
    Rational a_t;                 // coefficient of delta_{0,T} in the pullback of Delta_irr
    std::optional<Rational> b_t;  // coefficient of delta_{0,T} in the pullback of some delta_{0,S}
};

/// Solves (pullback D).B_T = 0 for the exceptional coefficient, using that B_T is contracted.
/// Requires n-m+1 <= |T| <= n. b_t is empty when the target has no boundary divisor.
PullbackCoefficients recover_pullback_coefficients(int n, int m, MarkSet t);

}  // namespace mstable
