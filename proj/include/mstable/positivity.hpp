#pragma once

#include "mstable/strata.hpp"

#include <string>
#include <vector>

namespace mstable {

/// Basis pairing: lambda coefficient times lambda degree plus matching boundary terms.
/// Throws SPACE_MISMATCH.
Rational intersect(const DivisorClass& d, const TestCurve& b);

struct LibraryOptions {
    std::size_t max_fiber_curves = 5000;  // sampled uniformly above this
    std::uint64_t seed = 0x5eedULL;
    EnumLimits limits{};
};

/// Fiber curves of every stratum with l <= m, the pencils B_T with |T| <= n-m, and B_irr.
std::vector<TestCurve> test_curve_library(int n, int m, const LibraryOptions& options = {});

enum class PositivityVerdict { AllPositive, AllNonnegative, Fails };
std::string verdict_name(PositivityVerdict v);

struct CurveDegree {
    std::string curve;
    Rational degree;
};

struct PositivityReport {
    DivisorClass divisor;
    std::vector<CurveDegree> evaluations;
    Rational min_degree;
    PositivityVerdict verdict = PositivityVerdict::AllPositive;
    std::string witness;  // first curve attaining min_degree when not all positive
    /// Positivity on finitely many curves is necessary, not sufficient, for ampleness.
    std::string note;
};

/// psi - delta_0 - s lambda on the m-stable model against the test-curve library.
PositivityReport verify_ample_range(int n, int m, const Rational& s, const LibraryOptions& options = {});

struct ChamberCheck {
    int m = 0;
    Rational s;          // chamber midpoint
    Rational parameter;  // 12 - s
    bool pushforward_matches = false;
    PositivityReport at_midpoint;
    PositivityReport at_lower_end;  // s = 11-m, parameter m+1
    PositivityReport at_upper_end;  // s = 12-m, parameter m
};

struct ChamberAmplenessSummary {
    int n = 0;
    std::vector<ChamberCheck> chambers;
    bool all_midpoints_positive() const;
};

/// For every m-stable chamber: the pushforward of D(s) equals psi - delta_0 - (12-s) lambda,
/// and that class is checked at the midpoint and both endpoints.
ChamberAmplenessSummary verify_chamber_ampleness(int n, const LibraryOptions& options = {});

}  // namespace mstable
