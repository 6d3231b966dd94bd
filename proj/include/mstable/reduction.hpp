#pragma once

#include "mstable/dualgraph.hpp"

#include <vector>

namespace mstable {

struct ReductionStep {
    int n_i = 0;  // marks on the contracted minimal elliptic subcurve
    int m_i = 0;  // nodes joining it to the rest of the curve
    int l_i() const { return n_i + m_i; }
    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

/// Step record of one m-stabilization, with the resulting changes in the degrees
/// of lambda, psi and delta_0 on the one-parameter family.
struct ReductionTrace {
    std::vector<ReductionStep> steps;

    int k() const { return static_cast<int>(steps.size()); }
    int d_lambda() const { return k(); }
    int d_psi() const;
    int d_delta0() const;
    int d_psi_minus_delta0() const;
};

struct ReductionResult {
    DualGraph graph;
    ReductionTrace trace;
};

/// Replaces the minimal elliptic subcurve by an elliptic l-fold point while its level
/// is <= m, then blows down semistable chains. Edges of multiplicity d count as d nodes
/// joined by d-1 semistable components. The returned graph is normalized.
ReductionResult mstable_reduce(const DualGraph& g, int m);

/// Limit point for a curve with exactly one disconnecting node whose genus-zero side
/// carries the marks S, n-m+1 <= |S| <= n.
DualGraph phi_limit(const DualGraph& g, int n, int m);

/// The rational contraction to the m-stable model is defined at g (a nodal curve) when
/// no disconnecting node has type |S| >= n-m+1, or g has only one disconnecting node.
bool is_phi_regular_at(const DualGraph& g, int n, int m);

/// Equality up to renaming of vertices (color refinement on genus, marks and incidences).
bool same_shape(const DualGraph& a, const DualGraph& b);

}  // namespace mstable
