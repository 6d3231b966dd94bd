#pragma once

#include "mstable/markset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mstable {

/// Combinatorial model of an n-pointed curve of arithmetic genus one: components
/// (vertices), nodes (edges, loops allowed) and at most one elliptic l-fold point
/// (the hub), whose l branches lie on the listed vertices.
class DualGraph {
public:
    struct Vertex {
        std::string id;
        int genus = 0;  // geometric genus, 0 or 1
        MarkSet marks;
        friend bool operator==(const Vertex&, const Vertex&) = default;
    };
    struct Edge {
        int a = 0;  // vertex indices
        int b = 0;
        /// Total-space multiplicity: an A_{k} node has multiplicity k+1.
        int multiplicity = 1;
        bool is_loop() const { return a == b; }
        friend bool operator==(const Edge&, const Edge&) = default;
    };
    struct Hub {
        std::vector<int> branches;  // vertex indices, one per branch (multiset)
        int multiplicity() const { return static_cast<int>(branches.size()); }
        friend bool operator==(const Hub&, const Hub&) = default;
    };

    DualGraph() = default;
    /// Checks marks partition {1..n}, unique ids, genus in {0,1}, valid incidences.
    DualGraph(int n, std::vector<Vertex> vertices, std::vector<Edge> edges, std::optional<Hub> hub = std::nullopt);

    int n() const { return n_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::optional<Hub>& hub() const { return hub_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int index_of(const std::string& id) const;  // -1 if absent

    /// Number of hub branches on vertex v.
    int hub_incidences(int v) const;
    /// marks + edge endpoints (a loop counts twice) + hub branches.
    int special_points(int v) const;
    bool is_hub_branch(int v) const { return hub_incidences(v) > 0; }

    /// Vertices sorted by id, edges and hub branches sorted accordingly.
    DualGraph normalized() const;

    friend bool operator==(const DualGraph& a, const DualGraph& b);

private:
    int n_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::optional<Hub> hub_;
};

/// A connected set of components; `include_hub` when the hub point lies on it.
struct Subcurve {
    std::vector<int> vertices;  // sorted vertex indices
    bool include_hub = false;

    bool contains(int v) const;
    friend bool operator==(const Subcurve&, const Subcurve&) = default;
};

/// Sum of geometric genera + first Betti number of the incidence graph (the hub is a
/// vertex joined to its branches) + 1 for the hub. Throws DISCONNECTED.
int arithmetic_genus(const DualGraph& g);

/// Throws DISCONNECTED or GENUS_NOT_ONE.
void require_genus_one(const DualGraph& g);

/// Genus of the subcurve: the hub contributes 1 only when every branch lies on it.
int subcurve_genus(const DualGraph& g, const Subcurve& z);
bool subcurve_connected(const DualGraph& g, const Subcurve& z);

/// Edge indices whose removal disconnects the curve.
std::vector<int> disconnecting_edges(const DualGraph& g);

/// The unique connected genus-one subcurve without disconnecting nodes.
Subcurve minimal_elliptic_subcurve(const DualGraph& g);

/// #marks on z + #nodes joining z to the rest of the curve.
int level(const DualGraph& g, const Subcurve& z);

/// Disconnecting node together with its type S (marks on the genus-zero side).
struct DisconnectingNode {
    int edge;
    MarkSet type;
};
std::vector<DisconnectingNode> disconnecting_nodes(const DualGraph& g);

struct StabilityClauses {
    bool hub_bound = true;             // (1) hub multiplicity <= m
    bool level_bound = true;           // (2) every connected genus-one subcurve has level > m
    bool rational_stability = true;    // (3) genus-0 components have >= 3 special points
    bool relaxed_hub_branches = true;  //     ... hub branches need >= 2, one of them >= 3
};

struct StabilityReport {
    bool stable = true;
    std::vector<std::string> violations;
    /// Connected genus-one subcurve of smallest level (the lowest elliptic bridge).
    Subcurve lowest_subcurve;
    int lowest_level = 0;
};

StabilityReport is_m_stable(const DualGraph& g, int m, const StabilityClauses& clauses = {});

/// Partition of {1..n} by connected components after removing the hub, ordered by min mark.
std::vector<MarkSet> combinatorial_type(const DualGraph& g);

}  // namespace mstable
