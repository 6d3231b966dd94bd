#include "mstable/dualgraph.hpp"

#include "mstable/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace mstable {

DualGraph::DualGraph(int n, std::vector<Vertex> vertices, std::vector<Edge> edges, std::optional<Hub> hub)
    : n_(n), vertices_(std::move(vertices)), edges_(std::move(edges)), hub_(std::move(hub)) {
    require(n >= 1 && n <= kMaxMarks, ErrorCode::OutOfRange, "graph n must lie in [1, 62]");
    require(!vertices_.empty(), ErrorCode::InvalidArgument, "graph has no vertices");
    std::set<std::string> ids;
    MarkSet seen;
    for (const auto& v : vertices_) {
        require(!v.id.empty(), ErrorCode::InvalidArgument, "empty vertex id");
        require(ids.insert(v.id).second, ErrorCode::InvalidArgument, "duplicate vertex id '" + v.id + "'");
        require(v.genus == 0 || v.genus == 1, ErrorCode::InvalidArgument, "vertex genus must be 0 or 1");
        require(v.marks.disjoint(seen), ErrorCode::InvalidArgument, "mark repeated on vertex '" + v.id + "'");
        seen = seen | v.marks;
    }
    require(seen == MarkSet::full(n), ErrorCode::InvalidArgument, "vertex marks do not partition {1.." + std::to_string(n) + "}");
    int nv = vertex_count();
    for (const auto& e : edges_) {
        require(e.a >= 0 && e.a < nv && e.b >= 0 && e.b < nv, ErrorCode::InvalidIndex, "edge endpoint out of range");
        require(e.multiplicity >= 1, ErrorCode::InvalidArgument, "edge multiplicity must be >= 1");
    }
    if (hub_) {
        require(!hub_->branches.empty(), ErrorCode::InvalidArgument, "hub needs at least one branch");
        for (int b : hub_->branches)
            require(b >= 0 && b < nv, ErrorCode::InvalidIndex, "hub branch out of range");
    }
}

int DualGraph::index_of(const std::string& id) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices_[i].id == id) return i;
    return -1;
}

int DualGraph::hub_incidences(int v) const {
    if (!hub_) return 0;
    return static_cast<int>(std::count(hub_->branches.begin(), hub_->branches.end(), v));
}

int DualGraph::special_points(int v) const {
    int count = vertices_[v].marks.size() + hub_incidences(v);
    for (const auto& e : edges_) {
        if (e.a == v) ++count;
        if (e.b == v) ++count;
    }
    return count;
}

DualGraph DualGraph::normalized() const {
    std::vector<int> order(vertices_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return vertices_[x].id < vertices_[y].id; });
    std::vector<int> rank(vertices_.size());
    std::vector<Vertex> vs;
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        rank[order[i]] = i;
        vs.push_back(vertices_[order[i]]);
    }
    std::vector<Edge> es;
    for (const auto& e : edges_) {
        int a = rank[e.a], b = rank[e.b];
        es.push_back({std::min(a, b), std::max(a, b), e.multiplicity});
    }
    std::sort(es.begin(), es.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.a, x.b, x.multiplicity) < std::tie(y.a, y.b, y.multiplicity);
    });
    std::optional<Hub> h;
    if (hub_) {
        Hub nh;
        for (int b : hub_->branches) nh.branches.push_back(rank[b]);
        std::sort(nh.branches.begin(), nh.branches.end());
        h = nh;
    }
    DualGraph out;
    out.n_ = n_;
    out.vertices_ = std::move(vs);
    out.edges_ = std::move(es);
    out.hub_ = std::move(h);
    return out;
}

bool operator==(const DualGraph& a, const DualGraph& b) {
    DualGraph x = a.normalized(), y = b.normalized();
    return x.n_ == y.n_ && x.vertices_ == y.vertices_ && x.edges_ == y.edges_ && x.hub_ == y.hub_;
}

bool Subcurve::contains(int v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

namespace {

// Incidence graph: vertex indices plus the hub as node V. Loops are skipped.
struct Incidence {
    int nodes = 0;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge id; -1 for hub incidences)
};

Incidence incidence(const DualGraph& g, int skip_edge = -1) {
    Incidence inc;
    int nv = g.vertex_count();
    inc.nodes = nv + (g.hub() ? 1 : 0);
    inc.adj.assign(inc.nodes, {});
    for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
        const auto& e = g.edges()[i];
        if (i == skip_edge || e.is_loop()) continue;
        inc.adj[e.a].push_back({e.b, i});
        inc.adj[e.b].push_back({e.a, i});
    }
    if (g.hub()) {
        for (int b : g.hub()->branches) {
            inc.adj[nv].push_back({b, -1});
            inc.adj[b].push_back({nv, -1});
        }
    }
    return inc;
}

std::vector<int> reach(const Incidence& inc, int start, const std::function<bool(int)>& allowed) {
    std::vector<int> comp(inc.nodes, 0);
    std::vector<int> stack{start};
    comp[start] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [w, eid] : inc.adj[u]) {
            if (comp[w] || !allowed(w)) continue;
            comp[w] = 1;
            stack.push_back(w);
        }
    }
    return comp;
}

bool all_connected(const DualGraph& g) {
    Incidence inc = incidence(g);
    auto comp = reach(inc, 0, [](int) { return true; });
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 1; });
}

// Hub point lies on z whenever some branch does.
bool touches_hub(const DualGraph& g, const Subcurve& z) {
    if (!g.hub()) return false;
    for (int b : g.hub()->branches)
        if (z.contains(b)) return true;
    return false;
}

bool holds_all_branches(const DualGraph& g, const Subcurve& z) {
    if (!g.hub()) return false;
    for (int b : g.hub()->branches)
        if (!z.contains(b)) return false;
    return true;
}

void check_subcurve(const DualGraph& g, const Subcurve& z) {
    require(!z.vertices.empty(), ErrorCode::InvalidSubcurve, "empty subcurve");
    require(std::is_sorted(z.vertices.begin(), z.vertices.end()) &&
                std::adjacent_find(z.vertices.begin(), z.vertices.end()) == z.vertices.end(),
            ErrorCode::InvalidSubcurve, "subcurve vertices must be sorted and distinct");
    for (int v : z.vertices)
        require(v >= 0 && v < g.vertex_count(), ErrorCode::InvalidSubcurve, "subcurve vertex out of range");
    require(z.include_hub == touches_hub(g, z), ErrorCode::InvalidSubcurve,
            "include_hub must be set exactly when the subcurve carries a hub branch");
}

}  // namespace

int arithmetic_genus(const DualGraph& g) {
    require(all_connected(g), ErrorCode::Disconnected, "dual graph is disconnected");
    int genus = 0;
    for (const auto& v : g.vertices()) genus += v.genus;
    int incidences = static_cast<int>(g.edges().size());
    int nodes = g.vertex_count();
    if (g.hub()) {
        incidences += g.hub()->multiplicity();
        nodes += 1;
        genus += 1;
    }
    return genus + incidences - nodes + 1;
}

void require_genus_one(const DualGraph& g) {
    int genus = arithmetic_genus(g);
    require(genus == 1, ErrorCode::GenusNotOne, "arithmetic genus is " + std::to_string(genus));
}

bool subcurve_connected(const DualGraph& g, const Subcurve& z) {
    check_subcurve(g, z);
    Incidence inc = incidence(g);
    int nv = g.vertex_count();
    auto allowed = [&](int w) { return w == nv ? z.include_hub : z.contains(w); };
    auto comp = reach(inc, z.vertices.front(), allowed);
    for (int v : z.vertices)
        if (!comp[v]) return false;
    return true;
}

int subcurve_genus(const DualGraph& g, const Subcurve& z) {
    check_subcurve(g, z);
    int genus = 0, incidences = 0;
    int nodes = static_cast<int>(z.vertices.size());
    for (int v : z.vertices) genus += g.vertices()[v].genus;
    for (const auto& e : g.edges())
        if (z.contains(e.a) && z.contains(e.b)) ++incidences;
    if (z.include_hub) {
        nodes += 1;
        for (int b : g.hub()->branches)
            if (z.contains(b)) ++incidences;
        // a proper subset of the branches is an ordinary rational j-fold point
        if (holds_all_branches(g, z)) genus += 1;
    }
    // Betti number of the induced incidence graph, assuming connected
    return genus + incidences - nodes + 1;
}

std::vector<int> disconnecting_edges(const DualGraph& g) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
        const auto& e = g.edges()[i];
        if (e.is_loop()) continue;
        Incidence inc = incidence(g, i);
        auto comp = reach(inc, e.a, [](int) { return true; });
        if (!comp[e.b]) out.push_back(i);
    }
    return out;
}

Subcurve minimal_elliptic_subcurve(const DualGraph& g) {
    require_genus_one(g);
    Subcurve z;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.vertices()[v].genus == 1) z.vertices.push_back(v);
    if (z.vertices.empty() && g.hub()) {
        z.vertices = g.hub()->branches;
        std::sort(z.vertices.begin(), z.vertices.end());
        z.vertices.erase(std::unique(z.vertices.begin(), z.vertices.end()), z.vertices.end());
        z.include_hub = true;
    } else if (z.vertices.empty()) {
        auto bridges = disconnecting_edges(g);
        std::set<int> on_cycle;
        for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
            if (std::find(bridges.begin(), bridges.end(), i) != bridges.end()) continue;
            on_cycle.insert(g.edges()[i].a);
            on_cycle.insert(g.edges()[i].b);
        }
        z.vertices.assign(on_cycle.begin(), on_cycle.end());
    }
    require(z.vertices.size() >= 1 && subcurve_connected(g, z) && subcurve_genus(g, z) == 1,
            ErrorCode::InvariantBreach, "minimal elliptic subcurve is not a connected genus-one subcurve");
    return z;
}

int level(const DualGraph& g, const Subcurve& z) {
    check_subcurve(g, z);
    int count = 0;
    for (int v : z.vertices) count += g.vertices()[v].marks.size();
    for (const auto& e : g.edges())
        if (z.contains(e.a) != z.contains(e.b)) ++count;
    if (z.include_hub && !holds_all_branches(g, z)) ++count;  // the hub point meets the complement
    return count;
}

std::vector<DisconnectingNode> disconnecting_nodes(const DualGraph& g) {
    Subcurve core = minimal_elliptic_subcurve(g);
    std::vector<DisconnectingNode> out;
    int nv = g.vertex_count();
    for (int i : disconnecting_edges(g)) {
        Incidence inc = incidence(g, i);
        auto comp = reach(inc, core.vertices.front(), [](int) { return true; });
        MarkSet type;
        for (int v = 0; v < nv; ++v)
            if (!comp[v]) type = type | g.vertices()[v].marks;
        out.push_back({i, type});
    }
    return out;
}

namespace {

// Cheapest way to extend the core into the tree hanging off `edge` at vertex w:
// either stop (the edge is an attaching node, cost 1) or absorb w and recurse.
int extension_cost(const DualGraph& g, int w, int via_edge, std::vector<int>& absorbed) {
    int inside = g.vertices()[w].marks.size();
    std::vector<int> taken;
    for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
        if (i == via_edge) continue;
        const auto& e = g.edges()[i];
        if (e.a != w && e.b != w) continue;
        require(!e.is_loop(), ErrorCode::InvariantBreach, "cycle outside the minimal elliptic subcurve");
        int next = e.a == w ? e.b : e.a;
        inside += extension_cost(g, next, i, taken);
    }
    if (inside < 1) {
        absorbed.push_back(w);
        absorbed.insert(absorbed.end(), taken.begin(), taken.end());
        return inside;
    }
    return 1;
}

}  // namespace

StabilityReport is_m_stable(const DualGraph& g, int m, const StabilityClauses& clauses) {
    require(m >= 0, ErrorCode::OutOfRange, "m must be >= 0");
    Subcurve core = minimal_elliptic_subcurve(g);
    StabilityReport report;

    // lowest level over connected genus-one subcurves; each one contains the core
    int lowest = 0;
    std::vector<int> absorbed;
    for (int v : core.vertices) lowest += g.vertices()[v].marks.size();
    for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
        const auto& e = g.edges()[i];
        bool a_in = core.contains(e.a), b_in = core.contains(e.b);
        if (a_in == b_in) continue;
        lowest += extension_cost(g, a_in ? e.b : e.a, i, absorbed);
    }
    report.lowest_subcurve = core;
    report.lowest_subcurve.vertices.insert(report.lowest_subcurve.vertices.end(), absorbed.begin(), absorbed.end());
    std::sort(report.lowest_subcurve.vertices.begin(), report.lowest_subcurve.vertices.end());
    report.lowest_level = lowest;

    auto violation = [&](const std::string& msg) {
        report.stable = false;
        report.violations.push_back(msg);
    };

    if (clauses.hub_bound && g.hub() && g.hub()->multiplicity() > m)
        violation("elliptic " + std::to_string(g.hub()->multiplicity()) + "-fold point exceeds m=" + std::to_string(m));
    if (clauses.level_bound && lowest <= m)
        violation("connected genus-one subcurve of level " + std::to_string(lowest) + " <= m=" + std::to_string(m));
    if (clauses.rational_stability) {
        bool some_branch_three = false;
        bool any_branch = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.vertices()[v].genus != 0) continue;
            int sp = g.special_points(v);
            bool branch = clauses.relaxed_hub_branches && g.is_hub_branch(v);
            if (branch) {
                any_branch = true;
                if (sp >= 3) some_branch_three = true;
            }
            int needed = branch ? 2 : 3;
            if (sp < needed)
                violation("rational component '" + g.vertices()[v].id + "' has " + std::to_string(sp) +
                          " special points");
        }
        if (any_branch && !some_branch_three) violation("no hub branch component has 3 special points");
    }
    return report;
}

std::vector<MarkSet> combinatorial_type(const DualGraph& g) {
    require(g.hub().has_value(), ErrorCode::NoHub, "combinatorial type needs an elliptic l-fold point");
    int nv = g.vertex_count();
    Incidence inc = incidence(g);
    std::vector<int> seen(nv, 0);
    std::vector<MarkSet> parts;
    for (int b : g.hub()->branches) {
        if (seen[b]) continue;
        auto comp = reach(inc, b, [nv](int w) { return w != nv; });
        MarkSet part;
        for (int v = 0; v < nv; ++v)
            if (comp[v]) {
                seen[v] = 1;
                part = part | g.vertices()[v].marks;
            }
        require(!part.empty(), ErrorCode::InvalidArgument, "a branch component carries no marks");
        parts.push_back(part);
    }
    std::sort(parts.begin(), parts.end(), [](MarkSet a, MarkSet b) { return a.min_mark() < b.min_mark(); });
    return parts;
}

}  // namespace mstable
