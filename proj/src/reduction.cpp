#include "mstable/reduction.hpp"

#include "mstable/error.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace mstable {

int ReductionTrace::d_psi() const {
    int total = 0;
    for (const auto& s : steps) total += s.n_i;
    return total;
}

int ReductionTrace::d_delta0() const {
    int total = 0;
    for (const auto& s : steps) total -= s.m_i;
    return total;
}

int ReductionTrace::d_psi_minus_delta0() const { return d_psi() - d_delta0(); }

namespace {

using Vertex = DualGraph::Vertex;
using Edge = DualGraph::Edge;
using Hub = DualGraph::Hub;

struct Work {
    int n = 0;
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    std::optional<Hub> hub;

    explicit Work(const DualGraph& g) : n(g.n()), vs(g.vertices()), es(g.edges()), hub(g.hub()) {}
    DualGraph build() const { return DualGraph(n, vs, es, hub); }

    // Keeps the vertices flagged in `keep`, renumbering edges and hub branches.
    void retain(const std::vector<bool>& keep) {
        std::vector<int> remap(vs.size(), -1);
        std::vector<Vertex> nvs;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (keep[i]) {
                remap[i] = static_cast<int>(nvs.size());
                nvs.push_back(vs[i]);
            }
        std::vector<Edge> nes;
        for (const auto& e : es)
            if (remap[e.a] >= 0 && remap[e.b] >= 0) nes.push_back({remap[e.a], remap[e.b], e.multiplicity});
        if (hub) {
            Hub h;
            for (int b : hub->branches)
                if (remap[b] >= 0) h.branches.push_back(remap[b]);
            hub = h.branches.empty() ? std::nullopt : std::optional<Hub>(h);
        }
        vs = std::move(nvs);
        es = std::move(nes);
    }
};

// An edge of multiplicity d becomes d nodes joined by d-1 semistable components.
void desingularize(Work& w) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < w.es.size(); ++i) {
        Edge e = w.es[i];
        int prev = e.a;
        for (int j = 1; j < e.multiplicity; ++j) {
            int x = static_cast<int>(w.vs.size());
            w.vs.push_back({"c" + std::to_string(i) + "_" + std::to_string(j), 0, {}});
            out.push_back({prev, x, 1});
            prev = x;
        }
        out.push_back({prev, e.b, 1});
    }
    w.es = std::move(out);
}

bool branch_of(const Work& w, int v) {
    return w.hub && std::find(w.hub->branches.begin(), w.hub->branches.end(), v) != w.hub->branches.end();
}

// Contracts rational components with at most two special points that are not hub
// branches; the two incidences of a bridge component merge into one node.
void blow_down_semistable(Work& w) {
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < static_cast<int>(w.vs.size()) && !changed; ++v) {
            if (w.vs[v].genus != 0 || branch_of(w, v)) continue;
            std::vector<int> incident;
            bool loop = false;
            for (int i = 0; i < static_cast<int>(w.es.size()); ++i) {
                if (w.es[i].a != v && w.es[i].b != v) continue;
                if (w.es[i].is_loop()) loop = true;
                incident.push_back(i);
            }
            if (loop) continue;
            int marks = w.vs[v].marks.size();
            int special = marks + static_cast<int>(incident.size());
            if (special > 2 || incident.empty()) continue;

            std::vector<bool> keep(w.vs.size(), true);
            keep[v] = false;
            if (incident.size() == 2) {
                const Edge& e1 = w.es[incident[0]];
                const Edge& e2 = w.es[incident[1]];
                int u = e1.a == v ? e1.b : e1.a;
                int x = e2.a == v ? e2.b : e2.a;
                w.es.push_back({u, x, e1.multiplicity + e2.multiplicity});
            } else {
                const Edge& e = w.es[incident[0]];
                int u = e.a == v ? e.b : e.a;
                w.vs[u].marks = w.vs[u].marks | w.vs[v].marks;
            }
            w.retain(keep);
            changed = true;
        }
    }
}

void sprout_hub(Work& w, const Subcurve& z, int step, ReductionStep& rec) {
    std::vector<int> outside;
    MarkSet marks;
    for (int v : z.vertices) marks = marks | w.vs[v].marks;
    for (const auto& e : w.es) {
        bool a_in = z.contains(e.a), b_in = z.contains(e.b);
        if (a_in != b_in) outside.push_back(a_in ? e.b : e.a);
    }
    rec.n_i = marks.size();
    rec.m_i = static_cast<int>(outside.size());

    Hub h;
    for (int p : marks.members()) {
        h.branches.push_back(static_cast<int>(w.vs.size()));
        w.vs.push_back({"s" + std::to_string(step) + "m" + std::to_string(p), 0, MarkSet::of({p})});
    }
    h.branches.insert(h.branches.end(), outside.begin(), outside.end());
    w.hub = h;

    std::vector<bool> keep(w.vs.size(), true);
    for (int v : z.vertices) keep[v] = false;
    // retain() drops hub branches on removed vertices; the new hub has none
    w.retain(keep);
}

}  // namespace

ReductionResult mstable_reduce(const DualGraph& g, int m) {
    require(m >= 0 && m < g.n(), ErrorCode::OutOfRange, "m must satisfy 0 <= m <= n-1");
    require_genus_one(g);
    if (g.hub())
        require(g.hub()->multiplicity() <= m, ErrorCode::PreconditionViolated,
                "input has an elliptic " + std::to_string(g.hub()->multiplicity()) + "-fold point, above m=" +
                    std::to_string(m));

    Work w(g);
    desingularize(w);
    ReductionTrace trace;
    const int bound = g.n() + static_cast<int>(w.es.size());
    for (int step = 0;; ++step) {
        DualGraph cur = w.build();
        require_genus_one(cur);
        Subcurve z = minimal_elliptic_subcurve(cur);
        if (level(cur, z) > m) break;
        require(step < bound, ErrorCode::NonTermination, "reduction exceeded " + std::to_string(bound) + " steps");

        std::size_t bridges_before = disconnecting_edges(cur).size();
        ReductionStep rec;
        sprout_hub(w, z, step, rec);
        trace.steps.push_back(rec);

        DualGraph next = w.build();
        require(arithmetic_genus(next) == 1, ErrorCode::InvariantBreach, "genus changed during reduction");
        require(disconnecting_edges(next).size() < bridges_before, ErrorCode::InvariantBreach,
                "disconnecting nodes did not decrease");
        require(rec.l_i() >= 1 && rec.l_i() <= m, ErrorCode::InvariantBreach, "step level out of range");
    }
    blow_down_semistable(w);

    DualGraph out = w.build().normalized();
    require(arithmetic_genus(out) == 1, ErrorCode::InvariantBreach, "genus changed during blow-down");
    StabilityReport report = is_m_stable(out, m);
    if (!report.stable) {
        std::string why;
        for (const auto& v : report.violations) why += (why.empty() ? "" : "; ") + v;
        fail(ErrorCode::PreconditionViolated, "input does not reduce to an m-stable curve: " + why);
    }
    return {out, trace};
}

DualGraph phi_limit(const DualGraph& g, int n, int m) {
    require(g.n() == n, ErrorCode::PreconditionViolated, "graph has " + std::to_string(g.n()) + " marks, expected n");
    require(m >= 0 && m < n, ErrorCode::OutOfRange, "m must satisfy 0 <= m <= n-1");
    require(!g.hub(), ErrorCode::PreconditionViolated, "phi_limit expects a nodal curve");
    require_genus_one(g);
    auto nodes = disconnecting_nodes(g);
    require(nodes.size() == 1, ErrorCode::PreconditionViolated,
            "expected exactly one disconnecting node, found " + std::to_string(nodes.size()));
    MarkSet s = nodes.front().type;
    require(s.size() >= n - m + 1 && s.size() <= n, ErrorCode::PreconditionViolated,
            "node type {" + s.to_string() + "} is not contracted on the m-stable model");

    const Edge& bridge = g.edges()[nodes.front().edge];
    Subcurve core = minimal_elliptic_subcurve(g);
    int rational = core.contains(bridge.a) ? bridge.b : bridge.a;
    require(g.vertices()[rational].marks == s, ErrorCode::PreconditionViolated,
            "genus-zero side must be a single component");

    std::vector<Vertex> vs{g.vertices()[rational]};
    Hub h;
    for (int p = 1; p <= n; ++p) {
        if (s.contains(p)) continue;
        h.branches.push_back(static_cast<int>(vs.size()));
        vs.push_back({"s0m" + std::to_string(p), 0, MarkSet::of({p})});
    }
    h.branches.push_back(0);
    return DualGraph(n, vs, {}, h).normalized();
}

bool is_phi_regular_at(const DualGraph& g, int n, int m) {
    require(g.n() == n, ErrorCode::PreconditionViolated, "graph has " + std::to_string(g.n()) + " marks, expected n");
    require(m >= 0 && m < n, ErrorCode::OutOfRange, "m must satisfy 0 <= m <= n-1");
    require(!g.hub(), ErrorCode::PreconditionViolated, "regularity is tested at nodal curves");
    auto nodes = disconnecting_nodes(g);
    if (nodes.size() == 1) return true;
    return std::none_of(nodes.begin(), nodes.end(), [&](const DisconnectingNode& d) { return d.type.size() >= n - m + 1; });
}

bool same_shape(const DualGraph& a, const DualGraph& b) {
    if (a.n() != b.n() || a.vertex_count() != b.vertex_count() || a.edges().size() != b.edges().size() ||
        a.hub().has_value() != b.hub().has_value())
        return false;
    if (a.hub() && a.hub()->multiplicity() != b.hub()->multiplicity()) return false;

    // shared color dictionary so colors are comparable across the two graphs
    std::map<std::vector<long long>, int> dict;
    auto intern = [&](std::vector<long long> key) {
        auto [it, fresh] = dict.emplace(std::move(key), static_cast<int>(dict.size()));
        return it->second;
    };
    auto initial = [&](const DualGraph& g) {
        std::vector<int> c(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            c[v] = intern({-1, g.vertices()[v].genus, static_cast<long long>(g.vertices()[v].marks.bits()),
                           g.hub_incidences(v)});
        return c;
    };
    auto refine = [&](const DualGraph& g, const std::vector<int>& c) {
        std::vector<int> out(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<long long> nb;
            for (const auto& e : g.edges()) {
                if (e.a == v) nb.push_back(static_cast<long long>(c[e.b]) * 1000 + e.multiplicity);
                if (e.b == v) nb.push_back(static_cast<long long>(c[e.a]) * 1000 + e.multiplicity);
            }
            std::sort(nb.begin(), nb.end());
            nb.insert(nb.begin(), {-2, c[v]});
            out[v] = intern(std::move(nb));
        }
        return out;
    };
    std::vector<int> ca = initial(a), cb = initial(b);
    for (int round = 0; round < a.vertex_count() + 1; ++round) {
        ca = refine(a, ca);
        cb = refine(b, cb);
    }
    auto edge_colors = [](const DualGraph& g, const std::vector<int>& c) {
        std::vector<std::tuple<int, int, int>> out;
        for (const auto& e : g.edges())
            out.emplace_back(std::min(c[e.a], c[e.b]), std::max(c[e.a], c[e.b]), e.multiplicity);
        std::sort(out.begin(), out.end());
        return out;
    };
    auto hub_colors = [](const DualGraph& g, const std::vector<int>& c) {
        std::vector<int> out;
        if (g.hub())
            for (int br : g.hub()->branches) out.push_back(c[br]);
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<int> sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb && edge_colors(a, ca) == edge_colors(b, cb) && hub_colors(a, ca) == hub_colors(b, cb);
}

}  // namespace mstable
