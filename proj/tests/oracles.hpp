#pragma once
// Independent reference computations used to freeze expected values in tests.

#include "mstable/dualgraph.hpp"
#include "mstable/picard.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using mstable::DualGraph;
using mstable::MarkSet;
using mstable::Rational;

// Dense class over every subset of [n] with |S| >= 2; index = bitmask.
struct Dense {
    int n;
    Rational lambda;
    std::vector<Rational> coeff;
    explicit Dense(int n_) : n(n_), coeff(std::size_t(1) << n_) {}
};

inline int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

// D(s) = s lambda + psi - delta from the defining relations, summing psi_i term by term.
inline Dense ds_on_mbar(int n, const Rational& s) {
    Dense d(n);
    d.lambda = s;
    for (int i = 0; i < n; ++i) {
        d.lambda += Rational(1);
        for (std::uint64_t S = 0; S < d.coeff.size(); ++S)
            if (popcount(S) >= 2 && ((S >> i) & 1)) d.coeff[S] += Rational(1);
    }
    d.lambda -= Rational(12);
    for (std::uint64_t S = 0; S < d.coeff.size(); ++S)
        if (popcount(S) >= 2) d.coeff[S] -= Rational(1);
    return d;
}

inline Dense push_then_pull(const Dense& d, int m) {
    Dense out(d.n);
    out.lambda = d.lambda;
    for (std::uint64_t S = 0; S < d.coeff.size(); ++S) {
        int k = popcount(S);
        if (k >= 2 && k <= d.n - m) out.coeff[S] = d.coeff[S];
        if (k > d.n - m) out.coeff[S] += d.lambda;  // lambda pulls back to lambda + exceptional
    }
    return out;
}

inline std::int64_t stirling_inclusion_exclusion(int n, int k) {
    // S(n,k) = 1/k! sum_j (-1)^j C(k,j) (k-j)^n
    __int128 total = 0, binom = 1;
    for (int j = 0; j <= k; ++j) {
        __int128 pw = 1;
        for (int t = 0; t < n; ++t) pw *= (k - j);
        total += (j % 2 ? -1 : 1) * binom * pw;
        binom = binom * (k - j) / (j + 1);
    }
    __int128 fact = 1;
    for (int j = 2; j <= k; ++j) fact *= j;
    return static_cast<std::int64_t>(total / fact);
}

// ---------------------------------------------------------------------------
// Graph oracles by exhaustive search over vertex subsets.

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

struct SubInfo {
    bool connected = false;
    int genus = 0;
    bool has_internal_bridge = false;
    int level = 0;
};

// Hub is part of the subset whenever one of its branches is.
inline SubInfo inspect(const DualGraph& g, std::uint64_t mask) {
    SubInfo info;
    int nv = g.vertex_count();
    bool hub_in = false, hub_full = bool(g.hub());
    if (g.hub())
        for (int b : g.hub()->branches) {
            if ((mask >> b) & 1) hub_in = true;
            else hub_full = false;
        }
    auto component_count = [&](int skip_edge) {
        Dsu d(nv + 1);
        for (int i = 0; i < (int)g.edges().size(); ++i) {
            if (i == skip_edge) continue;
            auto e = g.edges()[i];
            if (((mask >> e.a) & 1) && ((mask >> e.b) & 1)) d.unite(e.a, e.b);
        }
        if (hub_in)
            for (int b : g.hub()->branches)
                if ((mask >> b) & 1) d.unite(nv, b);
        std::vector<int> roots;
        for (int v = 0; v < nv; ++v)
            if ((mask >> v) & 1) roots.push_back(d.find(v));
        std::sort(roots.begin(), roots.end());
        return (int)(std::unique(roots.begin(), roots.end()) - roots.begin());
    };
    info.connected = component_count(-1) == 1;
    int vcount = 0, ecount = 0, gsum = 0;
    for (int v = 0; v < nv; ++v)
        if ((mask >> v) & 1) {
            ++vcount;
            gsum += g.vertices()[v].genus;
            info.level += g.vertices()[v].marks.size();
        }
    for (int i = 0; i < (int)g.edges().size(); ++i) {
        auto e = g.edges()[i];
        bool a = (mask >> e.a) & 1, b = (mask >> e.b) & 1;
        if (a && b) {
            ++ecount;
            if (!e.is_loop() && component_count(i) > 1) info.has_internal_bridge = true;
        }
        if (a != b) ++info.level;
    }
    if (hub_in) {
        ++vcount;
        for (int b : g.hub()->branches)
            if ((mask >> b) & 1) ++ecount;
        if (hub_full) ++gsum;
        else ++info.level;
    }
    info.genus = gsum + ecount - vcount + 1;
    return info;
}

// All vertex masks of connected genus-one subcurves without internal disconnecting nodes.
inline std::vector<std::uint64_t> minimal_candidates(const DualGraph& g) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << g.vertex_count()); ++mask) {
        SubInfo s = inspect(g, mask);
        if (s.connected && s.genus == 1 && !s.has_internal_bridge) out.push_back(mask);
    }
    return out;
}

inline int min_genus_one_level(const DualGraph& g) {
    int best = 1 << 30;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << g.vertex_count()); ++mask) {
        SubInfo s = inspect(g, mask);
        if (s.connected && s.genus == 1) best = std::min(best, s.level);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Random genus-one graphs: a genus source (elliptic vertex, cycle or hub) with
// random trees attached and marks scattered over all vertices.

inline DualGraph random_genus_one(std::mt19937& rng, int n, int max_vertices, bool allow_hub = true) {
    std::uniform_int_distribution<int> pick_kind(0, allow_hub ? 2 : 1);
    int kind = pick_kind(rng);
    std::vector<DualGraph::Vertex> vs;
    std::vector<DualGraph::Edge> es;
    std::optional<DualGraph::Hub> hub;
    auto add = [&](int genus) {
        vs.push_back({"v" + std::to_string(vs.size()), genus, {}});
        return (int)vs.size() - 1;
    };
    if (kind == 0) {
        add(1);
    } else if (kind == 1) {
        int len = std::uniform_int_distribution<int>(1, std::max(1, std::min(3, max_vertices)))(rng);
        for (int i = 0; i < len; ++i) add(0);
        if (len == 1) es.push_back({0, 0, 1});
        else
            for (int i = 0; i < len; ++i) es.push_back({i, (i + 1) % len, 1});
    } else {
        int l = std::uniform_int_distribution<int>(1, std::max(1, std::min(3, max_vertices)))(rng);
        DualGraph::Hub h;
        for (int i = 0; i < l; ++i) h.branches.push_back(add(0));
        hub = h;
    }
    int extra = std::uniform_int_distribution<int>(0, std::max(0, max_vertices - (int)vs.size()))(rng);
    for (int i = 0; i < extra; ++i) {
        int parent = std::uniform_int_distribution<int>(0, (int)vs.size() - 1)(rng);
        int v = add(0);
        es.push_back({parent, v, 1});
    }
    std::uniform_int_distribution<int> pick_v(0, (int)vs.size() - 1);
    for (int p = 1; p <= n; ++p) {
        int v = pick_v(rng);
        vs[v].marks = vs[v].marks.with(p);
    }
    return DualGraph(n, vs, es, hub);
}

}  // namespace oracle
