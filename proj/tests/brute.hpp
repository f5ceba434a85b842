#ifndef CFREE_TESTS_BRUTE_HPP
#define CFREE_TESTS_BRUTE_HPP

// Deliberately naive reference implementations. Nothing here shares code
// with the library beyond the Graph / hypergraph containers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "cfree/graph.hpp"
#include "cfree/rng.hpp"

namespace brute {

using cfree::Edge;
using cfree::Graph;
using cfree::UniformHypergraph;
using cfree::Vertex;

inline std::vector<std::vector<char>> matrix(const Graph& g) {
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(g.vertex_count()),
                                       std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0));
    for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    return adj;
}

/// Some L-subset of vertices, in some cyclic order, is a cycle.
inline bool has_cycle(const Graph& g, int L) {
    const int n = g.vertex_count();
    if (L < 3 || L > n) return false;
    auto adj = matrix(g);
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.end() - L, pick.end(), 1);
    do {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (pick[v]) vs.push_back(v);
        // fix vs[0] first, permute the rest
        std::sort(vs.begin() + 1, vs.end());
        do {
            bool ok = true;
            for (int i = 0; i < L && ok; ++i) ok = adj[vs[i]][vs[(i + 1) % L]];
            if (ok) return true;
        } while (std::next_permutation(vs.begin() + 1, vs.end()));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return false;
}

/// 0 for a forest.
inline int girth(const Graph& g) {
    for (int L = 3; L <= g.vertex_count(); ++L)
        if (has_cycle(g, L)) return L;
    return 0;
}

inline bool c4free(const std::vector<std::vector<char>>& adj) {
    const int n = static_cast<int>(adj.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (adj[a][b] && adj[b][c] && adj[c][d] && adj[d][a]) return false;
                }
    return true;
}

inline bool two_colorable(const Graph& g) {
    const int n = g.vertex_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const Edge& e : g.edges()) ok = ok && (((mask >> e.u) ^ (mask >> e.v)) & 1);
        if (ok) return true;
    }
    return false;
}

/// Largest edge subset satisfying `keep`, by trying all of them.
inline std::size_t max_subgraph(const Graph& g, const std::function<bool(const Graph&)>& keep) {
    const std::size_t m = g.edge_count();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::size_t pc = static_cast<std::size_t>(__builtin_popcount(mask));
        if (pc <= best) continue;
        std::vector<Edge> es;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) es.push_back(g.edges()[i]);
        if (keep(Graph(g.vertex_count(), es))) best = pc;
    }
    return best;
}

inline std::size_t max_cut(const Graph& g) {
    const int n = g.vertex_count();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::size_t c = 0;
        for (const Edge& e : g.edges()) c += ((mask >> e.u) ^ (mask >> e.v)) & 1;
        best = std::max(best, c);
    }
    return best;
}

/// Shortest Berge-cycle straight from the definition; 0 when there is none.
inline int berge_girth(const UniformHypergraph& h) {
    const int m = static_cast<int>(h.edge_count());
    int best = 0;
    std::vector<int> edges;
    std::vector<Vertex> verts;
    auto contains = [&](int e, Vertex v) {
        const auto& he = h.hyperedge(static_cast<std::size_t>(e));
        return std::find(he.begin(), he.end(), v) != he.end();
    };
    std::function<void()> grow = [&] {
        const int len = static_cast<int>(edges.size());
        if (best && len >= best) return;
        // try to close: v_len in e_len and e_1, distinct from earlier v's
        if (len >= 2) {
            for (Vertex v : h.hyperedge(static_cast<std::size_t>(edges.back()))) {
                if (!contains(edges.front(), v)) continue;
                if (std::find(verts.begin(), verts.end(), v) != verts.end()) continue;
                best = len;
                return;
            }
        }
        for (Vertex v : h.hyperedge(static_cast<std::size_t>(edges.back()))) {
            if (std::find(verts.begin(), verts.end(), v) != verts.end()) continue;
            for (int f = 0; f < m; ++f) {
                if (std::find(edges.begin(), edges.end(), f) != edges.end() || !contains(f, v)) continue;
                edges.push_back(f);
                verts.push_back(v);
                grow();
                edges.pop_back();
                verts.pop_back();
            }
        }
    };
    for (int e = 0; e < m; ++e) {
        edges = {e};
        verts.clear();
        grow();
    }
    return best;
}

inline Graph random_graph(int n, double p, std::uint64_t seed) {
    cfree::SplitMix64 rng(seed);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) es.push_back({u, v});
    return Graph(n, es);
}

inline Graph cycle(int n) {
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) es.push_back(Edge::normalized(v, (v + 1) % n));
    return Graph(n, es);
}

inline Graph complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph(n, es);
}

} // namespace brute

#endif
