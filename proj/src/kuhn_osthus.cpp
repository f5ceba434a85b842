#include "cfree/kuhn_osthus.hpp"

#include <algorithm>
#include <numeric>

namespace cfree {

std::size_t EdgeLayering::arc_count() const {
    std::size_t total = 0;
    for (const auto& s : successors) total += s.size();
    return total;
}

std::vector<std::vector<std::size_t>> EdgeLayering::layers() const {
    std::vector<std::vector<std::size_t>> out(layer_count);
    for (std::size_t i = 0; i < layer.size(); ++i) out[layer[i]].push_back(i);
    return out;
}

std::size_t EdgeLayering::largest_layer() const {
    std::vector<std::size_t> size(layer_count, 0);
    for (std::size_t l : layer) ++size[l];
    std::size_t best = 0;
    for (std::size_t l = 1; l < size.size(); ++l) {
        if (size[l] > size[best]) best = l;
    }
    return best;
}

EdgeLayering build_layering(const BipartiteGraph& bg) {
    const Graph& g = bg.graph();
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    EdgeLayering out;
    out.successors.resize(m);

    // (a, b) -> (a', b'): a' ranges over neighbors of b, b' over neighbors of a.
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < m; ++i) {
        auto [a, b] = bg.oriented(edges[i]);
        auto& succ = out.successors[i];
        for (Vertex a2 : g.neighbors(b)) {
            if (bg.rank(a2) <= bg.rank(a)) continue;
            for (Vertex b2 : g.neighbors(a)) {
                if (bg.rank(b2) <= bg.rank(b)) continue;
                if (auto j = g.edge_index(a2, b2)) succ.push_back(*j);
            }
        }
        std::sort(succ.begin(), succ.end());
    }

    // Both coordinates grow along every step, so (rank a, rank b) order is a
    // topological order.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> key(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto [a, b] = bg.oriented(edges[i]);
        key[i] = {bg.rank(a), bg.rank(b)};
    }
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return key[x] < key[y]; });

    out.layer.assign(m, 0);
    for (std::size_t i : order) {
        for (std::size_t j : out.successors[i]) {
            out.layer[j] = std::max(out.layer[j], out.layer[i] + 1);
        }
    }
    out.layer_count = m == 0 ? 0 : *std::max_element(out.layer.begin(), out.layer.end()) + 1;
    return out;
}

Graph extract_c4free(const BipartiteGraph& g) {
    EdgeLayering layering = build_layering(g);
    if (layering.layer_count == 0) return Graph(g.graph().vertex_count());
    auto layers = layering.layers();
    return g.graph().edge_subgraph(layers[layering.largest_layer()]);
}

std::size_t longest_chain_length(const BipartiteGraph& g) { return build_layering(g).layer_count; }

} // namespace cfree
