#ifndef CFREE_KUHN_OSTHUS_HPP
#define CFREE_KUHN_OSTHUS_HPP

#include <cstddef>
#include <vector>

#include "cfree/graph.hpp"

// C4-free subgraph extraction from a bipartite graph.
//
// Edges (a, b) are partially ordered by "C4 steps": (a, b) -> (a', b') when
// a < a' and b < b' in the class orders and ab, ab', a'b, a'b' are all edges.
// A chain of k edges along such steps traces a cycle of length 2k, so a
// C_{2k}-free graph has chains of at most k - 1 edges. Every C4 contains one
// step, hence each antichain is C4-free; the longest-path layering splits the
// edges into h antichains and the largest one has at least e(G)/h edges.

namespace cfree {

struct EdgeLayering {
    /// Edge i of the graph is graph().edges()[i]; successors[i] are the
    /// edges reachable by one C4 step.
    std::vector<std::vector<std::size_t>> successors;
    /// 0-based longest-chain level of each edge (a chain ending at edge i
    /// has at most layer[i] + 1 edges).
    std::vector<std::size_t> layer;
    /// Number of layers = number of edges on a longest chain (0 if no edges).
    std::size_t layer_count = 0;

    std::size_t arc_count() const;
    /// Edge indices in each layer, ascending.
    std::vector<std::vector<std::size_t>> layers() const;
    /// Largest layer, ties to the smallest layer index.
    std::size_t largest_layer() const;
};

EdgeLayering build_layering(const BipartiteGraph& g);

/// Subgraph on the same vertex set formed by the largest layer.
Graph extract_c4free(const BipartiteGraph& g);

/// Longest chain length in the edge poset (= layer count).
std::size_t longest_chain_length(const BipartiteGraph& g);

} // namespace cfree

#endif // CFREE_KUHN_OSTHUS_HPP
