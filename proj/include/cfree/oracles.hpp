#ifndef CFREE_ORACLES_HPP
#define CFREE_ORACLES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cfree/budget.hpp"
#include "cfree/graph.hpp"

// Exact solvers for small instances, used as ground truth. Running out of
// budget raises budget_exceeded; the heuristic switches return the first
// greedy solution instead and mark it non-optimal.

namespace cfree {

struct SubgraphOptimum {
    std::size_t size = 0;
    std::vector<std::size_t> edges;  // indices into g.edges(), ascending
    Graph subgraph;                  // same vertex set
    bool optimal = true;
};

/// Largest C4-free edge subset. Branch and bound per biconnected block
/// (every cycle lives inside one block).
SubgraphOptimum max_c4free_subgraph(const Graph& g, const SearchBudget& budget = {}, bool heuristic = false);

struct BipartiteGirthOptimum : SubgraphOptimum {
    std::vector<int> coloring;  // proper 2-coloring of the subgraph
};

/// Largest edge subset that is bipartite with girth > girth_gt.
BipartiteGirthOptimum max_bipartite_girth_subgraph(const Graph& g, int girth_gt, const SearchBudget& budget = {},
                                                   bool heuristic = false);

struct CutOptimum {
    std::size_t size = 0;
    std::vector<int> side;  // 0/1 per vertex, vertex 0 on side 0
};

/// Exact maximum cut by Gray-code enumeration (at most 63 vertices).
CutOptimum max_cut(const Graph& g, const SearchBudget& budget = {});

/// K_{u,w} with class A = 0..u-1 and B = u..u+w-1.
Graph complete_bipartite(int u, int w);

struct C4FreeBound {
    std::size_t bound = 0;         // w + C(u, 2)
    std::optional<Graph> witness;  // C4-free subgraph of K_{u,w} with that many edges, when w >= C(u, 2)
};

/// Upper bound on C4-free subgraphs of K_{u,w}; the witness gives every pair
/// of A vertices its own common B neighbour and hangs the rest on a_0.
C4FreeBound complete_bipartite_c4free_bound(int u, int w);

/// No cycle on exactly 2k vertices.
bool certify_c2k_free(const Graph& g, int k, const SearchBudget& budget = {});

/// Berge-cycles of each length 2..max_len (index = length), straight from
/// the definition: distinct hyperedges e_1..e_L and distinct vertices
/// v_i in e_i and e_{i+1}. Rotations and reflections are counted once.
std::vector<std::size_t> count_berge_cycles(const UniformHypergraph& h, int max_len, const SearchBudget& budget = {});

} // namespace cfree

#endif // CFREE_ORACLES_HPP
