#ifndef CFREE_GRAPHCORE_HPP
#define CFREE_GRAPHCORE_HPP

#include <optional>
#include <vector>

#include "cfree/budget.hpp"
#include "cfree/graph.hpp"

namespace cfree {

/// Shortest cycle length by BFS from every vertex, O(n·m).
GirthValue girth(const Graph& g);

/// Shortest cycle as a vertex sequence, if any. Picks the first root (in
/// vertex order) whose BFS attains the girth.
std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g);

/// True iff g has a cycle on exactly `length` vertices. Depth-limited DFS
/// anchored at the smallest vertex of the cycle, anchors split across
/// threads. Throws budget_exceeded when the node budget runs out.
bool has_cycle_of_length(const Graph& g, int length, const SearchBudget& budget = {});

/// Every cycle on exactly `length` vertices, once each: the sequence starts
/// at its smallest vertex and its second vertex is smaller than its last.
/// Sorted by anchor, then DFS order. Throws budget_exceeded past `max_cycles`.
std::vector<std::vector<Vertex>> enumerate_cycles(const Graph& g, int length, const SearchBudget& budget = {},
                                                  std::size_t max_cycles = 1'000'000);

/// Union-find acyclicity test (independent of girth()).
bool is_forest(const Graph& g);

/// Component id per vertex, numbered by smallest member.
std::vector<int> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Proper 2-coloring (0/1, smallest vertex of each component gets 0) or
/// nullopt when g has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);

// --- hypergraphs -----------------------------------------------------------

/// Any two hyperedges share at most one vertex.
bool is_linear(const UniformHypergraph& h);

/// Vertex–hyperedge incidence graph: vertices 0..n-1 are hypergraph vertices,
/// n + i is hyperedge i.
Graph incidence_graph(const UniformHypergraph& h);

/// Shortest Berge-cycle length. 2 iff two hyperedges share two vertices;
/// otherwise half the incidence-graph girth.
GirthValue berge_girth(const UniformHypergraph& h);

/// Hyperedge indices of one shortest Berge-cycle, in cycle order. For the
/// non-linear case this is the first pair (i, j), j minimal, sharing two
/// vertices.
std::optional<std::vector<std::size_t>> shortest_berge_cycle(const UniformHypergraph& h);

/// Covered vertices are mutually reachable through intersecting hyperedges.
/// The empty hypergraph is connected.
bool is_connected(const UniformHypergraph& h);

/// Hyperedge indices of the connected component with the most hyperedges
/// (ties: the component containing the smallest hyperedge index).
std::vector<std::size_t> largest_component(const UniformHypergraph& h);

/// Graph with uv whenever some hyperedge contains u and v.
Graph two_shadow(const UniformHypergraph& h);

} // namespace cfree

#endif // CFREE_GRAPHCORE_HPP
