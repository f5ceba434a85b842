#ifndef CFREE_CONSTRUCTIONS_HPP
#define CFREE_CONSTRUCTIONS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cfree/budget.hpp"
#include "cfree/graph.hpp"

namespace cfree {

enum class BlowupKind { clique, bipartite };

struct BlowupGraph {
    Graph graph;
    /// Vertices of each hyperedge, as given (sorted for cliques, in sequence
    /// order for bipartite blowups).
    std::vector<Hyperedge> parts;
    BlowupKind kind = BlowupKind::clique;
};

/// Each hyperedge becomes a clique on its vertices. Throws not_linear.
BlowupGraph clique_blowup(const UniformHypergraph& h);

/// Each oriented hyperedge (v_1..v_{k-1+l}) becomes the complete bipartite
/// graph between v_1..v_{k-1} and the last l vertices. Throws
/// uniformity_mismatch or not_linear.
BlowupGraph bipartite_blowup(const OrientedHypergraph& o, int k, int l);

enum class EdgeLabel { fat, thin, first_copy, second_copy, connector };

std::string to_string(EdgeLabel label);

struct PastedGraph {
    Graph graph;
    std::vector<EdgeLabel> labels;       // per edge, parallel to graph.edges()
    std::vector<std::size_t> provenance; // source edge / B vertex / hyperedge / covered vertex
};

/// Base graph g1 (ids 0..N-1), its mirror (v + N) and, for every B vertex b,
/// a path of l - 2 edges from b to b + N through fresh vertices numbered from
/// 2N. Needs g1 connected (not_connected) with minimum degree 2 (min_degree).
/// Provenance: g1 edge index for copies, the B vertex for connectors.
PastedGraph paste_doubled(const BipartiteGraph& g1, int l);

/// Vertex i of h becomes u_i = i and u'_i = n + i joined by a fat edge (only
/// for covered vertices); hyperedge {i < j < k} adds the thin edges u'_i u_j,
/// u'_j u_k, u'_k u_i, closing a C6 with the three fat edges. Throws
/// not_three_uniform or not_linear. Provenance: hyperedge index for thin
/// edges, the vertex i for fat edges.
PastedGraph paste_hyperdouble(const UniformHypergraph& h);

struct PastingCertificate {
    bool pasted = false;
    std::string reason;                      // why not, when pasted is false
    std::vector<std::vector<Vertex>> cycles; // every C_{2l}, canonical form
    std::vector<std::size_t> build_order;    // cycle indices; each shares an edge with an earlier one
};

/// True iff every edge lies on a C_{2l} and those cycles, joined when they
/// share an edge, form one connected family. Throws budget_exceeded.
PastingCertificate verify_pasted(const Graph& g, int l, const SearchBudget& budget = {},
                                 std::size_t max_cycles = 1'000'000);

/// At most one thin edge runs between the endpoint sets of any two fat edges.
bool claim_one_thin_between_fat(const PastedGraph& pg);

struct DecompositionCheck {
    std::size_t edges = 0;           // e(B)
    std::size_t non_monochromatic = 0;
    std::size_t bound = 0;           // (a - 1) * non_monochromatic
    bool proper = true;              // every B edge is bichromatic
    bool holds = false;              // proper and edges <= bound
};

/// For a subgraph B of the clique blowup of h and a 2-coloring of the
/// vertices: counts e(B) against (a - 1) times the hyperedges that are not
/// monochromatic under the coloring.
DecompositionCheck decomposition_inequality(const UniformHypergraph& h, const Graph& b,
                                            const std::vector<int>& coloring);

} // namespace cfree

#endif // CFREE_CONSTRUCTIONS_HPP
