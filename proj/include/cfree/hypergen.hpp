#ifndef CFREE_HYPERGEN_HPP
#define CFREE_HYPERGEN_HPP

#include <cstdint>
#include <vector>

#include "cfree/graph.hpp"
#include "cfree/rng.hpp"

namespace cfree {

struct GenConfig {
    int a = 3;            // uniformity
    Vertex n = 0;         // vertices
    std::size_t m = 0;    // hyperedges
    int k = 2;            // girth threshold (used by repair / high-girth helpers)
    std::uint64_t seed = 0;

    /// Throws config_invalid / density_too_high.
    void validate() const;
};

/// C(n, a) saturated at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t a);

/// m distinct hyperedges, each uniform over a-subsets (rejection on
/// duplicates). Deterministic in the seed.
UniformHypergraph random_hypergraph(const GenConfig& cfg);

/// Same draws as random_hypergraph, keeping the order in which each
/// hyperedge's vertices were drawn: the underlying hypergraph equals
/// random_hypergraph(cfg) and every order is uniform and independent.
OrientedHypergraph random_oriented(const GenConfig& cfg);

struct RepairResult {
    UniformHypergraph hypergraph;
    std::vector<std::size_t> deleted;  // indices into the input, in deletion order
};

/// Deletes the lowest-index hyperedge of a current shortest Berge-cycle
/// until the Berge-girth exceeds k.
RepairResult repair_girth_logged(const UniformHypergraph& h, int k);
UniformHypergraph repair_girth(const UniformHypergraph& h, int k);

/// Oriented variant: repairs the underlying hypergraph, keeps orders.
OrientedHypergraph repair_girth(const OrientedHypergraph& o, int k);

/// Generate, repair to Berge-girth > cfg.k, then top up with further random
/// hyperedges (same stream) that keep the girth, up to `attempts` draws.
/// May return fewer than cfg.m hyperedges.
UniformHypergraph random_high_girth_hypergraph(const GenConfig& cfg, std::size_t attempts = 0);
OrientedHypergraph random_high_girth_oriented(const GenConfig& cfg, std::size_t attempts = 0);

/// Smallest m with 2 exp(-2 eps^2 m) <= delta.
std::size_t hoeffding_sample_size(double eps, double delta);

/// Connected bipartite graph, classes A = 0..n-1 and B = n..2n-1, girth at
/// least target_girth and minimum degree at least min_degree. Degree-first
/// greedy insertion of random girth-safe edges, then a random maximal
/// densification pass, then tree edges between components. Retries with
/// fresh sub-streams; throws infeasible when every retry fails.
BipartiteGraph high_girth_bipartite(Vertex n_per_side, int target_girth, int min_degree, std::uint64_t seed,
                                    bool densify = true, int retries = 64);

/// m distinct uniform edges between A = 0..n-1 and B = n..2n-1.
BipartiteGraph random_bipartite(Vertex n_per_side, std::size_t m, std::uint64_t seed);

/// Visits all A-B pairs in random order and keeps each one that does not
/// close a cycle of length 2k: a maximal C_{2k}-free bipartite graph.
BipartiteGraph random_maximal_c2k_free_bipartite(Vertex n_per_side, int k, std::uint64_t seed);

} // namespace cfree

#endif // CFREE_HYPERGEN_HPP
