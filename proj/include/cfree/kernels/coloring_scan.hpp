#ifndef CFREE_KERNELS_COLORING_SCAN_HPP
#define CFREE_KERNELS_COLORING_SCAN_HPP

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "cfree/graph.hpp"

// Exhaustive scans over all b^n vertex colorings of a hypergraph.
//
// Colorings are numbered lexicographically with vertex 0 as the most
// significant base-b digit. Each hyperedge gets an integer key from its
// colors: sum of (a+1)^color for multisets, sum of color·b^position for
// sequences. The parallel scans split the space by a prefix of leading
// vertices and walk each block with an odometer that updates keys, counts and
// the color census incrementally; the serial scans recompute everything per
// coloring and are kept as the reference.

namespace cfree::kernels {

enum class KeyKind { multiset, sequence };

struct ScanProblem {
    int n = 0;
    int b = 2;
    int a = 2;
    KeyKind kind = KeyKind::multiset;
    std::vector<Vertex> flat;                          // hyperedge e occupies [e*a, e*a + a)
    std::vector<std::vector<std::uint32_t>> incidence; // per vertex: e*a + position
    std::vector<std::uint32_t> weight;                 // weight[color * a + position]
    std::uint32_t key_space = 0;

    std::size_t m() const { return a == 0 ? 0 : flat.size() / static_cast<std::size_t>(a); }
    std::uint64_t coloring_count() const;  // b^n, saturating
};

ScanProblem make_problem(int n, int b, int a, KeyKind kind, const std::vector<Hyperedge>& edges);

/// Key of every hyperedge under one coloring.
std::vector<std::uint32_t> keys_of(const ScanProblem& p, const std::vector<int>& colors);
/// Digits of a coloring index.
std::vector<int> decode_coloring(std::uint64_t index, int n, int b);

// --- maximum number of hyperedges whose key is a member -----------------------

struct BestResult {
    std::size_t q = 0;
    std::uint64_t index = 0;  // smallest maximizing coloring
};

namespace serial {
BestResult best(const ScanProblem& p, const std::vector<char>& member);
}
namespace parallel {
BestResult best(const ScanProblem& p, const std::vector<char>& member);
}

// --- worst deviation from census-dependent expected counts --------------------

/// Expected count per (census, slot); slot s checks key slot_keys[s].
class DeviationTable {
public:
    using Expectation = std::function<double(const std::vector<int>& census, std::size_t slot)>;

    DeviationTable(const ScanProblem& p, std::vector<std::uint32_t> slot_keys, const Expectation& expected);

    std::size_t slots() const { return slot_keys_.size(); }
    std::uint32_t slot_key(std::size_t s) const { return slot_keys_[s]; }
    std::uint64_t census_code(const std::vector<int>& census) const;
    std::uint64_t census_weight(int color) const { return census_weight_[static_cast<std::size_t>(color)]; }
    /// Row of expected counts for a census code.
    const double* row(std::uint64_t code) const;

private:
    std::vector<std::uint32_t> slot_keys_;
    std::vector<std::uint64_t> census_weight_;
    std::vector<double> expected_;
    std::vector<std::int32_t> dense_;                       // code -> row, when small
    std::unordered_map<std::uint64_t, std::int32_t> sparse_; // otherwise
};

struct WorstResult {
    double deviation = -1.0;
    std::uint64_t index = 0;  // coloring index (or sample number in sampled scans)
    std::size_t slot = 0;
    std::size_t count = 0;
    double expected = 0.0;
};

/// Deviation of one coloring (largest over slots, ties to the smaller slot).
WorstResult deviation_of(const ScanProblem& p, const DeviationTable& t, const std::vector<int>& colors);

namespace serial {
WorstResult worst_deviation(const ScanProblem& p, const DeviationTable& t);
}
namespace parallel {
WorstResult worst_deviation(const ScanProblem& p, const DeviationTable& t);
}

} // namespace cfree::kernels

#endif // CFREE_KERNELS_COLORING_SCAN_HPP
