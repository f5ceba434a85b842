#ifndef CFREE_KERNELS_MAX_CUT_HPP
#define CFREE_KERNELS_MAX_CUT_HPP

#include <cstdint>
#include <vector>

#include "cfree/budget.hpp"

// Exhaustive maximum cut over bitmask adjacency (at most 63 vertices).
// Vertex 0 stays on side 0, so 2^(n-1) bipartitions are visited. The
// parallel kernel fixes the high bits per block and walks the low bits in
// Gray-code order, updating the cut by one vertex move per step; the serial
// kernel recounts every bipartition from scratch.

namespace cfree::kernels {

struct CutResult {
    std::size_t size = 0;
    std::uint64_t mask = 0;  // bit v set iff v is on side 1; smallest among maximizers
};

inline constexpr int kMaxCutVertices = 63;

namespace serial {
/// Stops early once the meter runs out; callers check meter.exhausted().
CutResult max_cut(const std::vector<std::uint64_t>& adjacency, BudgetMeter& meter);
}
namespace parallel {
CutResult max_cut(const std::vector<std::uint64_t>& adjacency, BudgetMeter& meter);
}

} // namespace cfree::kernels

#endif // CFREE_KERNELS_MAX_CUT_HPP
