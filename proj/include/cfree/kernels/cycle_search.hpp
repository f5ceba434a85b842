#ifndef CFREE_KERNELS_CYCLE_SEARCH_HPP
#define CFREE_KERNELS_CYCLE_SEARCH_HPP

#include <cstddef>
#include <vector>

#include "cfree/budget.hpp"
#include "cfree/graph.hpp"

// Fixed-length cycle search. The parallel versions split the anchor
// (smallest cycle vertex) across OpenMP threads and prune with BFS distances
// back to the anchor; the serial versions are plain DFS kept as a reference.

namespace cfree::kernels {

namespace serial {
bool has_cycle(const Graph& g, int length, BudgetMeter& meter);
std::vector<std::vector<Vertex>> enumerate_cycles(const Graph& g, int length, BudgetMeter& meter,
                                                  std::size_t max_cycles);
} // namespace serial

namespace parallel {
bool has_cycle(const Graph& g, int length, BudgetMeter& meter);
std::vector<std::vector<Vertex>> enumerate_cycles(const Graph& g, int length, BudgetMeter& meter,
                                                  std::size_t max_cycles);
} // namespace parallel

} // namespace cfree::kernels

#endif // CFREE_KERNELS_CYCLE_SEARCH_HPP
