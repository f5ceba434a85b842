#include "cfree/kernels/cycle_search.hpp"

#include <atomic>
#include <deque>
#include <limits>

#include <omp.h>

namespace cfree::kernels {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// DFS over simple paths that start at `anchor` and only visit larger
// vertices. Reports each closed path of `length` vertices to `visit`, which
// returns true to stop the search.
class AnchoredSearch {
public:
    AnchoredSearch(const Graph& g, int length, BudgetMeter& meter, bool prune)
        : g_(g), length_(length), meter_(meter), prune_(prune),
          on_path_(static_cast<std::size_t>(g.vertex_count()), 0),
          dist_(static_cast<std::size_t>(g.vertex_count()), kUnreached) {}

    template <typename Visit>
    bool run(Vertex anchor, bool canonical, Visit&& visit) {
        anchor_ = anchor;
        canonical_ = canonical;
        if (prune_) compute_distances();
        path_.clear();
        path_.push_back(anchor);
        on_path_[static_cast<std::size_t>(anchor)] = 1;
        bool stop = dfs(anchor, visit);
        on_path_[static_cast<std::size_t>(anchor)] = 0;
        return stop;
    }

private:
    void compute_distances() {
        for (Vertex v : touched_) dist_[static_cast<std::size_t>(v)] = kUnreached;
        touched_.clear();
        std::deque<Vertex> queue{anchor_};
        dist_[static_cast<std::size_t>(anchor_)] = 0;
        touched_.push_back(anchor_);
        const int horizon = length_ / 2;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            int dv = dist_[static_cast<std::size_t>(v)];
            if (dv >= horizon) continue;
            for (Vertex w : g_.neighbors(v)) {
                if (w < anchor_ || dist_[static_cast<std::size_t>(w)] != kUnreached) continue;
                dist_[static_cast<std::size_t>(w)] = dv + 1;
                touched_.push_back(w);
                queue.push_back(w);
            }
        }
    }

    template <typename Visit>
    bool dfs(Vertex x, Visit& visit) {
        if (!meter_.charge()) return true;
        const int depth = static_cast<int>(path_.size()) - 1;
        if (depth == length_ - 1) {
            if (g_.has_edge(x, anchor_) && (!canonical_ || path_[1] < x)) {
                return visit(path_);
            }
            return false;
        }
        const int remaining = length_ - depth - 1;  // steps left after moving to the next vertex
        for (Vertex y : g_.neighbors(x)) {
            if (y <= anchor_ || on_path_[static_cast<std::size_t>(y)]) continue;
            if (prune_) {
                // every vertex of a cycle through the anchor is within
                // length/2 of it, so unreached vertices are never on one
                int d = dist_[static_cast<std::size_t>(y)];
                if (d == kUnreached || d > remaining) continue;
            }
            path_.push_back(y);
            on_path_[static_cast<std::size_t>(y)] = 1;
            bool stop = dfs(y, visit);
            on_path_[static_cast<std::size_t>(y)] = 0;
            path_.pop_back();
            if (stop) return true;
        }
        return false;
    }

    const Graph& g_;
    int length_;
    BudgetMeter& meter_;
    bool prune_;
    Vertex anchor_ = 0;
    bool canonical_ = false;
    std::vector<char> on_path_;
    std::vector<int> dist_;
    std::vector<Vertex> touched_;
    std::vector<Vertex> path_;
};

} // namespace

namespace serial {

bool has_cycle(const Graph& g, int length, BudgetMeter& meter) {
    if (length < 3 || length > g.vertex_count()) return false;
    AnchoredSearch search(g, length, meter, /*prune=*/false);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        bool found = false;
        search.run(s, false, [&](const std::vector<Vertex>&) {
            found = true;
            return true;
        });
        if (found) return true;
        if (meter.exhausted()) break;
    }
    meter.throw_if_exhausted("fixed-length cycle search");
    return false;
}

std::vector<std::vector<Vertex>> enumerate_cycles(const Graph& g, int length, BudgetMeter& meter,
                                                  std::size_t max_cycles) {
    std::vector<std::vector<Vertex>> out;
    if (length < 3 || length > g.vertex_count()) return out;
    AnchoredSearch search(g, length, meter, false);
    bool overflow = false;
    for (Vertex s = 0; s < g.vertex_count() && !overflow && !meter.exhausted(); ++s) {
        search.run(s, true, [&](const std::vector<Vertex>& cycle) {
            if (out.size() >= max_cycles) {
                overflow = true;
                return true;
            }
            out.push_back(cycle);
            return false;
        });
    }
    meter.throw_if_exhausted("cycle enumeration");
    if (overflow) throw Error(ErrorKind::budget_exceeded, "more cycles than the enumeration ceiling");
    return out;
}

} // namespace serial

namespace parallel {

bool has_cycle(const Graph& g, int length, BudgetMeter& meter) {
    if (length < 3 || length > g.vertex_count()) return false;
    const Vertex n = g.vertex_count();
    std::atomic<bool> found{false};
#pragma omp parallel
    {
        AnchoredSearch search(g, length, meter, /*prune=*/true);
#pragma omp for schedule(dynamic, 4)
        for (Vertex s = 0; s < n; ++s) {
            if (found.load(std::memory_order_relaxed) || meter.exhausted()) continue;
            search.run(s, false, [&](const std::vector<Vertex>&) {
                found.store(true, std::memory_order_relaxed);
                return true;
            });
        }
    }
    if (found.load()) return true;
    meter.throw_if_exhausted("fixed-length cycle search");
    return false;
}

std::vector<std::vector<Vertex>> enumerate_cycles(const Graph& g, int length, BudgetMeter& meter,
                                                  std::size_t max_cycles) {
    std::vector<std::vector<Vertex>> out;
    if (length < 3 || length > g.vertex_count()) return out;
    const Vertex n = g.vertex_count();
    std::vector<std::vector<std::vector<Vertex>>> per_anchor(static_cast<std::size_t>(n));
    std::atomic<std::size_t> total{0};
    std::atomic<bool> overflow{false};
#pragma omp parallel
    {
        AnchoredSearch search(g, length, meter, true);
#pragma omp for schedule(dynamic, 4)
        for (Vertex s = 0; s < n; ++s) {
            if (overflow.load(std::memory_order_relaxed) || meter.exhausted()) continue;
            auto& bucket = per_anchor[static_cast<std::size_t>(s)];
            search.run(s, true, [&](const std::vector<Vertex>& cycle) {
                if (total.fetch_add(1, std::memory_order_relaxed) >= max_cycles) {
                    overflow.store(true, std::memory_order_relaxed);
                    return true;
                }
                bucket.push_back(cycle);
                return false;
            });
        }
    }
    meter.throw_if_exhausted("cycle enumeration");
    if (overflow.load()) throw Error(ErrorKind::budget_exceeded, "more cycles than the enumeration ceiling");
    for (auto& bucket : per_anchor) {
        for (auto& cycle : bucket) out.push_back(std::move(cycle));
    }
    return out;
}

} // namespace parallel

} // namespace cfree::kernels
