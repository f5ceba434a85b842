#ifndef CFREE_BUDGET_HPP
#define CFREE_BUDGET_HPP

#include <atomic>
#include <chrono>
#include <cstdint>

#include "cfree/error.hpp"

namespace cfree {

/// Limits for exact searches. A search that runs out raises
/// ErrorKind::budget_exceeded instead of returning a partial answer.
struct SearchBudget {
    std::uint64_t node_limit = 100'000'000;
    double seconds = 0.0;  // 0 disables the wall-clock limit
};

/// Shared step counter for one search. Safe to charge from several threads.
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& budget)
        : limit_(budget.node_limit),
          has_deadline_(budget.seconds > 0.0),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(budget.seconds > 0.0 ? budget.seconds : 0.0))) {
        if (budget.node_limit == 0) {
            throw Error(ErrorKind::invalid_argument, "node budget must be positive");
        }
        if (budget.seconds < 0.0) {
            throw Error(ErrorKind::invalid_argument, "time budget must be non-negative");
        }
    }

    /// Returns false once the budget is gone; never throws, so it is usable
    /// inside OpenMP regions.
    bool charge(std::uint64_t steps = 1) noexcept {
        std::uint64_t used = used_.fetch_add(steps, std::memory_order_relaxed) + steps;
        if (used > limit_) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        if (has_deadline_ && (used & 0x3FFF) < steps &&
            std::chrono::steady_clock::now() > deadline_) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        return !exhausted_.load(std::memory_order_relaxed);
    }

    bool exhausted() const noexcept { return exhausted_.load(std::memory_order_relaxed); }
    std::uint64_t used() const noexcept { return used_.load(std::memory_order_relaxed); }

    void throw_if_exhausted(const char* what) const {
        if (exhausted()) {
            throw Error(ErrorKind::budget_exceeded, what);
        }
    }

private:
    std::uint64_t limit_;
    bool has_deadline_;
    std::chrono::steady_clock::time_point deadline_;
    std::atomic<std::uint64_t> used_{0};
    std::atomic<bool> exhausted_{false};
};

} // namespace cfree

#endif // CFREE_BUDGET_HPP
