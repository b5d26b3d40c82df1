#pragma once

#include <string>

#include "vrpsplit/solution.hpp"
#include "vrpsplit/types.hpp"

namespace vrpsplit::detail {

inline SplitSolution fresh_solution(int n) {
    SplitSolution sol;
    sol.labels.assign(static_cast<std::size_t>(n + 1), kInfinity);
    sol.pred.assign(static_cast<std::size_t>(n + 1), -1);
    sol.labels[0] = 0;
    return sol;
}

[[noreturn]] inline void invariant_failed(const std::string& what, int level, int t) {
    throw InvariantViolation(what + " (level " + std::to_string(level) + ", t=" + std::to_string(t) + ")");
}

// pushes <= max_pushes and pops <= pushes.
inline void check_work_bound(const DequeStats& stats, std::int64_t max_pushes, int level, int t) {
    if (stats.pushes > max_pushes) {
        invariant_failed("queue pushes " + std::to_string(stats.pushes) + " exceed " + std::to_string(max_pushes),
                         level, t);
    }
    if (stats.pops() > stats.pushes) invariant_failed("queue pops exceed pushes", level, t);
}

} // namespace vrpsplit::detail
