#pragma once

#include <optional>

#include "vrpsplit/instance.hpp"
#include "vrpsplit/solution.hpp"

namespace vrpsplit {

// Classical Bellman split in O(nB): every node pushes its label forward to the
// successors it can reach within capacity. Route costs are accumulated in the
// inner loop rather than read from prefix sums, so `pre` is not consulted.
SplitSolution bellman_split(const Preprocessed& pre, const Instance& inst);

// Exact-k labels for k <= max_vehicles in O(n m B).
FleetSolution bellman_split_fleet(const Preprocessed& pre, const Instance& inst, int max_vehicles);

// Bellman split with linear overload penalties. With a capacity_multiplier the
// inner loop stops once a route's load exceeds multiplier * capacity (the
// usual 4Q cut-off); without one every predecessor is examined, O(n^2).
SplitSolution bellman_split_soft(const Preprocessed& pre, const Instance& inst,
                                 std::optional<Cost> capacity_multiplier = std::nullopt);

inline constexpr int kOracleSizeLimit = 2000;

// Brute-force shortest path over the complete split DAG: for each t, all
// predecessors i < t are examined with no early exit. Meant for testing only.
// Throws std::length_error when n exceeds size_limit.
SplitSolution oracle_split(const Preprocessed& pre, const Instance& inst, Mode mode,
                           int size_limit = kOracleSizeLimit);

FleetSolution oracle_split_fleet(const Preprocessed& pre, const Instance& inst, Mode mode, int max_vehicles,
                                 int size_limit = kOracleSizeLimit);

} // namespace vrpsplit
