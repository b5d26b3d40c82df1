#pragma once

#include "vrpsplit/instance.hpp"
#include "vrpsplit/options.hpp"
#include "vrpsplit/solution.hpp"

namespace vrpsplit {

// Linear split repeated once per vehicle count: level k extends the row of
// exact-k labels into row k+1 with a fresh predecessor queue, O(n m) in total.
// A level stops as soon as its queue empties, which marks the last position
// reachable with k+1 routes.
FleetSolution linear_split_fleet(const Preprocessed& pre, const Instance& inst, int max_vehicles,
                                 const SplitOptions& options = {});

} // namespace vrpsplit
