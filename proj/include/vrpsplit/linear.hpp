#pragma once

#include "vrpsplit/instance.hpp"
#include "vrpsplit/options.hpp"
#include "vrpsplit/solution.hpp"

namespace vrpsplit {

// What a predecessor i contributes to any later extension: the part of
// label(i) + arc_cost(i, x) that does not depend on x, and the load consumed
// up to i. Extending i to x costs fixed_cost + distance(x) + d(x, depot)
// for as long as load(x) - cum_load <= capacity.
struct PredecessorProfile {
    Cost fixed_cost = 0;
    Cost cum_load = 0;
};

// Requires 0 <= i < n.
inline PredecessorProfile profile(const Preprocessed& pre, const Instance& inst, Cost label, int i) {
    return {label + inst.customer(i + 1).dist_from_depot - pre.distance(i + 1), pre.load(i)};
}

// Relative tour order of the two predecessors being compared.
enum class Order {
    earlier_or_same, // a's node index <= b's
    later,           // a's node index >  b's
};

// True when predecessor a is never worse than b for any future node. An
// earlier node only dominates when it has consumed the same load, since it
// otherwise runs out of capacity first.
inline bool dominates_hard(const PredecessorProfile& a, const PredecessorProfile& b, Order order) {
    if (order == Order::later) return a.fixed_cost <= b.fixed_cost;
    return a.fixed_cost <= b.fixed_cost && a.cum_load == b.cum_load;
}

// O(n) split: keeps the mutually nondominated feasible predecessors in a
// queue ordered by increasing fixed cost, so the front is always a best
// predecessor. Same labels as bellman_split.
SplitSolution linear_split(const Preprocessed& pre, const Instance& inst, const SplitOptions& options = {});

} // namespace vrpsplit
