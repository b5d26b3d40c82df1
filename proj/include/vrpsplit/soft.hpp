#pragma once

#include "vrpsplit/instance.hpp"
#include "vrpsplit/options.hpp"
#include "vrpsplit/solution.hpp"

namespace vrpsplit {

// Soft-capacity view of predecessor i. As a function of the cumulative load q
// reached at the end of the route, extending i costs
//   h_i(q) = fixed_cost + alpha * max(q - cum_load - capacity, 0)
// on top of the distance(x) + d(x, depot) term shared by every predecessor.
struct SoftProfile {
    Cost fixed_cost = 0;
    Cost cum_load = 0;
};

inline SoftProfile soft_profile(const Preprocessed& pre, const Instance& inst, Cost label, int i) {
    return {label + inst.customer(i + 1).dist_from_depot - pre.distance(i + 1), pre.load(i)};
}

inline Cost h_eval(const SoftProfile& sp, Cost load, Cost capacity, Cost alpha) {
    const Cost excess = load - sp.cum_load - capacity;
    return sp.fixed_cost + (excess > 0 ? alpha * excess : 0);
}

enum class SoftOrder {
    earlier, // a's node index < b's
    later,   // a's node index > b's
};

// True iff h_a(q) <= h_b(q) for every q. An earlier predecessor pays the
// penalty on (b.cum_load - a.cum_load) more units at any load.
inline bool dominates_soft(const SoftProfile& a, const SoftProfile& b, SoftOrder order, Cost alpha) {
    if (order == SoftOrder::later) return a.fixed_cost <= b.fixed_cost;
    return a.fixed_cost + alpha * (b.cum_load - a.cum_load) <= b.fixed_cost;
}

// O(n) split with overload penalty alpha per unit above capacity. Every arc
// exists, so the queue never empties; the front is dropped once the second
// element is at least as good for the next position.
SplitSolution linear_split_soft(const Preprocessed& pre, const Instance& inst, const SplitOptions& options = {});

} // namespace vrpsplit
