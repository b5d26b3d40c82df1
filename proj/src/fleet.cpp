#include "vrpsplit/fleet.hpp"

#include <stdexcept>

#include "internal.hpp"
#include "vrpsplit/deque.hpp"
#include "vrpsplit/linear.hpp"

namespace vrpsplit {

namespace {

void check_level_queue(const PredecessorDeque& queue, const std::vector<Cost>& fixed, const Preprocessed& pre,
                       Cost capacity, int level, int t) {
    const auto members = queue.elements();
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        const int a = members[i];
        const int b = members[i + 1];
        if (!(fixed[a] < fixed[b])) detail::invariant_failed("fixed costs not strictly increasing", level, t);
        if (!(pre.load(a) <= pre.load(b))) detail::invariant_failed("loads not nondecreasing", level, t);
    }
    for (int m : members) {
        if (m >= t || !is_finite_cost(fixed[m])) {
            detail::invariant_failed("queue holds an invalid predecessor", level, t);
        }
    }
    if (!(pre.load(t) <= capacity + pre.load(members.front()))) {
        detail::invariant_failed("front cannot reach t within capacity", level, t);
    }
}

template <bool Instrumented>
FleetSolution run(const Preprocessed& pre, const Instance& inst, int max_vehicles, const SplitOptions& options) {
    const int n = inst.size();
    const Cost capacity = inst.capacity();
    FleetSolution fs(max_vehicles, n);
    std::vector<Cost> fixed(static_cast<std::size_t>(n + 1), kInfinity);
    PredecessorDeque queue(n + 1);

    for (int k = 0; k < max_vehicles; ++k) {
        // Row k is finite on an interval starting at k; an infinite start
        // means no customer set reachable with k routes (some demand > Q).
        if (k >= n || !is_finite_cost(fs.label(k, k))) {
            fs.level_stats.push_back({});
            continue;
        }
        const DequeStats before = queue.stats();
        fixed[k] = profile(pre, inst, fs.label(k, k), k).fixed_cost;
        queue.reset(k);

        for (int t = k + 1; t <= n && !queue.empty(); ++t) {
            if constexpr (Instrumented) {
                if (options.check_invariants) check_level_queue(queue, fixed, pre, capacity, k, t);
                if (options.observer) options.observer({k, t, queue.elements()});
            }

            const int front = queue.front();
            fs.set(k + 1, t, fixed[front] + pre.distance(t) + inst.customer(t).dist_to_depot, front);

            if (t < n) {
                const Cost label = fs.label(k, t);
                // Unreachable positions never become predecessors.
                if (is_finite_cost(label)) {
                    fixed[t] = profile(pre, inst, label, t).fixed_cost;
                    const PredecessorProfile incoming{fixed[t], pre.load(t)};
                    const int back = queue.back();
                    if (!dominates_hard({fixed[back], pre.load(back)}, incoming, Order::earlier_or_same)) {
                        while (!queue.empty() &&
                               dominates_hard(incoming, {fixed[queue.back()], pre.load(queue.back())}, Order::later)) {
                            queue.pop_back();
                        }
                        queue.push_back(t);
                    }
                }
                while (!queue.empty() && pre.load(t + 1) > capacity + pre.load(queue.front())) queue.pop_front();
            }
        }

        const DequeStats& after = queue.stats();
        const DequeStats level{after.pushes - before.pushes, after.front_pops - before.front_pops,
                               after.back_pops - before.back_pops};
        if constexpr (Instrumented) {
            if (options.check_invariants) detail::check_work_bound(level, n, k, n);
        }
        fs.level_stats.push_back(level);
    }
    return fs;
}

} // namespace

FleetSolution linear_split_fleet(const Preprocessed& pre, const Instance& inst, int max_vehicles,
                                 const SplitOptions& options) {
    if (max_vehicles < 1) throw std::invalid_argument("fleet size must be at least 1");
    return options.instrumented() ? run<true>(pre, inst, max_vehicles, options)
                                  : run<false>(pre, inst, max_vehicles, options);
}

} // namespace vrpsplit
