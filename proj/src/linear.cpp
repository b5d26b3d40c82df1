#include "vrpsplit/linear.hpp"

#include "internal.hpp"
#include "vrpsplit/deque.hpp"

namespace vrpsplit {

namespace {

// Queue members ranked by strictly increasing fixed cost and nondecreasing
// load, and the front can still reach t.
void check_queue(const PredecessorDeque& queue, const std::vector<Cost>& fixed, const Preprocessed& pre,
                 Cost capacity, int level, int t) {
    const auto members = queue.elements();
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        const int a = members[i];
        const int b = members[i + 1];
        if (!(fixed[a] < fixed[b])) detail::invariant_failed("fixed costs not strictly increasing", level, t);
        if (!(pre.load(a) <= pre.load(b))) detail::invariant_failed("loads not nondecreasing", level, t);
    }
    for (int m : members) {
        if (m >= t) detail::invariant_failed("queue holds a node that is not a predecessor", level, t);
    }
    if (!members.empty() && !(pre.load(t) <= capacity + pre.load(members.front()))) {
        detail::invariant_failed("front cannot reach t within capacity", level, t);
    }
}

template <bool Instrumented>
SplitSolution run(const Preprocessed& pre, const Instance& inst, const SplitOptions& options) {
    const int n = inst.size();
    const Cost capacity = inst.capacity();
    SplitSolution sol = detail::fresh_solution(n);
    if (n == 0) {
        finalize(sol);
        return sol;
    }
    auto& p = sol.labels;
    auto& pred = sol.pred;
    std::vector<Cost> fixed(static_cast<std::size_t>(n));
    PredecessorDeque queue(n + 1);

    fixed[0] = profile(pre, inst, 0, 0).fixed_cost;
    queue.reset(0);
    for (int t = 1; t <= n; ++t) {
        if (queue.empty()) break; // some demand exceeds capacity
        if constexpr (Instrumented) {
            if (options.check_invariants) check_queue(queue, fixed, pre, capacity, 0, t);
            if (options.observer) options.observer({0, t, queue.elements()});
        }

        const int front = queue.front();
        p[t] = fixed[front] + pre.distance(t) + inst.customer(t).dist_to_depot;
        pred[t] = front;

        if (t < n) {
            fixed[t] = profile(pre, inst, p[t], t).fixed_cost;
            const PredecessorProfile incoming{fixed[t], pre.load(t)};
            const int back = queue.back();
            if (!dominates_hard({fixed[back], pre.load(back)}, incoming, Order::earlier_or_same)) {
                while (!queue.empty() &&
                       dominates_hard(incoming, {fixed[queue.back()], pre.load(queue.back())}, Order::later)) {
                    queue.pop_back();
                }
                queue.push_back(t);
            }
            while (!queue.empty() && pre.load(t + 1) > capacity + pre.load(queue.front())) queue.pop_front();
        }
    }

    sol.queue_stats = queue.stats();
    if constexpr (Instrumented) {
        if (options.check_invariants) detail::check_work_bound(sol.queue_stats, n + 1, 0, n);
    }
    finalize(sol);
    return sol;
}

} // namespace

SplitSolution linear_split(const Preprocessed& pre, const Instance& inst, const SplitOptions& options) {
    return options.instrumented() ? run<true>(pre, inst, options) : run<false>(pre, inst, options);
}

} // namespace vrpsplit
