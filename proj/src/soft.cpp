#include "vrpsplit/soft.hpp"

#include "internal.hpp"
#include "vrpsplit/deque.hpp"

namespace vrpsplit {

namespace {

void check_soft_queue(const PredecessorDeque& queue, const std::vector<Cost>& fixed, const Preprocessed& pre,
                      Cost capacity, Cost alpha, int t) {
    const auto members = queue.elements();
    if (members.empty()) detail::invariant_failed("queue emptied", 0, t);
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        const int a = members[i];
        const int b = members[i + 1];
        if (!(fixed[a] < fixed[b])) detail::invariant_failed("fixed costs not strictly increasing", 0, t);
        if (!(pre.load(a) <= pre.load(b))) detail::invariant_failed("loads not nondecreasing", 0, t);
        if (!(fixed[a] + alpha * (pre.load(b) - pre.load(a)) > fixed[b])) {
            detail::invariant_failed("consecutive members dominate each other", 0, t);
        }
    }
    for (int m : members) {
        if (m >= t) detail::invariant_failed("queue holds a node that is not a predecessor", 0, t);
    }
    if (members.size() >= 2) {
        const SoftProfile first{fixed[members[0]], pre.load(members[0])};
        const SoftProfile second{fixed[members[1]], pre.load(members[1])};
        if (!(h_eval(first, pre.load(t), capacity, alpha) < h_eval(second, pre.load(t), capacity, alpha))) {
            detail::invariant_failed("front is not strictly better than the second element", 0, t);
        }
    }
}

template <bool Instrumented>
SplitSolution run(const Preprocessed& pre, const Instance& inst, const SplitOptions& options) {
    const int n = inst.size();
    const Cost capacity = inst.capacity();
    const Cost alpha = inst.alpha();
    SplitSolution sol = detail::fresh_solution(n);
    if (n == 0) {
        finalize(sol);
        return sol;
    }
    auto& p = sol.labels;
    auto& pred = sol.pred;
    std::vector<Cost> fixed(static_cast<std::size_t>(n));
    PredecessorDeque queue(n + 1);
    auto profile_of = [&](int i) { return SoftProfile{fixed[i], pre.load(i)}; };

    fixed[0] = soft_profile(pre, inst, 0, 0).fixed_cost;
    queue.reset(0);
    for (int t = 1; t <= n; ++t) {
        if constexpr (Instrumented) {
            if (options.check_invariants) check_soft_queue(queue, fixed, pre, capacity, alpha, t);
            if (options.observer) options.observer({0, t, queue.elements()});
        }

        const int front = queue.front();
        p[t] = h_eval(profile_of(front), pre.load(t), capacity, alpha) + pre.distance(t) +
               inst.customer(t).dist_to_depot;
        pred[t] = front;

        if (t < n) {
            fixed[t] = soft_profile(pre, inst, p[t], t).fixed_cost;
            const SoftProfile incoming = profile_of(t);
            if (!dominates_soft(profile_of(queue.back()), incoming, SoftOrder::earlier, alpha)) {
                while (!queue.empty() && dominates_soft(incoming, profile_of(queue.back()), SoftOrder::later, alpha)) {
                    queue.pop_back();
                }
                queue.push_back(t);
            }
            // Comparing h at load(t+1) is the same test as comparing full
            // extension costs to t+1 minus their common distance term.
            const Cost next_load = pre.load(t + 1);
            while (queue.size() > 1 && h_eval(profile_of(queue.front()), next_load, capacity, alpha) >=
                                           h_eval(profile_of(queue.front2()), next_load, capacity, alpha)) {
                queue.pop_front();
            }
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

SplitSolution linear_split_soft(const Preprocessed& pre, const Instance& inst, const SplitOptions& options) {
    return options.instrumented() ? run<true>(pre, inst, options) : run<false>(pre, inst, options);
}

} // namespace vrpsplit
