#include "vrpsplit/bellman.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "internal.hpp"

namespace vrpsplit {

namespace {

using detail::fresh_solution;

void check_oracle_size(int n, int limit) {
    if (n > limit) {
        throw std::length_error("oracle limited to n <= " + std::to_string(limit) + ", got " + std::to_string(n));
    }
}

Cost arc_cost_in_mode(const Preprocessed& pre, const Instance& inst, Mode mode, int i, int j) {
    if (mode == Mode::soft) return soft_arc_cost(pre, inst, i, j);
    return arc_feasible(pre, inst.capacity(), i, j) ? arc_cost(pre, inst, i, j) : kInfinity;
}

} // namespace

SplitSolution bellman_split(const Preprocessed& /*pre*/, const Instance& inst) {
    const int n = inst.size();
    const Cost capacity = inst.capacity();
    SplitSolution sol = fresh_solution(n);
    auto& p = sol.labels;
    auto& pred = sol.pred;

    for (int t = 0; t < n; ++t) {
        Cost load = 0;
        Cost distance = 0;
        for (int i = t + 1; i <= n; ++i) {
            const Customer& c = inst.customer(i);
            load += c.demand;
            // The printed loop tests the load before adding q_i, which would
            // admit one overloaded route per start node.
            if (load > capacity) break;
            distance = i == t + 1 ? c.dist_from_depot : distance + c.dist_prev;
            const Cost candidate = p[t] + distance + c.dist_to_depot;
            if (candidate < p[i]) {
                p[i] = candidate;
                pred[i] = t;
            }
        }
    }
    finalize(sol);
    return sol;
}

FleetSolution bellman_split_fleet(const Preprocessed& /*pre*/, const Instance& inst, int max_vehicles) {
    if (max_vehicles < 1) throw std::invalid_argument("fleet size must be at least 1");
    const int n = inst.size();
    const Cost capacity = inst.capacity();
    FleetSolution fs(max_vehicles, n);

    for (int k = 0; k < max_vehicles; ++k) {
        for (int t = k; t < n; ++t) {
            const Cost base = fs.label(k, t);
            if (!is_finite_cost(base)) continue;
            Cost load = 0;
            Cost distance = 0;
            for (int i = t + 1; i <= n; ++i) {
                const Customer& c = inst.customer(i);
                load += c.demand;
                if (load > capacity) break;
                distance = i == t + 1 ? c.dist_from_depot : distance + c.dist_prev;
                const Cost candidate = base + distance + c.dist_to_depot;
                if (candidate < fs.label(k + 1, i)) fs.set(k + 1, i, candidate, t);
            }
        }
    }
    return fs;
}

SplitSolution bellman_split_soft(const Preprocessed& /*pre*/, const Instance& inst,
                                 std::optional<Cost> capacity_multiplier) {
    const int n = inst.size();
    const Cost capacity = inst.capacity();
    const Cost alpha = inst.alpha();
    const Cost load_limit = capacity_multiplier ? *capacity_multiplier * capacity : kInfinity;
    SplitSolution sol = fresh_solution(n);
    auto& p = sol.labels;
    auto& pred = sol.pred;

    for (int t = 0; t < n; ++t) {
        Cost load = 0;
        Cost distance = 0;
        for (int i = t + 1; i <= n; ++i) {
            const Customer& c = inst.customer(i);
            load += c.demand;
            if (load > load_limit) break;
            distance = i == t + 1 ? c.dist_from_depot : distance + c.dist_prev;
            const Cost candidate =
                p[t] + distance + c.dist_to_depot + alpha * std::max<Cost>(load - capacity, 0);
            if (candidate < p[i]) {
                p[i] = candidate;
                pred[i] = t;
            }
        }
    }
    finalize(sol);
    return sol;
}

SplitSolution oracle_split(const Preprocessed& pre, const Instance& inst, Mode mode, int size_limit) {
    const int n = inst.size();
    check_oracle_size(n, size_limit);
    SplitSolution sol = fresh_solution(n);
    for (int t = 1; t <= n; ++t) {
        for (int i = 0; i < t; ++i) {
            const Cost candidate = sol.labels[i] + arc_cost_in_mode(pre, inst, mode, i, t);
            if (candidate < sol.labels[t]) {
                sol.labels[t] = candidate;
                sol.pred[t] = i;
            }
        }
    }
    finalize(sol);
    return sol;
}

FleetSolution oracle_split_fleet(const Preprocessed& pre, const Instance& inst, Mode mode, int max_vehicles,
                                 int size_limit) {
    if (max_vehicles < 1) throw std::invalid_argument("fleet size must be at least 1");
    const int n = inst.size();
    check_oracle_size(n, size_limit);
    FleetSolution fs(max_vehicles, n);
    for (int k = 1; k <= max_vehicles; ++k) {
        for (int t = 1; t <= n; ++t) {
            for (int i = 0; i < t; ++i) {
                const Cost candidate = fs.label(k - 1, i) + arc_cost_in_mode(pre, inst, mode, i, t);
                if (candidate < fs.label(k, t)) fs.set(k, t, candidate, i);
            }
        }
    }
    return fs;
}

} // namespace vrpsplit
