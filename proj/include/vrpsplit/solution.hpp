#pragma once

#include <vector>

#include "vrpsplit/types.hpp"

namespace vrpsplit {

// Result of an unlimited-fleet split. labels[t] is the cost of a shortest
// path 0 -> t; pred[t] its last arc's tail (pred[0] = -1).
struct SplitSolution {
    std::vector<Cost> labels;
    std::vector<int> pred;
    std::vector<Route> routes;
    Cost cost = kInfinity;
    Status status = Status::infeasible;
    DequeStats queue_stats; // zero for solvers without a predecessor queue

    bool feasible() const noexcept { return status == Status::feasible; }
};

// Labels of the fleet-limited split: label(k, t) is the cost of a shortest
// path to t using exactly k routes, for k in 0..levels.
class FleetSolution {
public:
    FleetSolution() = default;
    FleetSolution(int levels, int n);

    int levels() const noexcept { return levels_; }
    int size() const noexcept { return n_; }

    Cost label(int k, int t) const { return labels_[index(k, t)]; }
    int pred(int k, int t) const { return preds_[index(k, t)]; }
    void set(int k, int t, Cost label, int pred) {
        labels_[index(k, t)] = label;
        preds_[index(k, t)] = pred;
    }

    // label(k, n) for k = 1..levels.
    std::vector<Cost> per_k_cost() const;

    // Routes of the exact-k path ending at n; empty when label(k, n) is infinite.
    std::vector<Route> routes(int k) const;

    // Per level k = 0..levels-1 (the level building row k+1); empty for Bellman.
    std::vector<DequeStats> level_stats;

    friend bool operator==(const FleetSolution&, const FleetSolution&) = default;

private:
    std::size_t index(int k, int t) const {
        return static_cast<std::size_t>(k) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(t);
    }

    int levels_ = 0;
    int n_ = 0;
    std::vector<Cost> labels_;
    std::vector<int> preds_;
};

struct FleetChoice {
    int vehicles = 0;
    Cost cost = kInfinity;
    Status status = Status::infeasible;
};

// Cheapest label(k, n) over k = 0..max_vehicles; ties keep the smaller k.
// k = 0 only matters for the empty tour.
FleetChoice best_with_at_most(const FleetSolution& fs, int max_vehicles);

// Fills routes, cost and status from labels/pred.
void finalize(SplitSolution& sol);

} // namespace vrpsplit
