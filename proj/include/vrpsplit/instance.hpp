#pragma once

#include <span>
#include <string>
#include <vector>

#include "vrpsplit/types.hpp"

namespace vrpsplit {

// One giant-tour position. dist_prev is the distance from the previous tour
// position; it is ignored for the first customer.
struct Customer {
    Cost demand = 0;
    Cost dist_prev = 0;
    Cost dist_from_depot = 0;
    Cost dist_to_depot = 0;

    friend bool operator==(const Customer&, const Customer&) = default;
};

// A giant tour of n customers (positions 1..n, depot is 0) with the vehicle
// capacity and the overload penalty used by the soft-capacity solvers.
class Instance {
public:
    Instance() = default;
    Instance(std::vector<Customer> tour, Cost capacity, Cost alpha = 0);

    int size() const noexcept { return static_cast<int>(customers_.size()) - 1; }
    bool empty() const noexcept { return size() == 0; }

    // 1-based, i in 1..size().
    const Customer& customer(int i) const { return customers_[static_cast<std::size_t>(i)]; }
    std::span<const Customer> customers() const noexcept { return std::span(customers_).subspan(1); }

    Cost capacity() const noexcept { return capacity_; }
    Cost alpha() const noexcept { return alpha_; }
    Cost total_demand() const noexcept;

    Instance with_capacity(Cost capacity) const;
    Instance with_alpha(Cost alpha) const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    // Slot 0 is a zeroed placeholder for the depot.
    std::vector<Customer> customers_{Customer{}};
    Cost capacity_ = 1;
    Cost alpha_ = 0;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

// Collects every violation: negative or non-finite data, a non-positive
// capacity, and in hard mode every customer whose demand exceeds capacity.
ValidationReport validate(const Instance& inst, Mode mode);

// Cumulative distance and load along the giant tour.
//   distance(i) = sum of dist_prev over positions 2..i  (i in 1..n, distance(1) = 0)
//   load(i)     = sum of demands over positions 1..i    (i in 0..n, load(0) = 0)
class Preprocessed {
public:
    Preprocessed() = default;
    explicit Preprocessed(const Instance& inst);

    int size() const noexcept { return static_cast<int>(load_.size()) - 1; }

    Cost distance(int i) const { return distance_[static_cast<std::size_t>(i)]; }
    Cost load(int i) const { return load_[static_cast<std::size_t>(i)]; }

    // distance(1..n) and load(0..n).
    std::span<const Cost> distances() const noexcept { return std::span(distance_).subspan(1); }
    std::span<const Cost> loads() const noexcept { return load_; }

    friend bool operator==(const Preprocessed&, const Preprocessed&) = default;

private:
    std::vector<Cost> distance_{0}; // slot 0 unused
    std::vector<Cost> load_{0};
};

Preprocessed preprocess(const Instance& inst);

// Cost of the route leaving the depot, visiting i+1..j and coming back.
// Throws std::out_of_range unless 0 <= i < j <= n.
Cost arc_cost(const Preprocessed& pre, const Instance& inst, int i, int j);

// load(j) - load(i) <= capacity.
bool arc_feasible(const Preprocessed& pre, Cost capacity, int i, int j);

// arc_cost plus alpha * max(load(j) - load(i) - capacity, 0). Every arc exists.
Cost soft_arc_cost(const Preprocessed& pre, const Instance& inst, int i, int j);

// Walks pred back from n to 0 and returns the routes in tour order. pred is
// indexed by node (pred[0] is ignored). Throws std::logic_error on a broken chain.
std::vector<Route> extract_routes(std::span<const int> pred, int n);

// Sums route costs straight from the raw instance, without labels or
// prefix sums. Hard mode yields kInfinity as soon as a route overloads.
// Throws std::invalid_argument unless routes cover 1..n contiguously in order.
Cost recompute_cost(const Instance& inst, std::span<const Route> routes, Mode mode);

} // namespace vrpsplit
