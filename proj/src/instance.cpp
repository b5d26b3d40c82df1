#include "vrpsplit/instance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vrpsplit {

namespace {

void check_arc(const Preprocessed& pre, int i, int j) {
    if (i < 0 || j <= i || j > pre.size()) {
        throw std::out_of_range("arc (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside 0 <= i < j <= " + std::to_string(pre.size()));
    }
}

bool bad_value(Cost v) { return !std::isfinite(v) || v < 0; }

} // namespace

Instance::Instance(std::vector<Customer> tour, Cost capacity, Cost alpha)
    : capacity_(capacity), alpha_(alpha) {
    customers_.reserve(tour.size() + 1);
    customers_.insert(customers_.end(), tour.begin(), tour.end());
}

Cost Instance::total_demand() const noexcept {
    Cost total = 0;
    for (const Customer& c : customers()) total += c.demand;
    return total;
}

Instance Instance::with_capacity(Cost capacity) const {
    Instance copy = *this;
    copy.capacity_ = capacity;
    return copy;
}

Instance Instance::with_alpha(Cost alpha) const {
    Instance copy = *this;
    copy.alpha_ = alpha;
    return copy;
}

ValidationReport validate(const Instance& inst, Mode mode) {
    ValidationReport report;
    auto& out = report.violations;
    if (!std::isfinite(inst.capacity()) || inst.capacity() <= 0) {
        out.push_back("capacity must be positive and finite");
    }
    if (bad_value(inst.alpha())) {
        out.push_back("alpha must be nonnegative and finite");
    }
    for (int i = 1; i <= inst.size(); ++i) {
        const Customer& c = inst.customer(i);
        const std::string at = " at i=" + std::to_string(i);
        if (bad_value(c.demand)) out.push_back("invalid demand" + at);
        if (i > 1 && bad_value(c.dist_prev)) out.push_back("invalid distance from previous customer" + at);
        if (bad_value(c.dist_from_depot)) out.push_back("invalid distance from depot" + at);
        if (bad_value(c.dist_to_depot)) out.push_back("invalid distance to depot" + at);
        if (mode == Mode::hard && c.demand > inst.capacity()) {
            out.push_back("demand exceeds capacity" + at);
        }
    }
    return report;
}

Preprocessed::Preprocessed(const Instance& inst) {
    const auto n = static_cast<std::size_t>(inst.size());
    distance_.assign(n + 1, 0);
    load_.assign(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        const Customer& c = inst.customer(static_cast<int>(i));
        distance_[i] = i == 1 ? 0 : distance_[i - 1] + c.dist_prev;
        load_[i] = load_[i - 1] + c.demand;
    }
}

Preprocessed preprocess(const Instance& inst) { return Preprocessed(inst); }

Cost arc_cost(const Preprocessed& pre, const Instance& inst, int i, int j) {
    check_arc(pre, i, j);
    return inst.customer(i + 1).dist_from_depot + pre.distance(j) - pre.distance(i + 1) +
           inst.customer(j).dist_to_depot;
}

bool arc_feasible(const Preprocessed& pre, Cost capacity, int i, int j) {
    check_arc(pre, i, j);
    return pre.load(j) - pre.load(i) <= capacity;
}

Cost soft_arc_cost(const Preprocessed& pre, const Instance& inst, int i, int j) {
    const Cost excess = pre.load(j) - pre.load(i) - inst.capacity();
    return arc_cost(pre, inst, i, j) + inst.alpha() * std::max<Cost>(excess, 0);
}

std::vector<Route> extract_routes(std::span<const int> pred, int n) {
    if (n < 0 || (n > 0 && pred.size() <= static_cast<std::size_t>(n))) {
        throw std::logic_error("predecessor array too short for n=" + std::to_string(n));
    }
    std::vector<Route> routes;
    for (int t = n; t > 0;) {
        const int from = pred[static_cast<std::size_t>(t)];
        if (from < 0 || from >= t) {
            throw std::logic_error("broken predecessor chain at node " + std::to_string(t) +
                                   " (pred " + std::to_string(from) + ")");
        }
        routes.push_back({from + 1, t});
        t = from;
    }
    std::reverse(routes.begin(), routes.end());
    return routes;
}

Cost recompute_cost(const Instance& inst, std::span<const Route> routes, Mode mode) {
    Cost total = 0;
    bool overloaded = false;
    int expected_first = 1;
    for (const Route& r : routes) {
        if (r.first != expected_first || r.last < r.first || r.last > inst.size()) {
            throw std::invalid_argument("routes do not cover the tour contiguously near position " +
                                        std::to_string(expected_first));
        }
        Cost load = 0;
        Cost length = inst.customer(r.first).dist_from_depot;
        for (int i = r.first; i <= r.last; ++i) {
            load += inst.customer(i).demand;
            if (i > r.first) length += inst.customer(i).dist_prev;
        }
        length += inst.customer(r.last).dist_to_depot;
        if (mode == Mode::hard && load > inst.capacity()) overloaded = true;
        const Cost penalty =
            mode == Mode::soft ? inst.alpha() * std::max<Cost>(load - inst.capacity(), 0) : 0;
        total += length + penalty;
        expected_first = r.last + 1;
    }
    if (expected_first != inst.size() + 1) {
        throw std::invalid_argument("routes stop at position " + std::to_string(expected_first - 1) +
                                    " of " + std::to_string(inst.size()));
    }
    return overloaded ? kInfinity : total;
}

} // namespace vrpsplit
