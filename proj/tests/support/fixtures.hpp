#pragma once

#include <cstdint>
#include <vector>

#include "vrpsplit/instance.hpp"

namespace vrpsplit::testing {

// The 12-customer worked example (Q = 30, symmetric depot distances).
inline Instance example12(Cost alpha = 0) {
    const std::vector<Cost> dist_prev{4, 3, 7, 2, 7, 3, 8, 6, 8, 4, 3, 3};
    const std::vector<Cost> depot{4, 5, 10, 9, 14, 12, 16, 11, 5, 3, 5, 6};
    const std::vector<Cost> demand{11, 3, 6, 5, 7, 8, 1, 7, 3, 7, 3, 6};
    std::vector<Customer> tour;
    for (std::size_t i = 0; i < demand.size(); ++i) tour.push_back({demand[i], dist_prev[i], depot[i], depot[i]});
    return Instance(std::move(tour), 30, alpha);
}

inline const std::vector<Cost> kExample12Labels{0, 8, 12, 24, 25, 43, 44, 56, 67, 69, 75, 80, 84};

inline const std::vector<Route> kExample12Routes{{1, 4}, {5, 9}, {10, 12}};

// Exhaustive oracle: tries all 2^(n-1) ways of cutting the tour and prices
// every route by summing the raw instance data. Shares no code with the
// library beyond the Instance accessors. Practical for n <= 16.
struct Enumerated {
    Cost best = kInfinity;
    std::vector<Route> routes;
    // best cost using exactly k routes, k = 0..n
    std::vector<Cost> best_by_count;
};

inline Cost raw_route_cost(const Instance& inst, int first, int last, Mode mode) {
    Cost load = 0;
    Cost length = inst.customer(first).dist_from_depot + inst.customer(last).dist_to_depot;
    for (int i = first; i <= last; ++i) {
        load += inst.customer(i).demand;
        if (i > first) length += inst.customer(i).dist_prev;
    }
    if (load > inst.capacity()) {
        if (mode == Mode::hard) return kInfinity;
        length += inst.alpha() * (load - inst.capacity());
    }
    return length;
}

inline Enumerated enumerate_splits(const Instance& inst, Mode mode) {
    const int n = inst.size();
    Enumerated out;
    out.best_by_count.assign(static_cast<std::size_t>(n + 1), kInfinity);
    if (n == 0) {
        out.best = 0;
        out.best_by_count[0] = 0;
        return out;
    }
    // Bit b set means a route ends after customer b+1.
    const std::uint64_t masks = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        std::vector<Route> routes;
        int first = 1;
        for (int b = 0; b < n - 1; ++b) {
            if (mask >> b & 1U) {
                routes.push_back({first, b + 1});
                first = b + 2;
            }
        }
        routes.push_back({first, n});
        Cost total = 0;
        for (const Route& r : routes) total += raw_route_cost(inst, r.first, r.last, mode);
        auto& slot = out.best_by_count[routes.size()];
        if (total < slot) slot = total;
        if (total < out.best) {
            out.best = total;
            out.routes = routes;
        }
    }
    return out;
}

} // namespace vrpsplit::testing
