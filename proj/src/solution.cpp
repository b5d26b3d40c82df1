#include "vrpsplit/solution.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "vrpsplit/instance.hpp"

namespace vrpsplit {

FleetSolution::FleetSolution(int levels, int n) : levels_(levels), n_(n) {
    const auto cells = static_cast<std::size_t>(levels + 1) * static_cast<std::size_t>(n + 1);
    labels_.assign(cells, kInfinity);
    preds_.assign(cells, -1);
    set(0, 0, 0, -1);
}

std::vector<Cost> FleetSolution::per_k_cost() const {
    std::vector<Cost> out;
    for (int k = 1; k <= levels_; ++k) out.push_back(label(k, n_));
    return out;
}

std::vector<Route> FleetSolution::routes(int k) const {
    if (k < 0 || k > levels_) throw std::out_of_range("fleet level " + std::to_string(k));
    if (!is_finite_cost(label(k, n_))) return {};
    std::vector<Route> out;
    int t = n_;
    for (int level = k; level > 0; --level) {
        const int from = pred(level, t);
        if (from < 0 || from >= t) {
            throw std::logic_error("broken fleet predecessor chain at (" + std::to_string(level) + "," +
                                   std::to_string(t) + ")");
        }
        out.push_back({from + 1, t});
        t = from;
    }
    if (t != 0) throw std::logic_error("fleet trace-back did not reach the depot");
    std::reverse(out.begin(), out.end());
    return out;
}

FleetChoice best_with_at_most(const FleetSolution& fs, int max_vehicles) {
    if (max_vehicles > fs.levels()) {
        throw std::out_of_range("asked for " + std::to_string(max_vehicles) + " vehicles, solved for " +
                                std::to_string(fs.levels()));
    }
    FleetChoice best;
    for (int k = 0; k <= max_vehicles; ++k) {
        const Cost c = fs.label(k, fs.size());
        if (c < best.cost) best = {k, c, Status::feasible};
    }
    return best;
}

void finalize(SplitSolution& sol) {
    const int n = static_cast<int>(sol.labels.size()) - 1;
    sol.cost = sol.labels[static_cast<std::size_t>(n)];
    if (is_finite_cost(sol.cost)) {
        sol.status = Status::feasible;
        sol.routes = extract_routes(sol.pred, n);
    } else {
        sol.status = Status::infeasible;
        sol.routes.clear();
    }
}

} // namespace vrpsplit
