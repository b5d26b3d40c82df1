#include "vrpsplit/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "vrpsplit/bellman.hpp"
#include "vrpsplit/fleet.hpp"
#include "vrpsplit/generator.hpp"
#include "vrpsplit/instance_io.hpp"
#include "vrpsplit/linear.hpp"
#include "vrpsplit/soft.hpp"

namespace vrpsplit {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array kNames{
    std::pair{Algorithm::bellman, std::string_view("bellman")},
    std::pair{Algorithm::linear, std::string_view("linear")},
    std::pair{Algorithm::bellman_fleet, std::string_view("bellman_fleet")},
    std::pair{Algorithm::linear_fleet, std::string_view("linear_fleet")},
    std::pair{Algorithm::bellman_soft, std::string_view("bellman_soft")},
    std::pair{Algorithm::bellman_soft_4q, std::string_view("bellman_soft_4q")},
    std::pair{Algorithm::linear_soft, std::string_view("linear_soft")},
};

constexpr std::array kSpeedupPairs{
    std::pair{Algorithm::bellman, Algorithm::linear},
    std::pair{Algorithm::bellman_fleet, Algorithm::linear_fleet},
    std::pair{Algorithm::bellman_soft, Algorithm::linear_soft},
    std::pair{Algorithm::bellman_soft_4q, Algorithm::linear_soft},
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool is_fleet(Algorithm a) { return a == Algorithm::bellman_fleet || a == Algorithm::linear_fleet; }

std::string ms(double seconds) { return format_number(seconds * 1e3); }

struct Cell {
    const BenchCase* source = nullptr;
    Cost capacity = 0;
};

std::vector<BenchRow> run_cell(const Cell& cell, const BenchConfig& config) {
    Instance inst = cell.source->instance.with_capacity(cell.capacity);
    if (config.alpha) inst = inst.with_alpha(*config.alpha);
    const Preprocessed pre(inst);

    int fleet = 1;
    const bool any_fleet = std::any_of(config.algorithms.begin(), config.algorithms.end(), is_fleet);
    if (any_fleet) {
        if (config.fleet) {
            fleet = *config.fleet;
        } else {
            const SplitSolution unlimited = linear_split(pre, inst, unchecked());
            fleet = std::max<int>(1, static_cast<int>(unlimited.routes.size()));
        }
    }

    const bool any_preprocessing =
        std::any_of(config.algorithms.begin(), config.algorithms.end(), uses_preprocessing);
    double preprocess_seconds = 0;
    if (any_preprocessing) {
        volatile Cost sink = 0;
        preprocess_seconds = measure([&] { sink = preprocess(inst).load(inst.size()); }, config.calibration).mean_seconds;
    }

    std::vector<BenchRow> rows;
    for (Algorithm a : config.algorithms) {
        const SolveOutcome outcome = solve_once(a, pre, inst, fleet);
        if (is_finite_cost(outcome.cost)) {
            const Cost check = recompute_cost(inst, outcome.routes, outcome.mode);
            if (check != outcome.cost) {
                throw std::logic_error(std::string(algorithm_name(a)) + " on " + cell.source->name + " reported cost " +
                                       format_number(outcome.cost) + " but its routes cost " + format_number(check));
            }
        }

        volatile Cost sink = 0;
        BenchRow row;
        row.instance = cell.source->name;
        row.n = inst.size();
        row.capacity = inst.capacity();
        row.algorithm = a;
        row.fleet = is_fleet(a) ? fleet : 0;
        row.timing = measure(
            [&] {
                switch (a) {
                case Algorithm::bellman: sink = bellman_split(pre, inst).cost; break;
                case Algorithm::linear: sink = linear_split(pre, inst, unchecked()).cost; break;
                case Algorithm::bellman_fleet: sink = bellman_split_fleet(pre, inst, fleet).label(fleet, inst.size()); break;
                case Algorithm::linear_fleet:
                    sink = linear_split_fleet(pre, inst, fleet, unchecked()).label(fleet, inst.size());
                    break;
                case Algorithm::bellman_soft: sink = bellman_split_soft(pre, inst).cost; break;
                case Algorithm::bellman_soft_4q: sink = bellman_split_soft(pre, inst, 4.0).cost; break;
                case Algorithm::linear_soft: sink = linear_split_soft(pre, inst, unchecked()).cost; break;
                }
            },
            config.calibration);
        row.preprocess_seconds = uses_preprocessing(a) ? preprocess_seconds : 0;
        row.cost = outcome.cost;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string_view algorithm_name(Algorithm a) {
    for (const auto& [value, name] : kNames) {
        if (value == a) return name;
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    for (const auto& [value, text] : kNames) {
        if (text == name) return value;
    }
    return std::nullopt;
}

bool uses_preprocessing(Algorithm a) {
    return a == Algorithm::linear || a == Algorithm::linear_fleet || a == Algorithm::linear_soft;
}

Timing measure(const std::function<void()>& fn, const CalibrationOptions& options) {
    const std::int64_t min_reps = std::max<std::int64_t>(options.min_reps, 1);
    const double target = std::max(options.target_seconds, options.min_seconds);
    const int batches = std::max(options.batches, 1);

    auto start = Clock::now();
    fn();
    const double single = std::max(seconds_since(start), 1e-9);

    auto wanted = static_cast<std::int64_t>(std::ceil(target / single));
    wanted = std::max(wanted, min_reps);
    const std::int64_t per_batch = std::max<std::int64_t>(1, wanted / batches);

    Timing timing;
    std::vector<double> batch_means;
    // Extra batches only run if the estimate from the warm-up was too optimistic.
    while (timing.reps < min_reps || timing.total_seconds < options.min_seconds ||
           static_cast<int>(batch_means.size()) < batches) {
        start = Clock::now();
        for (std::int64_t r = 0; r < per_batch; ++r) fn();
        const double elapsed = seconds_since(start);
        batch_means.push_back(elapsed / static_cast<double>(per_batch));
        timing.total_seconds += elapsed;
        timing.reps += per_batch;
    }
    timing.mean_seconds = timing.total_seconds / static_cast<double>(timing.reps);
    std::sort(batch_means.begin(), batch_means.end());
    const std::size_t mid = batch_means.size() / 2;
    timing.median_batch_seconds =
        batch_means.size() % 2 ? batch_means[mid] : (batch_means[mid - 1] + batch_means[mid]) / 2;
    return timing;
}

SolveOutcome solve_once(Algorithm a, const Preprocessed& pre, const Instance& inst, int fleet) {
    SolveOutcome out;
    auto from_split = [&](SplitSolution sol, Mode mode) {
        out.cost = sol.cost;
        out.routes = std::move(sol.routes);
        out.labels = std::move(sol.labels);
        out.mode = mode;
    };
    auto from_fleet = [&](const FleetSolution& fs) {
        const FleetChoice best = best_with_at_most(fs, fleet);
        out.cost = best.cost;
        out.mode = Mode::hard;
        if (best.status == Status::feasible) out.routes = fs.routes(best.vehicles);
    };
    switch (a) {
    case Algorithm::bellman: from_split(bellman_split(pre, inst), Mode::hard); break;
    case Algorithm::linear: from_split(linear_split(pre, inst), Mode::hard); break;
    case Algorithm::bellman_fleet: from_fleet(bellman_split_fleet(pre, inst, fleet)); break;
    case Algorithm::linear_fleet: from_fleet(linear_split_fleet(pre, inst, fleet)); break;
    case Algorithm::bellman_soft: from_split(bellman_split_soft(pre, inst), Mode::soft); break;
    case Algorithm::bellman_soft_4q: from_split(bellman_split_soft(pre, inst, 4.0), Mode::soft); break;
    case Algorithm::linear_soft: from_split(linear_split_soft(pre, inst), Mode::soft); break;
    }
    return out;
}

BenchReport run_bench(const std::vector<BenchCase>& cases, const BenchConfig& config) {
    BenchReport report;
    std::vector<Cell> cells;
    for (const BenchCase& c : cases) {
        const Cost total = c.instance.total_demand();
        std::vector<Cost> capacities = config.capacities;
        if (capacities.empty()) capacities.push_back(c.instance.capacity());
        for (Cost q : capacities) {
            if (capacity_is_trivial(total, q)) {
                report.skipped.push_back({c.name, c.instance.size(), q, total});
            } else {
                cells.push_back({&c, q});
            }
        }
    }

    std::vector<std::vector<BenchRow>> results(cells.size());
    const int threads = std::clamp(config.threads, 1, std::max(1, static_cast<int>(cells.size())));
    if (threads == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) results[i] = run_cell(cells[i], config);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(cells.size());
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < cells.size(); i = next++) {
                    try {
                        results[i] = run_cell(cells[i], config);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    for (auto& rows : results) {
        for (auto& row : rows) report.rows.push_back(std::move(row));
    }
    return report;
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
    out << "instance,n,capacity,algorithm,fleet,reps,total_s,mean_ms,median_batch_ms,preprocess_ms,inclusive_ms,cost\n";
    for (const BenchRow& r : report.rows) {
        out << r.instance << ',' << r.n << ',' << format_number(r.capacity) << ',' << algorithm_name(r.algorithm) << ','
            << r.fleet << ',' << r.timing.reps << ',' << format_number(r.timing.total_seconds) << ','
            << ms(r.timing.mean_seconds) << ',' << ms(r.timing.median_batch_seconds) << ','
            << ms(r.preprocess_seconds) << ',' << ms(r.inclusive_seconds()) << ',' << format_number(r.cost) << '\n';
    }
}

void write_speedup_csv(std::ostream& out, const BenchReport& report) {
    out << "instance,n,capacity,baseline,contender,baseline_ms,contender_ms,speedup,status\n";
    std::map<std::tuple<std::string, Cost, Algorithm>, const BenchRow*> index;
    std::vector<std::pair<std::string, Cost>> order;
    for (const BenchRow& r : report.rows) {
        if (std::find(order.begin(), order.end(), std::pair{r.instance, r.capacity}) == order.end()) {
            order.emplace_back(r.instance, r.capacity);
        }
        index[{r.instance, r.capacity, r.algorithm}] = &r;
    }
    for (const auto& [name, capacity] : order) {
        for (const auto& [baseline, contender] : kSpeedupPairs) {
            auto b = index.find({name, capacity, baseline});
            auto c = index.find({name, capacity, contender});
            if (b == index.end() || c == index.end()) continue;
            const double tb = b->second->timing.mean_seconds;
            const double tc = c->second->timing.mean_seconds;
            out << name << ',' << b->second->n << ',' << format_number(capacity) << ',' << algorithm_name(baseline)
                << ',' << algorithm_name(contender) << ',' << ms(tb) << ',' << ms(tc) << ',' << format_number(tb / tc)
                << ",ok\n";
        }
    }
    for (const SkippedCell& s : report.skipped) {
        out << s.instance << ',' << s.n << ',' << format_number(s.capacity) << ",,,,,,skipped_total_demand\n";
    }
}

} // namespace vrpsplit
