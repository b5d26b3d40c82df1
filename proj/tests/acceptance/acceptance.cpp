// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/process.hpp"
#include "vrpsplit/bellman.hpp"
#include "vrpsplit/bench.hpp"
#include "vrpsplit/fleet.hpp"
#include "vrpsplit/generator.hpp"
#include "vrpsplit/instance_io.hpp"
#include "vrpsplit/linear.hpp"
#include "vrpsplit/soft.hpp"
#include "vrpsplit/verify.hpp"

using namespace vrpsplit;
namespace vt = vrpsplit::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* format, double a, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c, d);
    return buf;
}

// Largest push count seen relative to the n+1 bound, and whether pops ever
// exceeded pushes. Shared by the equivalence criteria and reported under AC5.
struct WorkLedger {
    long runs = 0;
    long violations = 0;
    double worst_ratio = 0;

    void record(const DequeStats& s, long bound) {
        ++runs;
        if (s.pushes > bound || s.pops() > s.pushes) ++violations;
        if (bound > 0) worst_ratio = std::max(worst_ratio, static_cast<double>(s.pushes) / static_cast<double>(bound));
    }
};

// Every solver run below uses checked(), so a broken queue invariant throws;
// this counts the runs that completed with invariants intact.
struct InvariantLedger {
    long checked_runs = 0;
    long iterations = 0;
    std::string first_violation;
};

WorkLedger g_work;
InvariantLedger g_invariants;

SplitOptions counting() {
    SplitOptions o = checked();
    o.observer = [](const QueueSnapshot&) { ++g_invariants.iterations; };
    return o;
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        auto r = f();
        ++g_invariants.checked_runs;
        return r;
    } catch (const InvariantViolation& e) {
        if (g_invariants.first_violation.empty()) g_invariants.first_violation = e.what();
        throw;
    }
}

Outcome ac1_golden() {
    const Instance inst = read_instance(std::filesystem::path(VRPSPLIT_TEST_DATA_DIR) / "example12.split");
    if (inst != vt::example12()) return {false, "fixture file does not match the reconstruction"};
    const auto start = Clock::now();
    const Preprocessed pre(inst);
    const SplitSolution b = bellman_split(pre, inst);
    const SplitSolution l = linear_split(pre, inst);
    const SplitSolution o = oracle_split(pre, inst, Mode::hard);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    bool ok = true;
    for (const SplitSolution* s : {&b, &l, &o}) {
        ok = ok && s->labels == vt::kExample12Labels && s->routes == vt::kExample12Routes && s->cost == 84;
    }
    ok = ok && recompute_cost(inst, l.routes, Mode::hard) == 84;
    return {ok && ms < 1.0, "labels/routes/cost 84 for bellman, linear, oracle; " + fmt("%.3f ms", ms)};
}

Outcome ac2_hard() {
    VerifyConfig config;
    long agreed = 0;
    long enumerated = 0;
    double min_b = 1e18;
    double max_b = 0;
    for (int i = 0; i < 1000; ++i) {
        const Instance inst = verify_instance(config, "hard", i);
        const Preprocessed pre(inst);
        const SplitSolution fast = guarded([&] { return linear_split(pre, inst, counting()); });
        const SplitSolution bell = bellman_split(pre, inst);
        const SplitSolution orac = oracle_split(pre, inst, Mode::hard);
        g_work.record(fast.queue_stats, inst.size() + 1);
        if (fast.cost != bell.cost || fast.cost != orac.cost || fast.labels != orac.labels) {
            return {false, "instance " + std::to_string(i) + " disagrees"};
        }
        if (fast.feasible() && recompute_cost(inst, fast.routes, Mode::hard) != fast.cost) {
            return {false, "instance " + std::to_string(i) + " routes do not recompute"};
        }
        if (inst.size() <= 14) {
            if (vt::enumerate_splits(inst, Mode::hard).best != fast.cost) {
                return {false, "instance " + std::to_string(i) + " disagrees with enumeration"};
            }
            ++enumerated;
        }
        if (inst.size() >= 10) {
            // Expected customers per full route, relative to n at the top end.
            const double b = inst.capacity() / (inst.total_demand() / inst.size());
            min_b = std::min(min_b, b);
            max_b = std::max(max_b, b / inst.size());
        }
        ++agreed;
    }
    return {agreed == 1000, std::to_string(agreed) + " instances equal (" + std::to_string(enumerated) +
                                " also enumerated); " + fmt("n>=10: customers per route from %.1f to %.2f*n", min_b, max_b)};
}

Outcome ac3_fleet() {
    VerifyConfig config;
    long infeasible_levels = 0;
    for (int i = 0; i < 300; ++i) {
        const Instance inst = verify_instance(config, "fleet", i);
        const int m = 1 + i % config.max_vehicles;
        const Preprocessed pre(inst);
        const FleetSolution fast = guarded([&] { return linear_split_fleet(pre, inst, m, counting()); });
        const FleetSolution bell = bellman_split_fleet(pre, inst, m);
        const FleetSolution orac = oracle_split_fleet(pre, inst, Mode::hard, m);
        for (int k = 0; k <= m; ++k) {
            for (int t = 0; t <= inst.size(); ++t) {
                if (fast.label(k, t) != bell.label(k, t) || fast.label(k, t) != orac.label(k, t)) {
                    return {false, "instance " + std::to_string(i) + " p[" + std::to_string(k) + "," +
                                       std::to_string(t) + "] differs"};
                }
            }
            if (k > 0 && !is_finite_cost(fast.label(k, inst.size()))) ++infeasible_levels;
        }
        for (const DequeStats& s : fast.level_stats) g_work.record(s, inst.size());
    }
    return {infeasible_levels > 0,
            "300 full tables equal, m in 1..8; " + std::to_string(infeasible_levels) + " infinite p[k,n] agreed"};
}

Instance with_triangle_inequality(const Instance& inst) {
    std::vector<Customer> tour(inst.customers().begin(), inst.customers().end());
    for (std::size_t i = 1; i < tour.size(); ++i) {
        tour[i].dist_prev = std::min(tour[i].dist_prev, tour[i - 1].dist_to_depot + tour[i].dist_from_depot);
    }
    return Instance(tour, inst.capacity(), inst.alpha());
}

Outcome ac4_soft() {
    VerifyConfig config;
    for (int i = 0; i < 1200; ++i) {
        const Instance inst = verify_instance(config, "soft", i);
        const Preprocessed pre(inst);
        const SplitSolution fast = guarded([&] { return linear_split_soft(pre, inst, counting()); });
        const SplitSolution bell = bellman_split_soft(pre, inst);
        g_work.record(fast.queue_stats, inst.size() + 1);
        if (fast.cost != bell.cost || fast.labels != oracle_split(pre, inst, Mode::soft).labels) {
            return {false, "instance " + std::to_string(i) + " disagrees"};
        }
    }
    long single = 0;
    long hard = 0;
    for (int i = 0; i < 300; ++i) {
        const Instance base = verify_instance(config, "hard", 5000 + i);
        if (base.empty()) continue;
        const Instance free = with_triangle_inequality(base).with_alpha(0);
        const SplitSolution a0 = guarded([&] { return linear_split_soft(Preprocessed(free), free, counting()); });
        if (a0.cost != vt::raw_route_cost(free, 1, free.size(), Mode::soft)) {
            return {false, "alpha=0 differs from the single route on instance " + std::to_string(i)};
        }
        ++single;
        const Instance steep = base.with_alpha(1000);
        const Preprocessed pre(steep);
        const SplitSolution h = linear_split(pre, steep, checked());
        if (!h.feasible()) continue;
        const SplitSolution s = guarded([&] { return linear_split_soft(pre, steep, counting()); });
        if (s.cost != h.cost) return {false, "alpha=1000 differs from hard split on instance " + std::to_string(i)};
        ++hard;
    }
    return {true, "1200 instances equal over alpha {0,0.5,1,2,10,1000}; " + std::to_string(single) +
                      " alpha=0 single-route and " + std::to_string(hard) + " alpha=1000 hard-split checks"};
}

Outcome ac5_linearity() {
    return {g_work.runs > 0 && g_work.violations == 0,
            std::to_string(g_work.runs) + " queue runs, " + std::to_string(g_work.violations) +
                " over bound; " + fmt("worst pushes/bound %.3f", g_work.worst_ratio)};
}

Outcome ac6_invariants() {
    if (!g_invariants.first_violation.empty()) return {false, g_invariants.first_violation};
    long quads = 0;
    long diffs = 0;
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        RandomOptions options;
        options.capacity = 150 + 100 * static_cast<Cost>(seed % 4);
        options.demand.lo = seed % 2 ? 0 : 1;
        const Instance inst = gen_random(50, 900 + seed, options);
        const Preprocessed pre(inst);
        const int n = inst.size();
        auto ok = [&](int i, int j) { return arc_feasible(pre, inst.capacity(), i, j); };
        for (int i1 = 0; i1 < n; ++i1) {
            for (int i2 = i1 + 1; i2 < n; ++i2) {
                for (int j1 = i2 + 1; j1 <= n; ++j1) {
                    if (!ok(i1, j1)) break;
                    const Cost d1 = arc_cost(pre, inst, i1, j1) - arc_cost(pre, inst, i2, j1);
                    for (int j2 = j1 + 1; j2 <= n && ok(i1, j2); ++j2) {
                        const Cost lhs = arc_cost(pre, inst, i1, j1) + arc_cost(pre, inst, i2, j2);
                        const Cost rhs = arc_cost(pre, inst, i1, j2) + arc_cost(pre, inst, i2, j1);
                        if (lhs > rhs) return {false, "quadrangle inequality fails"};
                        ++quads;
                        if (arc_cost(pre, inst, i1, j2) - arc_cost(pre, inst, i2, j2) != d1) {
                            return {false, "constant difference fails"};
                        }
                        ++diffs;
                    }
                }
            }
        }
    }
    return {g_invariants.checked_runs > 0,
            std::to_string(g_invariants.checked_runs) + " checked runs (" + std::to_string(g_invariants.iterations) +
                " iterations) without violation; " + std::to_string(quads) + " quadruples and " +
                std::to_string(diffs) + " differences on n=50"};
}

double time_it(const std::function<void()>& fn, double target) {
    CalibrationOptions c;
    c.target_seconds = target;
    c.min_seconds = 0.05;
    c.min_reps = 3;
    return measure(fn, c).median_batch_seconds;
}

Outcome ac7_trend() {
    RandomOptions options;
    options.demand = {1, 50};
    const Instance base = gen_random(100000, 2024, options);
    const std::vector<Cost> capacities{1e2, 1e3, 1e4, 5e4};
    std::vector<double> ratio;
    std::string detail;
    for (Cost q : capacities) {
        const Instance inst = base.with_capacity(q);
        const Preprocessed shared(inst);
        volatile Cost sink = 0;
        const double tb = time_it([&] { sink = bellman_split(shared, inst).cost; }, 1.0);
        // The linear solver is charged for its own preprocessing.
        const double tl = time_it([&] { sink = linear_split(Preprocessed(inst), inst, unchecked()).cost; }, 1.0);
        if (bellman_split(shared, inst).cost != linear_split(shared, inst).cost) return {false, "costs differ"};
        ratio.push_back(tb / tl);
        detail += fmt("Q=%g %.2f  ", q, tb / tl);
    }
    bool trend = true;
    for (std::size_t i = 1; i < ratio.size(); ++i) trend = trend && ratio[i] >= 0.8 * ratio[i - 1];
    const bool pass = ratio.front() >= 0.5 && ratio.back() >= 50 && trend;
    return {pass, "T_bellman/T_linear " + detail + (trend ? "nondecreasing" : "NOT nondecreasing")};
}

Outcome ac8_soft_speed() {
    RandomOptions options;
    options.demand = {1, 50};
    options.capacity = 1000;
    options.alpha = 1;
    const Instance inst = gen_random(100000, 77, options);
    int passes = 0;
    std::string detail;
    for (int rep = 0; rep < 3 && passes < 2; ++rep) {
        volatile Cost sink = 0;
        CalibrationOptions once;
        once.target_seconds = 0;
        once.min_seconds = 0;
        once.min_reps = 1;
        once.batches = 1;
        const Preprocessed shared(inst);
        const double tu = measure([&] { sink = bellman_split_soft(shared, inst).cost; }, once).mean_seconds;
        const double t4 = time_it([&] { sink = bellman_split_soft(shared, inst, 4.0).cost; }, 0.5);
        const double tl = time_it([&] { sink = linear_split_soft(Preprocessed(inst), inst, unchecked()).cost; }, 0.5);
        const bool ok = tu / tl >= 200 && t4 / tl >= 2;
        passes += ok;
        detail += fmt("[unbounded %.0fx, 4Q %.1fx] ", tu / tl, t4 / tl);
    }
    if (bellman_split_soft(Preprocessed(inst), inst).cost != linear_split_soft(Preprocessed(inst), inst).cost) {
        return {false, "costs differ"};
    }
    return {passes >= 2, detail + std::to_string(passes) + " passing repeats"};
}

Outcome ac9_determinism() {
    const auto dir = vt::scratch_dir("acceptance_gen");
    vt::write_grid_points(dir / "pts.tsp", dir / "pts.tour", 3000, "pts");
    const std::string args = "gen --points " + (dir / "pts.tsp").string() + " --tour " + (dir / "pts.tour").string() +
                             " --seed 11 --output ";
    const auto first = vt::run_command(vt::cli(args + (dir / "a").string()));
    const auto second = vt::run_command(vt::cli(args + (dir / "b").string()));
    if (first.exit_code != 0 || second.exit_code != 0) return {false, "gen failed"};
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir / "a")) {
        const auto twin = dir / "b" / entry.path().filename();
        if (!std::filesystem::exists(twin) || vt::slurp(entry.path()) != vt::slurp(twin)) {
            return {false, entry.path().filename().string() + " differs"};
        }
        ++files;
    }
    if (files != static_cast<int>(std::distance(std::filesystem::directory_iterator(dir / "b"), {}))) {
        return {false, "file sets differ"};
    }
    auto serialize = [](const Instance& inst) {
        std::ostringstream out;
        write_instance(out, inst);
        return out.str();
    };
    for (std::uint64_t seed : {1ULL, 2ULL, 123456789ULL}) {
        if (serialize(gen_random(100000, seed)) != serialize(gen_random(100000, seed))) {
            return {false, "gen_random differs"};
        }
    }
    return {true, std::to_string(files) + " gen files identical; gen_random identical for 3 seeds at n=1e5"};
}

} // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* title;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"AC1", "golden example", ac1_golden},
        {"AC2", "hard equivalence", ac2_hard},
        {"AC3", "fleet equivalence", ac3_fleet},
        {"AC4", "soft equivalence", ac4_soft},
        {"AC5", "linear operation counts", ac5_linearity},
        {"AC6", "invariants and arc-cost structure", ac6_invariants},
        {"AC7", "hard speedup trend", ac7_trend},
        {"AC8", "soft speedup", ac8_soft_speed},
        {"AC9", "determinism", ac9_determinism},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        const auto start = Clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("%s %s %s: %s (%.1fs)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail.c_str(), s);
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
