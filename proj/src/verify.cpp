#include "vrpsplit/verify.hpp"

#include <array>
#include <sstream>

#include "vrpsplit/bellman.hpp"
#include "vrpsplit/fleet.hpp"
#include "vrpsplit/generator.hpp"
#include "vrpsplit/instance_io.hpp"
#include "vrpsplit/linear.hpp"
#include "vrpsplit/random.hpp"
#include "vrpsplit/soft.hpp"

namespace vrpsplit {

namespace {

constexpr std::array kAlphas{0.0, 0.5, 1.0, 2.0, 10.0, 1000.0};

struct Mismatch {
    std::string message;
};

std::uint64_t mode_id(const std::string& mode) {
    if (mode == "hard") return 0;
    if (mode == "fleet") return 1;
    if (mode == "soft") return 2;
    throw std::invalid_argument("unknown verification mode " + mode);
}

std::string describe_labels(const std::vector<Cost>& a, const std::vector<Cost>& b, const char* what) {
    for (std::size_t t = 0; t < a.size() && t < b.size(); ++t) {
        if (a[t] != b[t]) {
            return std::string(what) + ": label " + std::to_string(t) + " is " + format_number(a[t]) + " vs " +
                   format_number(b[t]);
        }
    }
    return std::string(what) + ": label rows differ in length";
}

void compare_split(const SplitSolution& fast, const SplitSolution& reference, const char* what) {
    if (fast.labels != reference.labels) throw Mismatch{describe_labels(fast.labels, reference.labels, what)};
    if (fast.status != reference.status) throw Mismatch{std::string(what) + ": status differs"};
}

void check_routes(const Instance& inst, const SplitSolution& sol, Mode mode, const char* who) {
    if (!sol.feasible()) return;
    const Cost again = recompute_cost(inst, sol.routes, mode);
    if (again != sol.cost) {
        throw Mismatch{std::string(who) + ": routes cost " + format_number(again) + " but reported " +
                       format_number(sol.cost)};
    }
}

void check_work(const DequeStats& stats, std::int64_t bound, const std::string& who) {
    if (stats.pushes > bound || stats.pops() > stats.pushes) {
        throw Mismatch{who + ": queue did " + std::to_string(stats.pushes) + " pushes and " +
                       std::to_string(stats.pops()) + " pops, bound " + std::to_string(bound)};
    }
}

void verify_hard(const Instance& inst, const SolversUnderTest& solvers) {
    const Preprocessed pre(inst);
    const SplitSolution fast = solvers.linear(pre, inst, checked());
    const SplitSolution bellman = bellman_split(pre, inst);
    const SplitSolution oracle = oracle_split(pre, inst, Mode::hard);
    compare_split(bellman, oracle, "bellman vs oracle");
    compare_split(fast, oracle, "linear vs oracle");
    check_routes(inst, fast, Mode::hard, "linear");
    check_routes(inst, bellman, Mode::hard, "bellman");
    check_work(fast.queue_stats, inst.size() + 1, "linear");
}

void verify_fleet_levels(const Instance& inst, int vehicles, const SolversUnderTest& solvers) {
    const Preprocessed pre(inst);
    const FleetSolution fast = solvers.fleet(pre, inst, vehicles, checked());
    const FleetSolution bellman = bellman_split_fleet(pre, inst, vehicles);
    const FleetSolution oracle = oracle_split_fleet(pre, inst, Mode::hard, vehicles);
    for (int k = 0; k <= vehicles; ++k) {
        for (int t = 0; t <= inst.size(); ++t) {
            const Cost o = oracle.label(k, t);
            if (fast.label(k, t) != o || bellman.label(k, t) != o) {
                throw Mismatch{"p[" + std::to_string(k) + "," + std::to_string(t) + "]: linear " +
                               format_number(fast.label(k, t)) + ", bellman " + format_number(bellman.label(k, t)) +
                               ", oracle " + format_number(o)};
            }
        }
    }
    for (int k = 1; k <= vehicles; ++k) {
        if (!is_finite_cost(fast.label(k, inst.size()))) continue;
        const auto routes = fast.routes(k);
        if (static_cast<int>(routes.size()) != k) throw Mismatch{"trace-back of level " + std::to_string(k)};
        const Cost again = recompute_cost(inst, routes, Mode::hard);
        if (again != fast.label(k, inst.size())) throw Mismatch{"routes of level " + std::to_string(k) + " recompute"};
    }
    for (std::size_t k = 0; k < fast.level_stats.size(); ++k) {
        check_work(fast.level_stats[k], inst.size(), "fleet level " + std::to_string(k));
    }
}

void verify_fleet(const Instance& inst, int vehicles, const SolversUnderTest& solvers) {
    try {
        verify_fleet_levels(inst, vehicles, solvers);
    } catch (const Mismatch& m) {
        throw Mismatch{"m=" + std::to_string(vehicles) + ": " + m.message};
    }
}

void verify_soft(const Instance& inst, const SolversUnderTest& solvers) {
    const Preprocessed pre(inst);
    const SplitSolution fast = solvers.soft(pre, inst, checked());
    const SplitSolution bellman = bellman_split_soft(pre, inst);
    const SplitSolution oracle = oracle_split(pre, inst, Mode::soft);
    compare_split(bellman, oracle, "bellman soft vs oracle");
    compare_split(fast, oracle, "linear soft vs oracle");
    check_routes(inst, fast, Mode::soft, "linear soft");
    check_work(fast.queue_stats, inst.size() + 1, "linear soft");
}

} // namespace

SolversUnderTest SolversUnderTest::library() {
    return {
        [](const Preprocessed& pre, const Instance& inst, const SplitOptions& o) { return linear_split(pre, inst, o); },
        [](const Preprocessed& pre, const Instance& inst, int m, const SplitOptions& o) {
            return linear_split_fleet(pre, inst, m, o);
        },
        [](const Preprocessed& pre, const Instance& inst, const SplitOptions& o) {
            return linear_split_soft(pre, inst, o);
        },
    };
}

Instance verify_instance(const VerifyConfig& config, const std::string& mode, int index) {
    Rng rng(config.seed, static_cast<std::uint64_t>(index) * 3 + mode_id(mode));
    const int max_n = mode == "fleet" ? config.max_fleet_n : config.max_n;
    const int n = static_cast<int>(rng.uniform_int(0, max_n));

    RandomOptions options;
    // Zero demands and short distances make load and cost ties common.
    options.demand.lo = rng.uniform_int(0, 4) == 0 ? 0 : 1;
    options.demand.hi = 50;
    options.max_distance = rng.uniform_int(0, 2) == 0 ? 3 : 100;
    // Roughly 2 to n customers per route.
    options.capacity = static_cast<Cost>(rng.uniform_int(50, std::max(50, 26 * n)));
    options.hard = mode != "soft";
    options.alpha = mode == "soft" ? kAlphas[static_cast<std::size_t>(index) % kAlphas.size()] : 0;
    return gen_random(n, rng.next(), options);
}

VerifyReport run_verify(const VerifyConfig& config, const SolversUnderTest& solvers) {
    VerifyReport report;
    auto attempt = [&](const std::string& mode, int index, auto&& body) {
        const Instance inst = verify_instance(config, mode, index);
        try {
            body(inst);
            return true;
        } catch (const Mismatch& m) {
            report.failure = VerifyFailure{mode, index, m.message, inst, std::nullopt};
        } catch (const std::exception& e) {
            report.failure = VerifyFailure{mode, index, e.what(), inst, std::nullopt};
        }
        if (config.counterexample_dir) {
            std::filesystem::create_directories(*config.counterexample_dir);
            const auto path =
                *config.counterexample_dir / ("counterexample_" + mode + "_" + std::to_string(index) + ".split");
            write_instance(path, inst);
            report.failure->dump = path;
        }
        return false;
    };

    for (int i = 0; i < config.count; ++i) {
        if (config.hard) {
            if (!attempt("hard", i, [&](const Instance& inst) { verify_hard(inst, solvers); })) return report;
            ++report.hard_runs;
        }
        if (config.fleet) {
            Rng pick(config.seed ^ 0x5eed, static_cast<std::uint64_t>(i));
            const int vehicles = static_cast<int>(pick.uniform_int(1, config.max_vehicles));
            if (!attempt("fleet", i, [&](const Instance& inst) { verify_fleet(inst, vehicles, solvers); })) {
                return report;
            }
            ++report.fleet_runs;
        }
        if (config.soft) {
            if (!attempt("soft", i, [&](const Instance& inst) { verify_soft(inst, solvers); })) return report;
            ++report.soft_runs;
        }
    }
    return report;
}

} // namespace vrpsplit
