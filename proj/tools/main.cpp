// vrpsplit command-line front end: solve | verify | bench | gen.
//
// Exit codes: 0 success, 1 infeasible, 2 input error, 3 verification failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vrpsplit/bellman.hpp"
#include "vrpsplit/bench.hpp"
#include "vrpsplit/fleet.hpp"
#include "vrpsplit/generator.hpp"
#include "vrpsplit/instance_io.hpp"
#include "vrpsplit/linear.hpp"
#include "vrpsplit/soft.hpp"
#include "vrpsplit/verify.hpp"

namespace fs = std::filesystem;
using namespace vrpsplit;

namespace {

enum ExitCode { kOk = 0, kInfeasible = 1, kInputError = 2, kVerifyFailed = 3 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolveArgs {
    std::string file;
    std::string algorithm = "linear";
    std::optional<int> fleet;
    std::optional<double> alpha;
    std::optional<double> capacity;
    std::optional<double> load_bound;
    bool labels = false;
};

void print_routes(std::ostream& out, const std::vector<Route>& routes) {
    out << "routes: " << routes.size() << '\n';
    for (std::size_t r = 0; r < routes.size(); ++r) {
        out << "route " << r + 1 << ": " << routes[r].first << '-' << routes[r].last << '\n';
    }
}

void print_labels(std::ostream& out, const std::vector<Cost>& labels) {
    out << "labels:";
    for (Cost c : labels) out << ' ' << format_number(c);
    out << '\n';
}

int cmd_solve(const SolveArgs& args) {
    Instance inst = read_instance(fs::path(args.file));
    if (args.capacity) inst = inst.with_capacity(*args.capacity);
    if (args.alpha) inst = inst.with_alpha(*args.alpha);

    const bool soft = args.algorithm == "soft" || args.algorithm == "bellman-soft";
    const bool fleet = args.algorithm == "fleet" || args.algorithm == "bellman-fleet";
    if (!soft && !fleet && args.algorithm != "linear" && args.algorithm != "bellman") {
        throw InputError("unknown algorithm '" + args.algorithm + "'");
    }
    if (fleet && !args.fleet) throw InputError("--fleet is required for fleet algorithms");
    if (fleet && *args.fleet < 1) throw InputError("--fleet must be at least 1");

    const ValidationReport report = validate(inst, soft ? Mode::soft : Mode::hard);
    bool overloaded = false;
    for (const std::string& v : report.violations) {
        if (v.rfind("demand exceeds capacity", 0) == 0) {
            overloaded = true;
        } else {
            throw InputError(v);
        }
    }
    std::cout << "algorithm: " << args.algorithm << '\n' << "n: " << inst.size() << '\n';
    if (overloaded) {
        std::cout << "status: infeasible (a demand exceeds the capacity)\n";
        return kInfeasible;
    }

    const Preprocessed pre(inst);
    if (fleet) {
        const FleetSolution fs = args.algorithm == "fleet" ? linear_split_fleet(pre, inst, *args.fleet)
                                                           : bellman_split_fleet(pre, inst, *args.fleet);
        const FleetChoice best = best_with_at_most(fs, *args.fleet);
        if (args.labels) {
            for (int k = 0; k <= fs.levels(); ++k) {
                std::vector<Cost> row;
                for (int t = 0; t <= fs.size(); ++t) row.push_back(fs.label(k, t));
                std::cout << "k=" << k << ' ';
                print_labels(std::cout, row);
            }
        }
        if (best.status != Status::feasible) {
            std::cout << "status: infeasible (no split with at most " << *args.fleet << " routes)\n";
            return kInfeasible;
        }
        std::cout << "status: feasible\n" << "cost: " << format_number(best.cost) << '\n';
        std::cout << "vehicles: " << best.vehicles << '\n';
        print_routes(std::cout, fs.routes(best.vehicles));
        return kOk;
    }

    SplitSolution sol;
    if (args.algorithm == "linear") {
        sol = linear_split(pre, inst);
    } else if (args.algorithm == "bellman") {
        sol = bellman_split(pre, inst);
    } else if (args.algorithm == "soft") {
        sol = linear_split_soft(pre, inst);
    } else {
        sol = bellman_split_soft(pre, inst, args.load_bound);
    }
    if (args.labels) print_labels(std::cout, sol.labels);
    if (!sol.feasible()) {
        std::cout << "status: infeasible\n";
        return kInfeasible;
    }
    std::cout << "status: feasible\n" << "cost: " << format_number(sol.cost) << '\n';
    print_routes(std::cout, sol.routes);
    return kOk;
}

struct VerifyArgs {
    VerifyConfig config;
    std::vector<std::string> modes{"hard", "fleet", "soft"};
    std::string output = ".";
    bool inject_fault = false;
};

int cmd_verify(VerifyArgs args) {
    args.config.hard = args.config.fleet = args.config.soft = false;
    for (const std::string& m : args.modes) {
        if (m == "hard") {
            args.config.hard = true;
        } else if (m == "fleet") {
            args.config.fleet = true;
        } else if (m == "soft") {
            args.config.soft = true;
        } else {
            throw InputError("unknown mode '" + m + "'");
        }
    }
    args.config.counterexample_dir = fs::path(args.output);

    SolversUnderTest solvers = SolversUnderTest::library();
    if (args.inject_fault) {
        // Harness self-check: a linear split that overstates the last label.
        solvers.linear = [](const Preprocessed& pre, const Instance& inst, const SplitOptions& o) {
            SplitSolution sol = linear_split(pre, inst, o);
            if (inst.size() > 0) sol.labels.back() += 1;
            return sol;
        };
    }

    const VerifyReport report = run_verify(args.config, solvers);
    std::cout << "hard runs: " << report.hard_runs << '\n'
              << "fleet runs: " << report.fleet_runs << '\n'
              << "soft runs: " << report.soft_runs << '\n';
    if (report.passed()) {
        std::cout << "verify: pass\n";
        return kOk;
    }
    const VerifyFailure& f = *report.failure;
    std::cout << "verify: FAIL in " << f.mode << " mode, instance " << f.index << ": " << f.message << '\n';
    if (f.dump) std::cout << "counterexample: " << f.dump->string() << '\n';
    return kVerifyFailed;
}

struct BenchArgs {
    std::vector<std::string> files;
    std::vector<int> generate;
    std::uint64_t seed = 1;
    std::vector<double> capacities;
    std::vector<std::string> algorithms{"bellman", "linear"};
    std::optional<int> fleet;
    std::optional<double> alpha;
    double target_seconds = 2.0;
    int threads = 1;
    std::string output = "-";
    std::string speedup_output;
};

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path == "-") return std::cout;
    file.open(path);
    if (!file) throw InputError("cannot write " + path);
    return file;
}

int cmd_bench(const BenchArgs& args) {
    std::vector<BenchCase> cases;
    for (const std::string& f : args.files) cases.push_back({fs::path(f).stem().string(), read_instance(fs::path(f))});
    for (int n : args.generate) {
        if (n < 0) throw InputError("--generate needs a nonnegative size");
        RandomOptions options;
        options.capacity = args.capacities.empty() ? 100 : args.capacities.front();
        cases.push_back({"random" + std::to_string(n), gen_random(n, args.seed, options)});
    }
    if (cases.empty()) throw InputError("no instances: pass instance files or --generate N");

    BenchConfig config;
    config.algorithms.clear();
    for (const std::string& name : args.algorithms) {
        const auto a = parse_algorithm(name);
        if (!a) throw InputError("unknown algorithm '" + name + "'");
        config.algorithms.push_back(*a);
    }
    config.capacities = args.capacities;
    config.alpha = args.alpha;
    config.fleet = args.fleet;
    config.calibration.target_seconds = args.target_seconds;
    config.threads = args.threads;

    for (const BenchCase& c : cases) {
        const auto report = validate(c.instance, Mode::soft);
        if (!report.ok()) throw InputError(c.name + ": " + report.violations.front());
    }

    const BenchReport report = run_bench(cases, config);
    for (const SkippedCell& s : report.skipped) {
        std::cerr << "skipped " << s.instance << " Q=" << format_number(s.capacity) << ": total demand "
                  << format_number(s.total_demand) << " fits one vehicle\n";
    }
    std::ofstream file;
    write_bench_csv(open_output(args.output, file), report);
    if (!args.speedup_output.empty()) {
        std::ofstream speedup_file;
        write_speedup_csv(open_output(args.speedup_output, speedup_file), report);
    }
    return kOk;
}

struct GenArgs {
    std::string points;
    std::string tour;
    std::vector<double> capacities;
    std::uint64_t seed = 1;
    std::string output = ".";
    std::optional<std::int64_t> depot;
    std::string rounding = "nearest";
    double alpha = 0;
};

int cmd_gen(const GenArgs& args) {
    const PointSet points = load_points(fs::path(args.points));
    const Tour tour = load_tour(fs::path(args.tour));
    if (args.rounding != "nearest" && args.rounding != "none") {
        throw InputError("--rounding must be 'nearest' or 'none'");
    }
    BuildOptions options;
    options.seed = args.seed;
    options.alpha = args.alpha;
    options.rounding = args.rounding == "nearest" ? Rounding::nearest_integer : Rounding::none;
    const std::int64_t depot = args.depot ? *args.depot : choose_depot(points);
    const std::string name = points.name().empty() ? fs::path(args.points).stem().string() : points.name();

    // Demands depend on the seed only, so every capacity shares one tour.
    const Instance base = build_instance(points, tour, depot, options);
    const std::vector<Cost> capacities = args.capacities.empty() ? capacity_grid() : args.capacities;

    fs::create_directories(args.output);
    std::ofstream manifest(fs::path(args.output) / "manifest.csv");
    if (!manifest) throw InputError("cannot write manifest in " + args.output);
    manifest << "file,instance,n,capacity,total_demand,depot,seed,status\n";
    int written = 0;
    for (Cost q : capacities) {
        if (!(q > 0)) throw InputError("capacities must be positive");
        const std::string file = name + "_q" + format_number(q) + ".split";
        const bool skip = capacity_is_trivial(base.total_demand(), q);
        manifest << (skip ? "" : file) << ',' << name << ',' << base.size() << ',' << format_number(q) << ','
                 << format_number(base.total_demand()) << ',' << depot << ',' << args.seed << ','
                 << (skip ? "skipped_total_demand" : "written") << '\n';
        if (skip) continue;
        write_instance(fs::path(args.output) / file, base.with_capacity(q));
        ++written;
    }
    std::cout << "wrote " << written << " instances to " << args.output << '\n';
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Split algorithms for vehicle routing giant tours"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Split one instance file");
    solve_cmd->add_option("file", solve.file, "Instance file (SPLIT 1 format)")->required();
    solve_cmd->add_option("--algorithm", solve.algorithm, "linear | bellman | fleet | bellman-fleet | soft | bellman-soft")
        ->capture_default_str();
    solve_cmd->add_option("--fleet", solve.fleet, "Maximum number of vehicles (fleet algorithms)");
    solve_cmd->add_option("--alpha", solve.alpha, "Overload penalty per unit (soft algorithms)");
    solve_cmd->add_option("--capacity", solve.capacity, "Override the instance capacity");
    solve_cmd->add_option("--load-bound", solve.load_bound, "bellman-soft only: stop routes above this multiple of Q");
    solve_cmd->add_flag("--labels", solve.labels, "Print the label row(s)");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check the linear solvers against Bellman and a brute-force oracle");
    verify_cmd->add_option("--count", verify.config.count, "Random instances per mode")->capture_default_str();
    verify_cmd->add_option("--max-n", verify.config.max_n, "Largest tour (hard and soft)")->capture_default_str();
    verify_cmd->add_option("--max-fleet-n", verify.config.max_fleet_n, "Largest tour (fleet)")->capture_default_str();
    verify_cmd->add_option("--max-vehicles", verify.config.max_vehicles, "Largest fleet")->capture_default_str();
    verify_cmd->add_option("--seed", verify.config.seed, "Seed")->capture_default_str();
    verify_cmd->add_option("--modes", verify.modes, "hard,fleet,soft")->delimiter(',')->capture_default_str();
    verify_cmd->add_option("--output", verify.output, "Directory for counterexample files")->capture_default_str();
    verify_cmd->add_flag("--inject-fault", verify.inject_fault, "Corrupt the linear solver to test the harness");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time algorithms over instances and capacities, CSV output");
    bench_cmd->add_option("files", bench.files, "Instance files");
    bench_cmd->add_option("--generate", bench.generate, "Also bench a random instance of this size")->delimiter(',');
    bench_cmd->add_option("--seed", bench.seed, "Seed for --generate")->capture_default_str();
    bench_cmd->add_option("--capacity", bench.capacities, "Capacities (comma-separated)")->delimiter(',');
    bench_cmd->add_option("--algorithm", bench.algorithms,
                          "bellman, linear, bellman_fleet, linear_fleet, bellman_soft, bellman_soft_4q, linear_soft")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--fleet", bench.fleet, "Fleet size (default: routes of the unlimited optimum)");
    bench_cmd->add_option("--alpha", bench.alpha, "Override alpha");
    bench_cmd->add_option("--target-seconds", bench.target_seconds, "Timing budget per cell")->capture_default_str();
    bench_cmd->add_option("--threads", bench.threads, "Cells timed concurrently")->capture_default_str();
    bench_cmd->add_option("--output", bench.output, "CSV path, '-' for stdout")->capture_default_str();
    bench_cmd->add_option("--speedup-output", bench.speedup_output, "Speedup CSV path");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Build instances from a TSPLIB coordinate file and a tour");
    gen_cmd->add_option("--points", gen.points, "TSPLIB EUC_2D coordinate file")->required();
    gen_cmd->add_option("--tour", gen.tour, "Tour file")->required();
    gen_cmd->add_option("--capacity", gen.capacities, "Capacities (default: the 10-value sweep)")->delimiter(',');
    gen_cmd->add_option("--seed", gen.seed, "Demand seed")->capture_default_str();
    gen_cmd->add_option("--output", gen.output, "Output directory")->capture_default_str();
    gen_cmd->add_option("--depot", gen.depot, "Depot id (default: closest to the barycenter)");
    gen_cmd->add_option("--rounding", gen.rounding, "nearest | none")->capture_default_str();
    gen_cmd->add_option("--alpha", gen.alpha, "Alpha written into the instances")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve);
        if (*verify_cmd) return cmd_verify(verify);
        if (*bench_cmd) return cmd_bench(bench);
        if (*gen_cmd) return cmd_gen(gen);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
