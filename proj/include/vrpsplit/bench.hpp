#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vrpsplit/instance.hpp"
#include "vrpsplit/types.hpp"

namespace vrpsplit {

enum class Algorithm {
    bellman,
    linear,
    bellman_fleet,
    linear_fleet,
    bellman_soft,    // no limit on route load
    bellman_soft_4q, // route load limited to 4 * capacity
    linear_soft,
};

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);
bool uses_preprocessing(Algorithm a);

struct CalibrationOptions {
    double target_seconds = 2.0;
    std::int64_t min_reps = 3;
    double min_seconds = 0.05;
    int batches = 5;
};

struct Timing {
    std::int64_t reps = 0;
    double total_seconds = 0;
    double mean_seconds = 0;         // total / reps
    double median_batch_seconds = 0; // per-run time, median over batches
};

// Repeats fn until roughly target_seconds have accumulated, never fewer than
// min_reps runs or min_seconds in total. One untimed warm-up call comes first.
Timing measure(const std::function<void()>& fn, const CalibrationOptions& options = {});

struct BenchCase {
    std::string name;
    Instance instance;
};

struct BenchConfig {
    std::vector<Algorithm> algorithms{Algorithm::bellman, Algorithm::linear};
    std::vector<Cost> capacities; // empty: each instance's own capacity
    std::optional<Cost> alpha;    // overrides the instance's alpha
    // Fleet size for the fleet algorithms. Unset: the route count of the
    // unlimited optimum.
    std::optional<int> fleet;
    CalibrationOptions calibration;
    // Cells of distinct (instance, capacity) pairs may run concurrently.
    int threads = 1;
};

struct BenchRow {
    std::string instance;
    int n = 0;
    Cost capacity = 0;
    Algorithm algorithm = Algorithm::linear;
    int fleet = 0;
    Timing timing;
    double preprocess_seconds = 0; // zero for algorithms that do not preprocess
    Cost cost = kInfinity;

    double inclusive_seconds() const { return timing.mean_seconds + preprocess_seconds; }
};

struct SkippedCell {
    std::string instance;
    int n = 0;
    Cost capacity = 0;
    Cost total_demand = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<SkippedCell> skipped;
};

// Times every (instance, capacity, algorithm) cell. Pairs whose total demand
// fits one vehicle are skipped. Each row's cost is re-derived from its routes
// with recompute_cost before it is reported; a mismatch throws std::logic_error.
BenchReport run_bench(const std::vector<BenchCase>& cases, const BenchConfig& config);

// One row per measured cell:
// instance,n,capacity,algorithm,fleet,reps,total_s,mean_ms,median_batch_ms,preprocess_ms,inclusive_ms,cost
void write_bench_csv(std::ostream& out, const BenchReport& report);

// One row per (instance, capacity, baseline/contender pair) with both algorithms measured:
// instance,n,capacity,baseline,contender,baseline_ms,contender_ms,speedup,status
// Skipped cells appear with status skipped_total_demand and empty timings.
void write_speedup_csv(std::ostream& out, const BenchReport& report);

struct SolveOutcome {
    Cost cost = kInfinity;
    std::vector<Route> routes; // empty when infeasible
    Mode mode = Mode::hard;
    std::vector<Cost> labels;  // unlimited-fleet algorithms only
};

// One solver call; fleet algorithms report their best count k <= fleet.
SolveOutcome solve_once(Algorithm a, const Preprocessed& pre, const Instance& inst, int fleet = 1);

} // namespace vrpsplit
