#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "vrpsplit/instance.hpp"
#include "vrpsplit/options.hpp"
#include "vrpsplit/solution.hpp"

namespace vrpsplit {

// The fast solvers under test. Defaults to the library's linear solvers;
// tests swap in deliberately broken ones to check that the harness notices.
struct SolversUnderTest {
    std::function<SplitSolution(const Preprocessed&, const Instance&, const SplitOptions&)> linear;
    std::function<FleetSolution(const Preprocessed&, const Instance&, int, const SplitOptions&)> fleet;
    std::function<SplitSolution(const Preprocessed&, const Instance&, const SplitOptions&)> soft;

    static SolversUnderTest library();
};

struct VerifyConfig {
    int count = 1000;
    int max_n = 60;
    int max_fleet_n = 40;
    int max_vehicles = 8;
    std::uint64_t seed = 1;
    bool hard = true;
    bool fleet = true;
    bool soft = true;
    // Where a failing instance is written; unset keeps it in memory only.
    std::optional<std::filesystem::path> counterexample_dir;
};

struct VerifyFailure {
    std::string mode;
    int index = 0;
    std::string message;
    Instance instance;
    std::optional<std::filesystem::path> dump;
};

struct VerifyReport {
    int hard_runs = 0;
    int fleet_runs = 0;
    int soft_runs = 0;
    std::optional<VerifyFailure> failure;

    bool passed() const noexcept { return !failure; }
};

// Seeded random instance number `index` of a verification run.
Instance verify_instance(const VerifyConfig& config, const std::string& mode, int index);

// For each of `count` seeded instances and each enabled mode, compares the
// fast solver (invariant checks on) against the Bellman solver and the
// brute-force oracle: labels must agree exactly, route costs must recompute
// to the reported cost, and queue work must stay within n+1 pushes. Stops at
// the first disagreement.
VerifyReport run_verify(const VerifyConfig& config, const SolversUnderTest& solvers = SolversUnderTest::library());

} // namespace vrpsplit
