#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace vrpsplit {

// All costs, distances and loads share one floating-point type. Integer-valued
// data stays exact, so solvers can be compared with ==.
using Cost = double;

// Unreachable labels. IEEE addition already saturates: inf + finite == inf.
inline constexpr Cost kInfinity = std::numeric_limits<Cost>::infinity();

inline bool is_finite_cost(Cost c) noexcept { return c < kInfinity; }

enum class Mode { hard, soft };

enum class Status { feasible, infeasible };

// A route serving the contiguous tour positions first..last (1-based, inclusive).
struct Route {
    int first = 0;
    int last = 0;

    int size() const noexcept { return last - first + 1; }
    friend bool operator==(const Route&, const Route&) = default;
};

// Operation counts of one predecessor queue run.
struct DequeStats {
    std::int64_t pushes = 0;
    std::int64_t front_pops = 0;
    std::int64_t back_pops = 0;

    std::int64_t pops() const noexcept { return front_pops + back_pops; }
    friend bool operator==(const DequeStats&, const DequeStats&) = default;
};

// Raised by instrumented solver runs when a queue invariant does not hold.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Raised by readers on malformed input; carries the offending line (0 = unknown).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace vrpsplit
