#pragma once

#include <functional>
#include <span>

namespace vrpsplit {

#ifdef VRPSPLIT_CHECK_INVARIANTS
inline constexpr bool kCheckInvariantsByDefault = true;
#else
inline constexpr bool kCheckInvariantsByDefault = false;
#endif

// Queue contents at the top of iteration t (before the label of t is set).
// level is the vehicle count being extended; always 0 for unlimited fleets.
struct QueueSnapshot {
    int level = 0;
    int t = 0;
    std::span<const int> queue;
};

// Instrumentation for the queue-based solvers. With both members left at their
// defaults the uninstrumented loop runs.
struct SplitOptions {
    // Asserts the loop invariant and the operation-count bound on every
    // iteration; a failure throws InvariantViolation.
    bool check_invariants = kCheckInvariantsByDefault;
    std::function<void(const QueueSnapshot&)> observer;

    bool instrumented() const noexcept { return check_invariants || static_cast<bool>(observer); }
};

inline SplitOptions checked() { return SplitOptions{.check_invariants = true, .observer = {}}; }
inline SplitOptions unchecked() { return SplitOptions{.check_invariants = false, .observer = {}}; }

} // namespace vrpsplit
