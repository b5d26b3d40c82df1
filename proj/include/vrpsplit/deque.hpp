#pragma once

#include <cassert>
#include <span>
#include <vector>

#include "vrpsplit/types.hpp"

namespace vrpsplit {

// Double-ended queue of node indices over a fixed buffer. Every index enters
// at most once between two resets, so the cursors only move forward and no
// wrap-around is needed.
class PredecessorDeque {
public:
    explicit PredecessorDeque(int capacity) : slots_(static_cast<std::size_t>(capacity)) {}

    // Empties the queue and pushes `first`. Counters keep accumulating.
    void reset(int first) {
        front_ = 0;
        back_ = 0;
        push_back(first);
    }

    int size() const noexcept { return back_ - front_; }
    bool empty() const noexcept { return back_ == front_; }

    int front() const noexcept {
        assert(size() >= 1);
        return slots_[static_cast<std::size_t>(front_)];
    }
    int front2() const noexcept {
        assert(size() >= 2);
        return slots_[static_cast<std::size_t>(front_ + 1)];
    }
    int back() const noexcept {
        assert(size() >= 1);
        return slots_[static_cast<std::size_t>(back_ - 1)];
    }

    void push_back(int node) {
        assert(static_cast<std::size_t>(back_) < slots_.size());
        slots_[static_cast<std::size_t>(back_++)] = node;
        ++stats_.pushes;
    }
    void pop_front() noexcept {
        assert(!empty());
        ++front_;
        ++stats_.front_pops;
    }
    void pop_back() noexcept {
        assert(!empty());
        --back_;
        ++stats_.back_pops;
    }

    // Live elements, front first.
    std::span<const int> elements() const noexcept {
        return std::span(slots_).subspan(static_cast<std::size_t>(front_), static_cast<std::size_t>(size()));
    }

    const DequeStats& stats() const noexcept { return stats_; }

private:
    std::vector<int> slots_;
    int front_ = 0;
    int back_ = 0;
    DequeStats stats_;
};

} // namespace vrpsplit
