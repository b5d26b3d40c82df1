#pragma once

#include <cstdint>
#include <random>

namespace vrpsplit {

// Portable deterministic generator. The engine is std::mt19937_64, whose
// output sequence is fixed by the standard; seeds are expanded with SplitMix64
// so that nearby user seeds and per-stream indices give unrelated streams.
// Integer draws use rejection sampling instead of std::uniform_int_distribution,
// whose algorithm differs between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : engine_(mix(mix(seed) ^ mix(stream + 1))) {}

    std::uint64_t next() { return engine_(); }

    // Uniform over the inclusive range [lo, hi]; requires lo <= hi.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        if (span == UINT64_MAX) return static_cast<std::int64_t>(next());
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % range);
    }

    // SplitMix64 finalizer.
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace vrpsplit
