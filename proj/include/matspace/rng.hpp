#pragma once

#include <cstdint>
#include <random>

namespace matspace {

/// Deterministic seeded generator behind every randomized procedure.
/// Draws bypass std::uniform_int_distribution, whose output is
/// implementation-defined; mt19937_64 itself is bit-exact everywhere,
/// so identical seeds give identical runs on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, bound). bound > 0. Modulo bias is irrelevant at
    /// the bounds used here (all far below 2^32).
    std::uint64_t next_below(std::uint64_t bound) { return gen_() % bound; }

    /// Uniform integer in [lo, hi], inclusive.
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 gen_;
};

} // namespace matspace
