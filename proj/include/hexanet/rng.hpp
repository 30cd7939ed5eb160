#pragma once

#include <cstdint>
#include <random>

namespace hexanet {

// Deterministic seeded generator. All randomness in the library and CLI
// flows through this; identical seeds give identical streams on every
// platform (mt19937_64 is fully specified by the standard, and we avoid
// std::uniform_int_distribution, which is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [lo, hi], inclusive, by rejection.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return lo + static_cast<std::int64_t>(r % span);
    }

    bool coin() { return engine_() & 1u; }

private:
    std::mt19937_64 engine_;
};

}  // namespace hexanet
