#pragma once

#include <cstdint>
#include <random>

namespace lrs {

/// SplitMix64 finalizer, used to derive independent seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Portable seeded generator: std::mt19937_64 (whose output sequence is fixed
/// by the standard) plus an in-house bounded draw, since the standard
/// distributions differ between library vendors.
///
/// Stream splitting: the generator for trial i of a run seeded with s is
/// seeded with splitmix64(s ^ splitmix64(i + 1)).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng for_stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix64(seed ^ splitmix64(index + 1)));
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound), bound > 0; rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace lrs
