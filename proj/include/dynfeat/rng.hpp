#pragma once

#include <cmath>
#include <cstdint>

namespace dynfeat {

// Counter-based RNG: the i-th output is a pure function of (seed, stream, i).
// Splitting off independent streams is cheap and order-free, so generators
// can run in parallel and still produce bit-identical results. Mixing is the
// splitmix64 finalizer applied to the keyed counter.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed ^ 0x9e3779b97f4a7c15ull) ^ mix(stream + 0x85ebca6b0f6a4c3bull)) {}

    // Child generator with its own stream; independent of this one's position.
    CounterRng split(std::uint64_t stream) const {
        CounterRng child(0);
        child.key_ = mix(key_ + 0xbf58476d1ce4e5b9ull) ^ mix(stream ^ 0x94d049bb133111ebull);
        child.counter_ = 0;
        return child;
    }

    std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

    // Uniform in [0, 1), 53 bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t threshold = -n % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Standard normal via Box-Muller; consumes exactly two uniforms.
    double normal() {
        const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

private:
    static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ull;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebull;
        x ^= x >> 31;
        return x;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace dynfeat
