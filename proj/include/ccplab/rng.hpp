#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace ccplab {

// SplitMix64 finalizer (Steele, Lea, Flood). Used for seed mixing only.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Counter-based child-seed derivation: trial i is reproducible in isolation,
// so batches give identical results at any parallelism degree.
inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

// Owned random source. The draw algorithms are spelled out here instead of
// using std::*_distribution, whose output is implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53-bit resolution.
    double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform integer on [0, n). Rejection sampling, no modulo bias.
    std::int64_t below(std::int64_t n) {
        if (n <= 0) throw std::invalid_argument("Rng::below: n must be positive");
        const auto un = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return static_cast<std::int64_t>(v % un);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace ccplab
