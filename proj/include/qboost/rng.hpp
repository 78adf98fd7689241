#pragma once
#include <cstdint>

namespace qboost {

// Stateless counter-based uniform generator. Every draw is a pure function of
// (seed, stream, counter), so stochastic rounding decisions are independent of
// thread count and row-partition layout: the same sample gets the same draw in
// a serial run, a multi-threaded run, and a simulated distributed run.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    // splitmix64 finalizer; full avalanche on 64 bits
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    // uniform draw in [0, 1) with 53 random bits
    double uniform(std::uint64_t stream, std::uint64_t counter) const {
        const std::uint64_t h = mix(mix(mix(seed_) ^ stream) ^ counter);
        return static_cast<double>(h >> 11) * 0x1.0p-53;
    }

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
};

}  // namespace qboost
