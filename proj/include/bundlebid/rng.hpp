#pragma once

#include <cstdint>

namespace bundlebid {

// Splittable 64-bit PRNG (splitmix64). Fixed algorithm so seeded runs are
// byte-identical across platforms; std::mt19937 + std::uniform_* would not
// guarantee that for the distribution step.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Derive an independent stream; stream k is the same no matter how many
  // values were drawn from the parent.
  static SplitMix64 stream(uint64_t seed, uint64_t k) {
    SplitMix64 mix(seed ^ (0x2545f4914f6cdd1dULL * (k + 1)));
    return SplitMix64(mix.next());
  }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), bound >= 1. Unbiased via rejection.
  uint64_t next_below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  uint64_t state_;
};

}  // namespace bundlebid
