#pragma once

#include <cstdint>

namespace ibex {

// splitmix64; outputs are pinned by test vectors so seeded instances replicate
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), n > 0, by rejection
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = -n % n;
    for (;;) {
      std::uint64_t x = next();
      if (x >= limit) return x % n;
    }
  }

  // uniform in [lo, hi]
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // [0, 1) with 53 bits
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // failures before the first success, success probability p
  std::uint64_t geometric(double p) {
    std::uint64_t n = 0;
    while (uniform() >= p) ++n;
    return n;
  }

 private:
  std::uint64_t state_;
};

// seed of the index-th instance drawn from a base seed
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 g(base ^ (index * 0xD1B54A32D192ED03ULL));
  return g.next();
}

}  // namespace ibex
