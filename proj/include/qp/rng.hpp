#pragma once

#include <cstdint>

namespace qp {

/// splitmix64: tiny deterministic engine, identical output on every
/// platform. All seeded sampling in this project goes through it.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, bound); unbiased by rejection.
  std::uint64_t bounded(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} / bound * bound;
    std::uint64_t r = next();
    while (r >= limit) r = next();
    return r % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace qp
