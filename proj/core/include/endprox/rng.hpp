#pragma once

#include <cstdint>

namespace endprox {

// SplitMix64: a counter-based 64-bit generator. The output sequence depends
// only on the seed, so streams are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) noexcept : seed_(seed), state_(seed) {}

  // Independent stream number `index` derived from `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() noexcept;

  // Uniform on [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace endprox
