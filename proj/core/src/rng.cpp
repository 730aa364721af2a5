#include "endprox/rng.hpp"

namespace endprox {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) noexcept {
  return Rng(mix(seed + kGolden * (index + 1)) ^ mix(index));
}

std::uint64_t Rng::next() noexcept {
  state_ += kGolden;
  return mix(state_);
}

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
  // Reject the low partial block so every residue is equally likely.
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

double Rng::uniform01() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

}  // namespace endprox
