#pragma once

#include <cstdint>
#include <vector>

#include "endprox/bigint.hpp"
#include "endprox/pfold.hpp"
#include "endprox/rng.hpp"
#include "endprox/structure.hpp"

namespace endprox {

// Uniform Dyck path of semilength n (2n positions, all paired) by the cycle
// lemma applied to a random arrangement of n up and n + 1 down steps.
SecondaryStructure sample_dyck(int n, Rng& rng);

// Uniform Motzkin path of length n. Step probabilities are ratios of exact
// path counts, stored as 64-bit fixed-point cutoffs; a draw that lands on a
// cutoff is settled with further random words against the exact counts.
class MotzkinSampler {
 public:
  explicit MotzkinSampler(int n);

  int length() const noexcept { return n_; }
  SecondaryStructure operator()(Rng& rng) const;

 private:
  struct Cutoffs {
    std::uint64_t up = 0;       // floor(2^64 P(up))
    std::uint64_t up_flat = 0;  // floor(2^64 (P(up) + P(flat))), h >= 1
  };
  const Cutoffs& cut(int remaining, int height) const {
    return cuts_[offset_[remaining] + height];
  }

  int n_;
  std::vector<std::size_t> offset_;
  std::vector<Cutoffs> cuts_;
};

SecondaryStructure sample_motzkin(int n, Rng& rng);

// Exact draw from the grammar conditioned on output length n by stochastic
// traceback through the inside weights. Throws Error{ZeroMassLength}.
class PfoldSampler {
 public:
  PfoldSampler(int n, const PfoldParams& p = {});

  int length() const noexcept { return n_; }
  SecondaryStructure operator()(Rng& rng) const;

 private:
  int n_;
  PfoldInside inside_;
  std::vector<std::vector<double>> split_cdf_;  // [m][a-1] = sum_{b<=a} L(b) S(m-b)
};

SecondaryStructure sample_pfold(int n, const PfoldParams& p, Rng& rng);

// Uniform U in [0, 1) revealed 64 bits at a time. Repeated comparisons see
// the same U.
class LazyUniform {
 public:
  explicit LazyUniform(Rng& rng) : rng_(rng) {}
  std::uint64_t word(std::size_t i);

 private:
  Rng& rng_;
  std::vector<std::uint64_t> words_;
};

// Exact test U < num / den for 0 <= num <= den, den > 0.
bool uniform_less(LazyUniform& u, const BigInt& num, const BigInt& den);

}  // namespace endprox
