#pragma once

#include <vector>

#include "endprox/count_table.hpp"

namespace endprox {

// Rule probabilities of the three-rule grammar
//   S -> L S (p1) | L (q1),  L -> ( F ) (p2) | . (q2),  F -> ( F ) (p3) | L S (q3)
struct PfoldParams {
  double p1 = 0.868534;
  double p2 = 0.105397;
  double p3 = 0.787640;

  double q1() const { return 1.0 - p1; }
  double q2() const { return 1.0 - p2; }
  double q3() const { return 1.0 - p3; }

  // Throws Error{InvalidArgument} unless every p lies strictly in (0, 1).
  void validate() const;
};

// Inside weights by output length 0..max_length: the probability that each
// nonterminal derives some string of exactly that length.
class PfoldInside {
 public:
  PfoldInside(const PfoldParams& p, int max_length);

  const PfoldParams& params() const noexcept { return p_; }
  int max_length() const noexcept { return static_cast<int>(s_.size()) - 1; }

  double S(int n) const { return get(s_, n); }
  double L(int n) const { return get(l_, n); }
  double F(int n) const { return get(f_, n); }
  double LS(int n) const { return get(ls_, n); }

 private:
  static double get(const std::vector<double>& v, int n) {
    return n < 0 || n >= static_cast<int>(v.size()) ? 0.0 : v[n];
  }

  PfoldParams p_;
  std::vector<double> s_, l_, f_, ls_;
};

// Exterior-loop weights S_ex(n, unp, deg) for every n up to max_length,
// sharing one table of arch-sequence coefficients.
class PfoldExterior {
 public:
  PfoldExterior(const PfoldParams& p, int max_length);

  const PfoldInside& inside() const noexcept { return inside_; }

  // Unconditional weights keyed {deg, unp}; they sum to S(n).
  RealTable weights(int n) const;
  double total_weight(int n) const;

 private:
  template <class Visit>
  void visit(int n, Visit&& fn) const;

  PfoldInside inside_;
  std::vector<std::vector<double>> arch_powers_;  // [l][j] = [z^j] f(z)^l
};

// Exterior (deg, unp) law conditional on length n, keyed {deg, unp}.
// Throws Error{ZeroMassLength} when S(n) = 0.
RealTable pfold_joint_probs(int n, const PfoldParams& p = {});

// First-helix length law conditional on length n; the all-unpaired string is
// reported under kAbsent. Throws Error{ZeroMassLength}.
RealTable pfold_hel_probs(int n, const PfoldParams& p = {});

}  // namespace endprox
