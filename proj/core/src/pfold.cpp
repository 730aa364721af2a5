#include "endprox/pfold.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "endprox/error.hpp"

namespace endprox {

void PfoldParams::validate() const {
  for (double p : {p1, p2, p3}) {
    if (!(p > 0.0 && p < 1.0)) {
      throw Error(Errc::InvalidArgument,
                  "rule probabilities must lie strictly between 0 and 1");
    }
  }
}

PfoldInside::PfoldInside(const PfoldParams& p, int max_length) : p_(p) {
  p.validate();
  if (max_length < 0) {
    throw Error(Errc::InvalidArgument, "length must be nonnegative");
  }
  const auto size = static_cast<std::size_t>(max_length) + 1;
  s_.assign(size, 0.0);
  l_.assign(size, 0.0);
  f_.assign(size, 0.0);
  ls_.assign(size, 0.0);
  for (int n = 1; n <= max_length; ++n) {
    l_[n] = p.p2 * F(n - 2) + (n == 1 ? p.q2() : 0.0);
    double ls = 0.0;
    for (int a = 1; a < n; ++a) ls += l_[a] * s_[n - a];
    ls_[n] = ls;
    s_[n] = p.p1 * ls + p.q1() * l_[n];
    f_[n] = p.p3 * F(n - 2) + p.q3() * ls;
  }
}

PfoldExterior::PfoldExterior(const PfoldParams& p, int max_length)
    : inside_(p, max_length) {
  // f(z) = p2 z^2 F(z) generates one exterior arch; arches need >= 4 bases.
  const int n = max_length;
  std::vector<double> arch(n + 1, 0.0);
  for (int j = 4; j <= n; ++j) arch[j] = p.p2 * inside_.F(j - 2);

  arch_powers_.push_back(std::vector<double>(n + 1, 0.0));
  arch_powers_[0][0] = 1.0;
  for (int l = 1; 4 * l <= n; ++l) {
    const auto& prev = arch_powers_.back();
    std::vector<double> cur(n + 1, 0.0);
    for (int i = 4 * (l - 1); i <= n; ++i) {
      if (prev[i] == 0.0) continue;
      for (int j = 4; i + j <= n; ++j) cur[i + j] += prev[i] * arch[j];
    }
    arch_powers_.push_back(std::move(cur));
  }
}

// S_ex(n, k, l) = q1 p1^(k+l-1) C(k+l, k) q2^k [z^(n-k)] f^l, with k exterior
// unpaired bases and l exterior arches.
template <class Visit>
void PfoldExterior::visit(int n, Visit&& fn) const {
  if (n < 1 || n > inside_.max_length()) {
    throw Error(Errc::InvalidArgument,
                "length " + std::to_string(n) + " outside the table");
  }
  const auto& p = inside_.params();
  const double x = p.p1 * p.q2();
  for (int l = 0; l < static_cast<int>(arch_powers_.size()); ++l) {
    const auto& power = arch_powers_[l];
    // coef(k, l) = q1 p1^(l-1) C(k+l, k) (p1 q2)^k, built up in k
    double coef = p.q1() * std::pow(p.p1, l - 1);
    for (int k = 0; k + 4 * l <= n; ++k) {
      if (k > 0) coef *= x * (k + l) / k;
      if (k + l == 0) continue;
      const double w = coef * power[n - k];
      if (w != 0.0) fn(l, k, w);
    }
  }
}

RealTable PfoldExterior::weights(int n) const {
  RealTable t;
  t.model = Model::Pfold;
  t.size = n;
  t.stat_names = {"DEG", "UNP"};
  visit(n, [&](int deg, int unp, double w) { t.entries[{deg, unp}] = w; });
  return t;
}

double PfoldExterior::total_weight(int n) const {
  double total = 0.0;
  visit(n, [&](int, int, double w) { total += w; });
  return total;
}

RealTable pfold_joint_probs(int n, const PfoldParams& p) {
  if (n < 1) {
    throw Error(Errc::ZeroMassLength, "the grammar derives no empty string");
  }
  const PfoldExterior ext(p, n);
  const double mass = ext.inside().S(n);
  if (!(mass > 0.0)) {
    throw Error(Errc::ZeroMassLength,
                "length " + std::to_string(n) + " has zero probability");
  }
  RealTable t = ext.weights(n);
  for (auto& [key, w] : t.entries) w /= mass;
  return t;
}

RealTable pfold_hel_probs(int n, const PfoldParams& p) {
  if (n < 1) {
    throw Error(Errc::ZeroMassLength, "the grammar derives no empty string");
  }
  const PfoldInside in(p, n);
  const double mass = in.S(n);
  if (!(mass > 0.0)) {
    throw Error(Errc::ZeroMassLength,
                "length " + std::to_string(n) + " has zero probability");
  }
  RealTable t;
  t.model = Model::Pfold;
  t.size = n;
  t.stat_names = {"HEL"};

  const double x = p.p1 * p.q2();
  t.entries[{kAbsent}] = p.q1() * p.q2() * std::pow(x, n - 1) / mass;

  // Leading dots, then a helix of h pairs around L S, then the rest:
  // W = 1/(1 - x z) * LS(z) * (p1 S(z) + q1).
  std::vector<double> rest(n + 1, 0.0);
  rest[0] = p.q1();
  for (int m = 1; m <= n; ++m) rest[m] = p.p1 * in.S(m);
  std::vector<double> w(n + 1, 0.0);
  for (int a = 2; a <= n; ++a) {
    const double ls = in.LS(a);
    if (ls == 0.0) continue;
    for (int b = 0; a + b <= n; ++b) w[a + b] += ls * rest[b];
  }
  for (int m = 1; m <= n; ++m) w[m] += x * w[m - 1];

  double helix = p.p2 * p.q3();
  for (int h = 1; 2 * h + 2 <= n; ++h) {
    const double v = helix * w[n - 2 * h];
    if (v > 0.0) t.entries[{h}] = v / mass;
    helix *= p.p3;
  }
  return t;
}

}  // namespace endprox
