#include "endprox/limit_dists.hpp"

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/negative_binomial.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "endprox/error.hpp"

namespace endprox {

namespace {

constexpr int kMaxTerms = 1'000'000;

[[noreturn]] void unsupported(Model model, Stat stat) {
  throw Error(Errc::UnsupportedCombination,
              "no limiting law for " + std::string(to_string(stat)) +
                  " under " + std::string(to_string(model)));
}

template <class T>
JointNB<T> make_joint(T a, T b) {
  const T s = T(1) - a - b;
  return {a, b, s * s};
}

template <class T>
LimitDistOf<T> build_limit(Model model, Stat stat, const JointNB<T>& joint,
                           const T& hel_p) {
  const T one(1);
  switch (stat) {
    case Stat::JOINT: return joint;
    case Stat::DEG:
      return NegBinomial<T>{1, 2, (one - joint.a - joint.b) / (one - joint.a)};
    case Stat::UNP:
      if (model == Model::Dyck) return NegBinomial<T>{0, 1, one};
      return NegBinomial<T>{0, 2, one - joint.a / (one - joint.b)};
    case Stat::CHN: return NegBinomial<T>{0, 2, one - joint.a - joint.b};
    case Stat::LEN: return SubstitutedPgf<T>{joint, 1, 2, 0};
    case Stat::HEL: return NegBinomial<T>{1, 1, hel_p};
    case Stat::STM:
      if (model == Model::Motzkin) return NegBinomial<T>{1, 1, T(3) / T(4)};
      if (model == Model::Dyck) return NegBinomial<T>{1, 1, hel_p};
      break;
    case Stat::StemHelices:
      if (model == Model::Motzkin) return NegBinomial<T>{1, 1, T(27) / T(32)};
      if (model == Model::Dyck) return NegBinomial<T>{1, 1, one};
      break;
    case Stat::ETE: break;
  }
  unsupported(model, stat);
}

template <class T>
Moments<T> nb_moments(const NegBinomial<T>& d) {
  const T q = T(1) - d.p;
  return {T(d.offset) + T(d.r) * q / d.p, T(d.r) * q / (d.p * d.p)};
}

// X = e1 i + e2 j + shift has PGF c u^(e2+shift) / D(u)^2 with
// D(u) = 1 - a u^e1 - b u^e2; mean and variance follow from log G.
template <class T>
Moments<T> substituted_moments(const SubstitutedPgf<T>& d) {
  const T a = d.joint.a, b = d.joint.b;
  const T e1(d.unp_weight), e2(d.deg_weight);
  const T m = e2 + T(d.shift);
  const T d0 = T(1) - a - b;
  const T d1 = -a * e1 - b * e2;
  const T d2 = -a * e1 * (e1 - T(1)) - b * e2 * (e2 - T(1));
  const T mean = m - T(2) * d1 / d0;
  const T log_second = -m - T(2) * (d2 * d0 - d1 * d1) / (d0 * d0);
  return {mean, log_second + mean};
}

template <class T>
Moments<T> moments_impl(const LimitDistOf<T>& d) {
  if (const auto* nb = std::get_if<NegBinomial<T>>(&d)) return nb_moments(*nb);
  if (const auto* j = std::get_if<JointNB<T>>(&d)) {
    const T one(1);
    return nb_moments(NegBinomial<T>{1, 2, (one - j->a - j->b) / (one - j->a)});
  }
  return substituted_moments(std::get<SubstitutedPgf<T>>(d));
}

double log_choose(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Certified bound on sum_{n >= K} n^power x^(n-1) through the ratio of
// consecutive terms, which is at most ((K+1)/K)^power x from K on.
double tail_bound(int power, double x, int K) {
  const double r = std::pow((K + 1.0) / K, power) * x;
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  return std::pow(static_cast<double>(K), power) * std::pow(x, K - 1) / (1.0 - r);
}

}  // namespace

double pfold_quartic(const PfoldParams& p, double z) {
  const double alpha = p.p1 * p.q2();
  const double beta = p.p3;
  const double gamma = 4.0 * p.p2 * p.q1() * p.q2() * p.q3();
  const double a2 = alpha * alpha;
  return 1.0 + z * (-2.0 * alpha +
                    z * ((a2 - beta) +
                         z * ((2.0 * alpha * beta - gamma) - z * a2 * beta)));
}

PfoldDerived pfold_rho_delta(const PfoldParams& p, double tol) {
  p.validate();
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "tol must be positive");
  const double alpha = p.p1 * p.q2();
  const double beta = p.p3;
  const double gamma = 4.0 * p.p2 * p.q1() * p.q2() * p.q3();
  const double upper = 1.0 / std::sqrt(beta);
  auto R = [&](double z) { return pfold_quartic(p, z); };
  auto dR = [&](double z) {
    const double a2 = alpha * alpha;
    return -2.0 * alpha +
           z * (2.0 * (a2 - beta) +
                z * (3.0 * (2.0 * alpha * beta - gamma) - 4.0 * z * a2 * beta));
  };

  constexpr int kGrid = 4096;
  double lo = 0.0, hi = 0.0;
  bool found = false;
  for (int g = 1; g <= kGrid; ++g) {
    const double z = upper * g / kGrid;
    if (R(z) <= 0.0) {
      lo = upper * (g - 1) / kGrid;
      hi = z;
      found = true;
      break;
    }
  }
  if (!found) {
    throw Error(Errc::NoRootInRange, "R(z) keeps its sign on (0, 1/sqrt(p3))");
  }
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (R(mid) > 0.0 ? lo : hi) = mid;
  }
  double z = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double step = R(z) / dR(z);
    double next = z - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    (R(next) > 0.0 ? lo : hi) = next;
    const bool done = std::abs(next - z) < tol;
    z = next;
    if (done) break;
  }
  return {z, alpha * z};
}

JointNB<double> joint_law(Model model, const PfoldParams& p) {
  switch (model) {
    case Model::Dyck: return make_joint(0.0, 0.5);
    case Model::Motzkin: return make_joint(1.0 / 3.0, 1.0 / 3.0);
    case Model::Pfold: {
      const double d = pfold_rho_delta(p).delta;
      return make_joint(d, d * (1.0 - d) / (1.0 + d));
    }
  }
  throw Error(Errc::InvalidArgument, "unknown model");
}

LimitDist limit_of(Model model, Stat stat, const PfoldParams& p) {
  double hel_p = 0.0;
  switch (model) {
    case Model::Dyck: hel_p = 0.75; break;
    case Model::Motzkin: hel_p = 8.0 / 9.0; break;
    case Model::Pfold: {
      if (stat == Stat::STM || stat == Stat::StemHelices) unsupported(model, stat);
      const double rho = pfold_rho_delta(p).rho;
      hel_p = 1.0 - rho * rho * p.p3;
      break;
    }
  }
  return build_limit<double>(model, stat, joint_law(model, p), hel_p);
}

ExactLimitDist exact_limit_of(Model model, Stat stat) {
  switch (model) {
    case Model::Dyck:
      return build_limit<Rational>(model, stat,
                                   make_joint(Rational(0), Rational(1, 2)),
                                   Rational(3, 4));
    case Model::Motzkin:
      return build_limit<Rational>(model, stat,
                                   make_joint(Rational(1, 3), Rational(1, 3)),
                                   Rational(8, 9));
    case Model::Pfold: break;
  }
  unsupported(model, stat);
}

Moments<double> moments_of(const LimitDist& d) { return moments_impl(d); }
Moments<Rational> moments_of(const ExactLimitDist& d) { return moments_impl(d); }

MomentSummary moments(const LimitDist& d) {
  const auto m = moments_impl(d);
  return {m.mean, m.variance, 0.0};
}

double pmf(const NegBinomial<double>& d, int k) {
  const int x = k - d.offset;
  if (x < 0) return 0.0;
  if (d.p >= 1.0) return x == 0 ? 1.0 : 0.0;
  return boost::math::pdf(boost::math::negative_binomial(d.r, d.p), x);
}

double joint_pmf(const JointNB<double>& d, int i, int j) {
  if (i < 0 || j < 1) return 0.0;
  if (i > 0 && d.a == 0.0) return 0.0;
  if (j > 1 && d.b == 0.0) return 0.0;
  const int n = i + j;
  double log_p = std::log(d.c) + log_choose(n - 1, i) + std::log(n);
  if (i > 0) log_p += i * std::log(d.a);
  if (j > 1) log_p += (j - 1) * std::log(d.b);
  return std::exp(log_p);
}

Rational joint_pmf(const JointNB<Rational>& d, int i, int j) {
  if (i < 0 || j < 1) return Rational(0);
  const int n = i + j;
  BigInt choose = 1;
  for (int t = 1; t <= i; ++t) choose = choose * (n - t) / t;
  Rational out = d.c * Rational(choose) * n;
  for (int t = 0; t < i; ++t) out *= d.a;
  for (int t = 1; t < j; ++t) out *= d.b;
  return out;
}

std::vector<double> pmf_expand(const LimitDist& d, int kmax) {
  if (kmax < 0) throw Error(Errc::InvalidArgument, "kmax must be nonnegative");
  std::vector<double> out(kmax + 1, 0.0);
  if (const auto* nb = std::get_if<NegBinomial<double>>(&d)) {
    for (int k = 0; k <= kmax; ++k) out[k] = pmf(*nb, k);
  } else if (const auto* j = std::get_if<JointNB<double>>(&d)) {
    const NegBinomial<double> deg{1, 2, (1.0 - j->a - j->b) / (1.0 - j->a)};
    for (int k = 0; k <= kmax; ++k) out[k] = pmf(deg, k);
  } else {
    const auto& s = std::get<SubstitutedPgf<double>>(d);
    for (int deg = 1; s.deg_weight * deg + s.shift <= kmax; ++deg) {
      for (int unp = 0;; ++unp) {
        const int x = s.unp_weight * unp + s.deg_weight * deg + s.shift;
        if (x > kmax) break;
        if (x >= 0) out[x] += joint_pmf(s.joint, unp, deg);
        if (s.unp_weight == 0) break;
      }
    }
  }
  return out;
}

int quantile_cap(const LimitDist& d, double eps) {
  for (int kmax = 64; kmax <= kMaxTerms; kmax *= 2) {
    const auto probs = pmf_expand(d, kmax);
    double cdf = 0.0;
    for (int k = 0; k <= kmax; ++k) {
      cdf += probs[k];
      if (cdf >= 1.0 - eps) return k;
    }
  }
  throw Error(Errc::TolNotAchievable, "quantile lies beyond 10^6");
}

EtePartialSums ete_partial_sums(const JointNB<double>& law, const EteModel& m,
                                int terms) {
  EtePartialSums out;
  const double s = law.a + law.b;
  const double share = s > 0.0 ? law.a / s : 0.0;
  for (int n = 1; n < terms; ++n) {
    // P(i + j = n) = c n s^(n-1); given n, i ~ Binomial(n - 1, a / s).
    const double diag = law.c * n * std::pow(s, n - 1);
    if (diag == 0.0) break;
    const boost::math::binomial_distribution<double> split(n - 1, share);
    const double chn = std::pow(static_cast<double>(n - 1), m.exponent);
    for (int i = 0; i < n; ++i) {
      const double w = share == 0.0 ? (i == 0 ? 1.0 : 0.0)
                                    : boost::math::pdf(split, i);
      if (w == 0.0) continue;
      const double deg = std::pow(static_cast<double>(n - i), m.exponent);
      const double sq = m.b_nm * m.b_nm * deg + m.c_nm * m.c_nm * chn;
      out.first += diag * w * std::sqrt(sq);
      out.second += diag * w * sq;
    }
  }
  return out;
}

MomentSummary ete_limit_moments(Model model, const EteModel& m, double tol,
                                const PfoldParams& p) {
  m.validate();
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "tol must be positive");
  const JointNB<double> law = joint_law(model, p);
  const double s = law.a + law.b;
  const double step2 = m.b_nm * m.b_nm + m.c_nm * m.c_nm;

  // ETE <= sqrt(b^2 + c^2) n on the diagonal i + j = n.
  auto tails = [&](int K) {
    return std::pair{law.c * std::sqrt(step2) * tail_bound(2, s, K),
                     law.c * step2 * tail_bound(3, s, K)};
  };
  int K = 8;
  while (true) {
    const auto [t1, t2] = tails(K);
    if (t1 <= tol / 4 && t2 <= tol / 4) break;
    K *= 2;
    if (K > kMaxTerms) {
      throw Error(Errc::TolNotAchievable,
                  "tail bound needs more than 10^6 terms");
    }
  }
  while (true) {
    const auto sums = ete_partial_sums(law, m, K);
    const auto [t1, t2] = tails(K);
    const double var = sums.second - sums.first * sums.first;
    const double var_err = t2 + 2.0 * (sums.first + t1) * t1 + t1 * t1;
    const double err = std::max(t1, var_err);
    if (err <= tol) return {sums.first, std::max(0.0, var), err};
    K *= 2;
    if (K > kMaxTerms) {
      throw Error(Errc::TolNotAchievable,
                  "tail bound needs more than 10^6 terms");
    }
  }
}

}  // namespace endprox
