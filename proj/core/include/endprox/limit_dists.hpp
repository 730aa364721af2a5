#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "endprox/bigint.hpp"
#include "endprox/models.hpp"
#include "endprox/pfold.hpp"
#include "endprox/structure.hpp"

namespace endprox {

// offset + NB(r, p): failures before the r-th success.
template <class T>
struct NegBinomial {
  int offset = 0;
  int r = 1;
  T p{1};
};

// Joint law of (UNP, DEG) = (i, j) with PGF c v / (1 - a u - b v)^2,
// c = (1 - a - b)^2.
template <class T>
struct JointNB {
  T a{0};
  T b{0};
  T c{1};
};

// Law of unp_weight * i + deg_weight * j + shift for (i, j) ~ joint.
template <class T>
struct SubstitutedPgf {
  JointNB<T> joint;
  int unp_weight = 1;
  int deg_weight = 1;
  int shift = 0;
};

template <class T>
using LimitDistOf = std::variant<NegBinomial<T>, JointNB<T>, SubstitutedPgf<T>>;

using LimitDist = LimitDistOf<double>;
using ExactLimitDist = LimitDistOf<Rational>;

template <class T>
struct Moments {
  T mean{0};
  T variance{0};
};

struct MomentSummary {
  double mean = 0.0;
  double variance = 0.0;
  double certified_error = 0.0;
};

struct PfoldDerived {
  double rho = 0.0;
  double delta = 0.0;
};

// R(z) = (1 - p1 q2 z)^2 (1 - p3 z^2) - 4 p2 q1 q2 q3 z^3, expanded.
double pfold_quartic(const PfoldParams& p, double z);

// Smallest positive root of R below 1/sqrt(p3), bracketed by bisection and
// polished by Newton steps. Throws Error{NoRootInRange}.
PfoldDerived pfold_rho_delta(const PfoldParams& p = {}, double tol = 1e-13);

// Limiting law of a statistic. Dyck UNP and StemHelices are point masses and
// Dyck STM equals Dyck HEL; Pfold STM and StemHelices, and ETE, are not
// parametric laws.
// Throws Error{UnsupportedCombination}.
LimitDist limit_of(Model model, Stat stat, const PfoldParams& p = {});

// The same laws with exact rational parameters (uniform models only).
ExactLimitDist exact_limit_of(Model model, Stat stat);

// (UNP, DEG) law shared by the exterior statistics of a model.
JointNB<double> joint_law(Model model, const PfoldParams& p = {});

Moments<double> moments_of(const LimitDist& d);
Moments<Rational> moments_of(const ExactLimitDist& d);
MomentSummary moments(const LimitDist& d);

double pmf(const NegBinomial<double>& d, int k);
double joint_pmf(const JointNB<double>& d, int i, int j);
Rational joint_pmf(const JointNB<Rational>& d, int i, int j);

// P(X = k) for k = 0..kmax. Joint laws expand along DEG.
std::vector<double> pmf_expand(const LimitDist& d, int kmax);

// Smallest k with P(X <= k) >= 1 - eps.
int quantile_cap(const LimitDist& d, double eps = 1e-6);

// ETE mean and variance under the model's limiting (UNP, DEG) law with the
// truncation chosen so the certified tail bound stays below tol.
// Throws Error{TolNotAchievable} beyond 10^6 diagonal terms.
MomentSummary ete_limit_moments(Model model, const EteModel& m = {},
                                double tol = 1e-4, const PfoldParams& p = {});

// Partial sums of E[ETE] and E[ETE^2] over i + j < terms, with no tail.
struct EtePartialSums {
  double first = 0.0;
  double second = 0.0;
};
EtePartialSums ete_partial_sums(const JointNB<double>& law, const EteModel& m,
                                int terms);

}  // namespace endprox
