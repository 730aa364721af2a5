#pragma once

// Slow, independent reference computations used to check the fast tables.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "endprox/count_table.hpp"
#include "endprox/exact_models.hpp"
#include "endprox/pfold.hpp"
#include "endprox/structure.hpp"

namespace endprox::oracle {

// Histogram of one statistic over all structures of a given size.
inline std::map<StatKey, BigInt> enumerate_histogram(
    Model model, int n, const std::function<StatKey(const SecondaryStructure&)>& key) {
  std::map<StatKey, BigInt> h;
  enumerate_all(model, n, [&](const SecondaryStructure& s) { h[key(s)] += 1; });
  return h;
}

inline StatKey joint_key(const SecondaryStructure& s) {
  const auto st = exterior_stats(s);
  return {st.deg, st.unp};
}

inline StatKey hel_key(const SecondaryStructure& s) {
  const auto h = first_helix_length(s);
  return {h ? *h : kAbsent};
}

inline StatKey stm_key(const SecondaryStructure& s) {
  const auto f = first_stem(s);
  return {f ? f->pairs : kAbsent};
}

inline StatKey stem_helices_key(const SecondaryStructure& s) {
  const auto f = first_stem(s);
  return {f ? f->helices : kAbsent};
}

// D[n][l] = sum_j Cat(j) D[n-1-j][l-1] by first return, D[0][0] = 1.
inline std::map<StatKey, BigInt> dyck_first_return(int n) {
  const auto cat = catalan_numbers(n);
  std::vector<std::vector<BigInt>> d(n + 1, std::vector<BigInt>(n + 1));
  d[0][0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int l = 1; l <= m; ++l) {
      for (int j = 0; j <= m - 1; ++j) d[m][l] += cat[j] * d[m - 1 - j][l - 1];
    }
  }
  std::map<StatKey, BigInt> out;
  for (int l = 0; l <= n; ++l) {
    if (d[n][l] != 0) out[{l}] = d[n][l];
  }
  return out;
}

// M[n][unp][deg] = M[n-1][unp-1][deg] + sum_j Mtot(j) M[n-2-j][unp][deg-1].
inline std::map<StatKey, BigInt> motzkin_first_step(int n) {
  const auto mot = motzkin_numbers(n);
  std::vector<std::vector<std::vector<BigInt>>> m(
      n + 1, std::vector<std::vector<BigInt>>(n + 1, std::vector<BigInt>(n + 1)));
  m[0][0][0] = 1;
  for (int len = 1; len <= n; ++len) {
    for (int k = 0; k <= len; ++k) {
      for (int l = 0; 2 * l + k <= len; ++l) {
        BigInt v = 0;
        if (k >= 1) v += m[len - 1][k - 1][l];
        if (l >= 1) {
          for (int j = 0; j <= len - 2; ++j) v += mot[j] * m[len - 2 - j][k][l - 1];
        }
        m[len][k][l] = v;
      }
    }
  }
  std::map<StatKey, BigInt> out;
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; 2 * l + k <= n; ++l) {
      if (m[n][k][l] != 0) out[{l, k}] = m[n][k][l];
    }
  }
  return out;
}

// Motzkin paths by exterior arch count alone.
inline std::map<StatKey, BigInt> motzkin_deg_only(int n) {
  const auto mot = motzkin_numbers(n);
  std::vector<std::vector<BigInt>> d(n + 1, std::vector<BigInt>(n + 1));
  d[0][0] = 1;
  for (int len = 1; len <= n; ++len) {
    for (int l = 0; 2 * l <= len; ++l) {
      BigInt v = d[len - 1][l];
      if (l >= 1) {
        for (int j = 0; j <= len - 2; ++j) v += mot[j] * d[len - 2 - j][l - 1];
      }
      d[len][l] = v;
    }
  }
  std::map<StatKey, BigInt> out;
  for (int l = 0; 2 * l <= n; ++l) {
    if (d[n][l] != 0) out[{l}] = d[n][l];
  }
  return out;
}

// Probability that the grammar derives exactly this structure; the grammar
// is unambiguous, so each structure has at most one derivation.
class GrammarProbability {
 public:
  GrammarProbability(const SecondaryStructure& s, const PfoldParams& p)
      : partner_(s.partner_table().begin(), s.partner_table().end()), p_(p) {}

  double operator()() const {
    return partner_.empty() ? 0.0 : S(0, static_cast<int>(partner_.size()));
  }

 private:
  // End (exclusive) of the component starting at i.
  int component_end(int i) const {
    return partner_[i] == SecondaryStructure::kUnpaired ? i + 1 : partner_[i] + 1;
  }
  double L(int i, int end) const {
    if (end - i == 1 && partner_[i] == SecondaryStructure::kUnpaired) return p_.q2();
    return p_.p2 * F(i + 1, end - 1);
  }
  double S(int i, int j) const {
    const int e = component_end(i);
    const double first = L(i, e);
    return e == j ? first * p_.q1() : first * p_.p1 * S(e, j);
  }
  double F(int i, int j) const {
    if (j <= i) return 0.0;
    const int e = component_end(i);
    if (e == j) {
      if (partner_[i] == SecondaryStructure::kUnpaired) return 0.0;
      return p_.p3 * F(i + 1, j - 1);
    }
    return p_.q3() * L(i, e) * S(e, j);
  }

  std::vector<int> partner_;
  PfoldParams p_;
};

}  // namespace endprox::oracle
