#include "endprox/exact_models.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "endprox/error.hpp"

namespace endprox {

double ratio(const BigInt& a, const BigInt& b) {
  long ea = 0, eb = 0;
  const double ma = mpz_get_d_2exp(&ea, a.backend().data());
  const double mb = mpz_get_d_2exp(&eb, b.backend().data());
  return std::ldexp(ma / mb, static_cast<int>(ea - eb));
}

namespace {

using Series = std::vector<BigInt>;

void require_size(int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "size must be nonnegative");
}

Series convolve(const Series& a, const Series& b, int len) {
  Series out(len + 1);
  for (int i = 0; i <= len && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= len && j < static_cast<int>(b.size()); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Multiplication by 1/(1-z).
void prefix_sum(Series& a) {
  for (std::size_t i = 1; i < a.size(); ++i) a[i] += a[i - 1];
}

void shift_up(Series& a, int by) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    a[i] = i >= by ? a[i - by] : BigInt(0);
  }
}

// Motzkin numbers shifted down by one (the all-dots path removed), zero at
// negative indices.
BigInt motzkin_minus_one(const std::vector<BigInt>& mot, int j) {
  return j < 0 ? BigInt(0) : mot[j] - 1;
}

ExactTable make_table(Model model, int n, std::vector<std::string> names) {
  ExactTable t;
  t.model = model;
  t.size = n;
  t.stat_names = std::move(names);
  return t;
}

// Without unpaired bases every stem is a single helix, so the same table
// serves HEL and STM.
ExactTable dyck_hel(int n, const char* name = "HEL") {
  auto table = make_table(Model::Dyck, n, {name});
  if (n == 0) {
    table.entries[{kAbsent}] = 1;
    return table;
  }
  const auto cat = catalan_numbers(n);
  for (int h = 1; h <= n; ++h) {
    BigInt c = cat[n - h + 1];
    if (n - h >= 1) c -= cat[n - h];
    if (c != 0) table.entries[{h}] = c;
  }
  return table;
}

ExactTable dyck_stem_helices(int n) {
  auto table = make_table(Model::Dyck, n, {"StemHelices"});
  if (n == 0) {
    table.entries[{kAbsent}] = 1;
  } else {
    table.entries[{1}] = catalan_numbers(n).back();
  }
  return table;
}

ExactTable motzkin_hel(int n) {
  auto table = make_table(Model::Motzkin, n, {"HEL"});
  table.entries[{kAbsent}] = 1;
  const auto mot = motzkin_numbers(n + 2);
  for (int h = 1; 2 * h <= n; ++h) {
    const BigInt c =
        motzkin_minus_one(mot, n - 2 * h + 2) - motzkin_minus_one(mot, n - 2 * h);
    if (c != 0) table.entries[{h}] = c;
  }
  return table;
}

// Loop contents that end a stem: only unpaired bases, or at least two
// closing children. B = L + z^4 L^2 M^3 with L = 1/(1-z).
Series stem_terminal(const Series& mot, int n) {
  Series m3 = convolve(convolve(mot, mot, n), mot, n);
  prefix_sum(m3);
  prefix_sum(m3);
  shift_up(m3, 4);
  for (auto& x : m3) x += 1;
  return m3;
}

ExactTable motzkin_stm(int n) {
  auto table = make_table(Model::Motzkin, n, {"STM"});
  table.entries[{kAbsent}] = 1;
  if (n < 2) return table;
  const auto mot = motzkin_numbers(n);
  // [z^n] z^{2s} L^{2s-1} B M for a stem of s pairs.
  Series v = convolve(stem_terminal(mot, n), mot, n);
  prefix_sum(v);
  for (int s = 1; 2 * s <= n; ++s) {
    if (v[n - 2 * s] != 0) table.entries[{s}] = v[n - 2 * s];
    prefix_sum(v);
    prefix_sum(v);
  }
  return table;
}

ExactTable motzkin_stem_helices(int n) {
  auto table = make_table(Model::Motzkin, n, {"StemHelices"});
  table.entries[{kAbsent}] = 1;
  if (n < 2) return table;
  const auto mot = motzkin_numbers(n);
  Series lm = mot;
  prefix_sum(lm);

  auto divide_one_minus_z2 = [](Series& a) {
    for (std::size_t i = 2; i < a.size(); ++i) a[i] += a[i - 2];
  };
  // x holds the stem interior below the first pair with s-1 helix breaks:
  // B/(1-z^2) * (z^2 (L^2 - 1)/(1-z^2))^(s-1).
  Series x = stem_terminal(mot, n);
  divide_one_minus_z2(x);
  for (int s = 1;; ++s) {
    BigInt c = 0;
    for (int k = 0; k <= n - 2; ++k) c += lm[n - 2 - k] * x[k];
    if (c == 0) break;
    table.entries[{s}] = c;

    Series y = x;
    prefix_sum(y);
    prefix_sum(y);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= x[i];
    shift_up(y, 2);
    divide_one_minus_z2(y);
    x = std::move(y);
  }
  return table;
}

void enumerate_dyck(int n, int pos, int open, std::vector<int>& partner,
                    std::vector<int>& stack,
                    const std::function<void(const SecondaryStructure&)>& fn) {
  const int len = 2 * n;
  if (pos == len) {
    fn(SecondaryStructure(partner));
    return;
  }
  if (open < n) {
    stack.push_back(pos);
    enumerate_dyck(n, pos + 1, open + 1, partner, stack, fn);
    stack.pop_back();
  }
  if (!stack.empty()) {
    const int o = stack.back();
    stack.pop_back();
    partner[o] = pos;
    partner[pos] = o;
    enumerate_dyck(n, pos + 1, open, partner, stack, fn);
    partner[o] = partner[pos] = SecondaryStructure::kUnpaired;
    stack.push_back(o);
  }
}

void enumerate_motzkin(int n, int pos, std::vector<int>& partner,
                       std::vector<int>& stack,
                       const std::function<void(const SecondaryStructure&)>& fn) {
  if (pos == n) {
    fn(SecondaryStructure(partner));
    return;
  }
  const int remaining = n - pos;
  const int depth = static_cast<int>(stack.size());
  if (remaining > depth) {
    enumerate_motzkin(n, pos + 1, partner, stack, fn);
  }
  if (remaining > depth + 1) {
    stack.push_back(pos);
    enumerate_motzkin(n, pos + 1, partner, stack, fn);
    stack.pop_back();
  }
  if (depth > 0) {
    const int o = stack.back();
    stack.pop_back();
    partner[o] = pos;
    partner[pos] = o;
    enumerate_motzkin(n, pos + 1, partner, stack, fn);
    partner[o] = partner[pos] = SecondaryStructure::kUnpaired;
    stack.push_back(o);
  }
}

std::map<int, double> normalize(const std::map<int, BigInt>& counts,
                                const BigInt& total) {
  std::map<int, double> out;
  for (const auto& [k, c] : counts) out[k] = ratio(c, total);
  return out;
}

std::map<int, double> normalize(const ExactTable& t) {
  std::map<int, BigInt> counts;
  for (const auto& [key, c] : t.entries) counts[key.front()] += c;
  return normalize(counts, t.total());
}

int linear_stat(Stat stat, int deg, int unp) {
  switch (stat) {
    case Stat::DEG: return deg;
    case Stat::UNP: return unp;
    case Stat::CHN: return std::max(0, deg + unp - 1);
    case Stat::LEN: return 2 * deg + unp;
    default: break;
  }
  throw Error(Errc::UnsupportedCombination,
              std::string(to_string(stat)) + " is not an exterior-loop count");
}

bool is_linear(Stat stat) {
  return stat == Stat::DEG || stat == Stat::UNP || stat == Stat::CHN ||
         stat == Stat::LEN;
}

}  // namespace

std::vector<BigInt> catalan_numbers(int nmax) {
  require_size(nmax);
  std::vector<BigInt> c(nmax + 1);
  c[0] = 1;
  for (int n = 0; n < nmax; ++n) c[n + 1] = c[n] * (2 * (2 * n + 1)) / (n + 2);
  return c;
}

std::vector<BigInt> motzkin_numbers(int nmax) {
  require_size(nmax);
  std::vector<BigInt> m(std::max(nmax + 1, 2));
  m[0] = 1;
  m[1] = 1;
  for (int n = 2; n <= nmax; ++n) {
    m[n] = ((2 * n + 1) * m[n - 1] + (3 * n - 3) * m[n - 2]) / (n + 2);
  }
  m.resize(nmax + 1);
  return m;
}

ExactTable dyck_deg_counts(int n) {
  require_size(n);
  auto table = make_table(Model::Dyck, n, {"DEG"});
  if (n == 0) {
    table.entries[{0}] = 1;
    return table;
  }
  // Ballot numbers: F(m, k) = F(m-1, k-1) + F(m, k+1), F(m, m) = 1.
  std::vector<BigInt> prev{1}, cur;
  for (int m = 1; m <= n; ++m) {
    cur.assign(m + 2, 0);
    cur[m] = 1;
    for (int k = m - 1; k >= 1; --k) cur[k] = prev[k - 1] + cur[k + 1];
    prev.swap(cur);
  }
  for (int k = 1; k <= n; ++k) table.entries[{k}] = prev[k];
  return table;
}

void for_each_motzkin_joint(
    int n, const std::function<void(int, int, const BigInt&)>& fn) {
  require_size(n);
  fn(0, n, BigInt(1));
  // A path with deg >= 1 arches and unp exterior dots interleaves the two
  // kinds in C(deg+unp, deg) ways; its arch interiors form deg Motzkin paths
  // of total length j = n - unp - 2 deg, counted by prefixes of length
  // j + deg - 1 that end at height deg - 1.
  std::vector<BigInt> row{1}, next, binom;
  for (int m = 0; m <= n - 2; ++m) {
    const int t = n - m - 1;
    const int max_deg = std::min(m + 1, t);
    binom.assign(max_deg + 1, 0);
    binom[0] = 1;
    for (int d = 1; d <= max_deg; ++d) binom[d] = binom[d - 1] * (t - d + 1) / d;
    for (int deg = 1; deg <= max_deg; ++deg) {
      const BigInt& paths = row[deg - 1];
      if (paths != 0) fn(deg, t - deg, binom[deg] * paths);
    }
    next.assign(m + 2, 0);
    for (int h = 0; h <= m + 1; ++h) {
      if (h >= 1) next[h] += row[h - 1];
      if (h <= m) next[h] += row[h];
      if (h + 1 <= m) next[h] += row[h + 1];
    }
    row.swap(next);
  }
}

ExactTable motzkin_joint_counts(int n) {
  auto table = make_table(Model::Motzkin, n, {"DEG", "UNP"});
  for_each_motzkin_joint(n, [&](int deg, int unp, const BigInt& c) {
    table.entries[{deg, unp}] = c;
  });
  return table;
}

ExactTable hel_stm_counts(Model model, int n, Stat stat) {
  require_size(n);
  if (model == Model::Dyck) {
    switch (stat) {
      case Stat::HEL: return dyck_hel(n);
      case Stat::STM: return dyck_hel(n, "STM");
      case Stat::StemHelices: return dyck_stem_helices(n);
      default: break;
    }
  }
  if (model == Model::Motzkin) {
    switch (stat) {
      case Stat::HEL: return motzkin_hel(n);
      case Stat::STM: return motzkin_stm(n);
      case Stat::StemHelices: return motzkin_stem_helices(n);
      default: break;
    }
  }
  throw Error(Errc::UnsupportedCombination,
              "no exact " + std::string(to_string(stat)) + " table for " +
                  std::string(to_string(model)));
}

void enumerate_all(Model model, int n,
                   const std::function<void(const SecondaryStructure&)>& fn) {
  require_size(n);
  if (n > 16) {
    throw Error(Errc::SizeTooLarge, "enumeration is limited to n <= 16");
  }
  std::vector<int> stack;
  switch (model) {
    case Model::Dyck: {
      std::vector<int> partner(2 * n, SecondaryStructure::kUnpaired);
      enumerate_dyck(n, 0, 0, partner, stack, fn);
      return;
    }
    case Model::Motzkin: {
      std::vector<int> partner(n, SecondaryStructure::kUnpaired);
      enumerate_motzkin(n, 0, partner, stack, fn);
      return;
    }
    case Model::Pfold: break;
  }
  throw Error(Errc::UnsupportedCombination,
              "enumeration covers the uniform models only");
}

std::vector<SecondaryStructure> enumerate_all(Model model, int n) {
  std::vector<SecondaryStructure> out;
  enumerate_all(model, n,
                [&](const SecondaryStructure& s) { out.push_back(s); });
  return out;
}

std::map<int, double> exact_marginal(Model model, int n, Stat stat,
                                     const PfoldParams& p) {
  require_size(n);
  if (stat == Stat::JOINT || stat == Stat::ETE) {
    throw Error(Errc::UnsupportedCombination,
                std::string(to_string(stat)) + " is not a single count");
  }
  switch (model) {
    case Model::Dyck: {
      if (!is_linear(stat)) return normalize(hel_stm_counts(model, n, stat));
      std::map<int, BigInt> counts;
      for (const auto& [key, c] : dyck_deg_counts(n).entries) {
        counts[linear_stat(stat, key[0], 0)] += c;
      }
      return normalize(counts, catalan_numbers(n).back());
    }
    case Model::Motzkin: {
      if (!is_linear(stat)) return normalize(hel_stm_counts(model, n, stat));
      std::map<int, BigInt> counts;
      for_each_motzkin_joint(n, [&](int deg, int unp, const BigInt& c) {
        counts[linear_stat(stat, deg, unp)] += c;
      });
      return normalize(counts, motzkin_numbers(n).back());
    }
    case Model::Pfold: {
      std::map<int, double> out;
      if (stat == Stat::HEL) {
        for (const auto& [key, w] : pfold_hel_probs(n, p).entries) {
          out[key[0]] += w;
        }
        return out;
      }
      if (!is_linear(stat)) break;
      for (const auto& [key, w] : pfold_joint_probs(n, p).entries) {
        out[linear_stat(stat, key[0], key[1])] += w;
      }
      return out;
    }
  }
  throw Error(Errc::UnsupportedCombination,
              "no exact " + std::string(to_string(stat)) + " law for " +
                  std::string(to_string(model)));
}

ExactTable exact_counts(Model model, int n, Stat stat) {
  if (model == Model::Pfold) {
    throw Error(Errc::UnsupportedCombination,
                "pfold tables hold probabilities; use pfold_table");
  }
  if (stat == Stat::HEL || stat == Stat::STM || stat == Stat::StemHelices) {
    return hel_stm_counts(model, n, stat);
  }
  if (stat == Stat::JOINT) {
    if (model == Model::Motzkin) return motzkin_joint_counts(n);
    auto table = make_table(model, n, {"DEG", "UNP"});
    for (const auto& [key, c] : dyck_deg_counts(n).entries) {
      table.entries[{key[0], 0}] = c;
    }
    return table;
  }
  if (!is_linear(stat)) {
    throw Error(Errc::UnsupportedCombination,
                "no exact " + std::string(to_string(stat)) + " table");
  }
  auto table = make_table(model, n, {std::string(to_string(stat))});
  if (model == Model::Dyck) {
    for (const auto& [key, c] : dyck_deg_counts(n).entries) {
      table.entries[{linear_stat(stat, key[0], 0)}] += c;
    }
  } else {
    for_each_motzkin_joint(n, [&](int deg, int unp, const BigInt& c) {
      table.entries[{linear_stat(stat, deg, unp)}] += c;
    });
  }
  return table;
}

RealTable pfold_table(int n, Stat stat, const PfoldParams& p) {
  if (stat == Stat::JOINT) return pfold_joint_probs(n, p);
  if (stat == Stat::HEL) return pfold_hel_probs(n, p);
  if (!is_linear(stat)) {
    throw Error(Errc::UnsupportedCombination,
                "no exact " + std::string(to_string(stat)) + " table for pfold");
  }
  RealTable table;
  table.model = Model::Pfold;
  table.size = n;
  table.stat_names = {std::string(to_string(stat))};
  for (const auto& [key, w] : pfold_joint_probs(n, p).entries) {
    table.entries[{linear_stat(stat, key[0], key[1])}] += w;
  }
  return table;
}

}  // namespace endprox
