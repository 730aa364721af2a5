#include "endprox/samplers.hpp"

#include <algorithm>
#include <string>

#include "endprox/error.hpp"

namespace endprox {

namespace {

SecondaryStructure from_steps(const std::vector<int>& steps) {
  std::vector<int> partner(steps.size(), SecondaryStructure::kUnpaired);
  std::vector<int> open;
  for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
    if (steps[i] > 0) {
      open.push_back(i);
    } else if (steps[i] < 0) {
      partner[open.back()] = i;
      partner[i] = open.back();
      open.pop_back();
    }
  }
  return SecondaryStructure(std::move(partner));
}

// Rows 0..r of T(m, h), the number of Motzkin paths of length m from height
// h down to 0. Returns row r.
std::vector<BigInt> motzkin_suffix_row(int r) {
  std::vector<BigInt> row{1}, next;
  for (int m = 1; m <= r; ++m) {
    next.assign(m + 1, 0);
    for (int h = 0; h <= m; ++h) {
      if (h >= 1) next[h] += row[h - 1];
      if (h <= m - 1) next[h] += row[h];
      if (h + 1 <= m - 1) next[h] += row[h + 1];
    }
    row.swap(next);
  }
  return row;
}

BigInt at(const std::vector<BigInt>& row, int h) {
  return h >= 0 && h < static_cast<int>(row.size()) ? row[h] : BigInt(0);
}

std::uint64_t fixed_point(const BigInt& num, const BigInt& den) {
  const BigInt q = (num << 64) / den;
  return q.convert_to<std::uint64_t>();
}

}  // namespace

std::uint64_t LazyUniform::word(std::size_t i) {
  while (words_.size() <= i) words_.push_back(rng_.next());
  return words_[i];
}

bool uniform_less(LazyUniform& u, const BigInt& num, const BigInt& den) {
  if (num <= 0) return false;
  if (num >= den) return true;
  BigInt rem = num;
  for (std::size_t i = 0;; ++i) {
    const BigInt scaled = rem << 64;
    const std::uint64_t digit = BigInt(scaled / den).convert_to<std::uint64_t>();
    rem = scaled % den;
    const std::uint64_t w = u.word(i);
    if (w != digit) return w < digit;
    if (rem == 0) return false;
  }
}

SecondaryStructure sample_dyck(int n, Rng& rng) {
  if (n < 0) throw Error(Errc::InvalidArgument, "size must be nonnegative");
  std::vector<int> steps(2 * n + 1, -1);
  std::fill(steps.begin(), steps.begin() + n, 1);
  for (std::size_t i = steps.size() - 1; i > 0; --i) {
    std::swap(steps[i], steps[rng.below(i + 1)]);
  }
  // Exactly one rotation keeps every proper prefix nonnegative: the one
  // starting just after the first minimum of the prefix sums.
  int sum = 0, min_sum = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    sum += steps[i];
    if (sum < min_sum) {
      min_sum = sum;
      start = i + 1;
    }
  }
  std::rotate(steps.begin(), steps.begin() + static_cast<long>(start % steps.size()),
              steps.end());
  steps.pop_back();
  return from_steps(steps);
}

MotzkinSampler::MotzkinSampler(int n) : n_(n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "size must be nonnegative");
  offset_.assign(n + 1, 0);
  for (int r = 1; r <= n; ++r) {
    offset_[r] = cuts_.size();
    cuts_.resize(cuts_.size() + std::min(r, n - r) + 1);
  }
  std::vector<BigInt> prev{1}, cur;
  for (int r = 1; r <= n; ++r) {
    cur.assign(r + 1, 0);
    for (int h = 0; h <= r; ++h) {
      cur[h] = at(prev, h - 1) + at(prev, h) + at(prev, h + 1);
    }
    for (int h = 0; h <= std::min(r, n - r); ++h) {
      Cutoffs& c = cuts_[offset_[r] + h];
      const BigInt up = at(prev, h + 1);
      c.up = fixed_point(up, cur[h]);
      if (h >= 1) c.up_flat = fixed_point(up + at(prev, h), cur[h]);
    }
    prev.swap(cur);
  }
}

SecondaryStructure MotzkinSampler::operator()(Rng& rng) const {
  std::vector<int> steps(n_, 0);
  int h = 0;
  for (int pos = 0; pos < n_; ++pos) {
    const int r = n_ - pos;
    const Cutoffs& c = cut(r, h);
    LazyUniform u(rng);
    const std::uint64_t w = u.word(0);

    auto exact = [&](bool with_flat) {
      const auto prev = motzkin_suffix_row(r - 1);
      BigInt num = at(prev, h + 1);
      if (with_flat) num += at(prev, h);
      const BigInt den = at(prev, h - 1) + at(prev, h) + at(prev, h + 1);
      return uniform_less(u, num, den);
    };

    bool up = w < c.up;
    if (w == c.up) up = exact(false);
    int step = 1;
    if (!up) {
      bool flat = true;
      if (h >= 1) {
        flat = w < c.up_flat;
        if (w == c.up_flat) flat = exact(true);
      }
      step = flat ? 0 : -1;
    }
    steps[pos] = step;
    h += step;
  }
  return from_steps(steps);
}

SecondaryStructure sample_motzkin(int n, Rng& rng) {
  return MotzkinSampler(n)(rng);
}

PfoldSampler::PfoldSampler(int n, const PfoldParams& p)
    : n_(n), inside_(p, std::max(n, 0)) {
  if (n < 1 || !(inside_.S(n) > 0.0)) {
    throw Error(Errc::ZeroMassLength,
                "length " + std::to_string(n) + " has zero probability");
  }
  split_cdf_.resize(n + 1);
  for (int m = 2; m <= n; ++m) {
    auto& cdf = split_cdf_[m];
    cdf.resize(m - 1);
    double acc = 0.0;
    for (int a = 1; a < m; ++a) {
      acc += inside_.L(a) * inside_.S(m - a);
      cdf[a - 1] = acc;
    }
  }
}

SecondaryStructure PfoldSampler::operator()(Rng& rng) const {
  enum class Sym { S, LS, L, F };
  struct Task {
    Sym sym;
    int start;
    int len;
  };
  const PfoldParams& p = inside_.params();
  std::vector<int> partner(n_, SecondaryStructure::kUnpaired);
  auto pair = [&](int i, int j) {
    partner[i] = j;
    partner[j] = i;
  };

  std::vector<Task> todo{{Sym::S, 0, n_}};
  while (!todo.empty()) {
    const Task t = todo.back();
    todo.pop_back();
    switch (t.sym) {
      case Sym::S: {
        const double x = rng.uniform01() * inside_.S(t.len);
        const bool more = x < p.p1 * inside_.LS(t.len);
        todo.push_back({more ? Sym::LS : Sym::L, t.start, t.len});
        break;
      }
      case Sym::LS: {
        const auto& cdf = split_cdf_[t.len];
        const double x = rng.uniform01() * cdf.back();
        auto it = std::upper_bound(cdf.begin(), cdf.end(), x);
        if (it == cdf.end()) it = std::lower_bound(cdf.begin(), cdf.end(), cdf.back());
        const int a = static_cast<int>(it - cdf.begin()) + 1;
        todo.push_back({Sym::S, t.start + a, t.len - a});
        todo.push_back({Sym::L, t.start, a});
        break;
      }
      case Sym::L:
        if (t.len >= 2) {
          pair(t.start, t.start + t.len - 1);
          todo.push_back({Sym::F, t.start + 1, t.len - 2});
        }
        break;
      case Sym::F: {
        const double x = rng.uniform01() * inside_.F(t.len);
        if (x < p.p3 * inside_.F(t.len - 2)) {
          pair(t.start, t.start + t.len - 1);
          todo.push_back({Sym::F, t.start + 1, t.len - 2});
        } else {
          todo.push_back({Sym::LS, t.start, t.len});
        }
        break;
      }
    }
  }
  return SecondaryStructure(std::move(partner));
}

SecondaryStructure sample_pfold(int n, const PfoldParams& p, Rng& rng) {
  return PfoldSampler(n, p)(rng);
}

}  // namespace endprox
