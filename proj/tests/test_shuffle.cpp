#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "endprox/error.hpp"
#include "endprox/rng.hpp"
#include "endprox/shuffle.hpp"

using namespace endprox;

namespace {

// Every rearrangement of s with the same k-lets and the same leading
// (k-1)-mer.
std::set<std::string> valid_outputs(const std::string& s, int k) {
  std::string perm = s;
  std::sort(perm.begin(), perm.end());
  std::set<std::string> out;
  do {
    if (validate_klets(s, perm, k) && perm.compare(0, k - 1, s, 0, k - 1) == 0) {
      out.insert(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string random_sequence(Rng& r, std::size_t len) {
  static constexpr char kAlphabet[] = "ACGU";
  std::string s(len, 'A');
  for (auto& c : s) c = kAlphabet[r.below(4)];
  return s;
}

}  // namespace

TEST(ValidateKlets, Examples) {
  EXPECT_TRUE(validate_klets("ACGU", "ACGU", 2));
  EXPECT_FALSE(validate_klets("ACGU", "AGCU", 2));
  EXPECT_TRUE(validate_klets("ACGU", "UGCA", 1));
  EXPECT_TRUE(validate_klets("AAB", "ABA", 1));
  EXPECT_FALSE(validate_klets("AAB", "ABA", 2));
  EXPECT_TRUE(validate_klets("AB", "CD", 3));
  EXPECT_FALSE(validate_klets("AB", "ABC", 1));
}

TEST(Shuffle, Examples) {
  Rng r(1);
  EXPECT_EQ(klet_shuffle("A", 1, r), "A");
  EXPECT_EQ(klet_shuffle("AAAA", 2, r), "AAAA");
  EXPECT_EQ(klet_shuffle("ACGU", 4, r), "ACGU");
  EXPECT_EQ(klet_shuffle("ACGU", 2, r), "ACGU");
  const std::string s = "AUGGCUACGGAUCCAUGA";
  for (int k = 1; k <= 4; ++k) {
    const auto t = klet_shuffle(s, k, r);
    EXPECT_TRUE(validate_klets(s, t, k));
    if (k > 1) {
      EXPECT_EQ(t.substr(0, k - 1), s.substr(0, k - 1));
      EXPECT_EQ(t.substr(t.size() - (k - 1)), s.substr(s.size() - (k - 1)));
    }
  }
}

TEST(Shuffle, Errors) {
  Rng r(1);
  auto code = [&](std::string_view s, int k) {
    try {
      klet_shuffle(s, k, r);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  EXPECT_EQ(code("", 2), Errc::EmptySequence);
  EXPECT_EQ(code("ACG", 4), Errc::KTooLarge);
  EXPECT_THROW(klet_shuffle("ACG", 0, r), Error);
}

TEST(Shuffle, PreservesKletsOnRandomInputs) {
  Rng r(17);
  for (int t = 0; t < 2000; ++t) {
    const auto s = random_sequence(r, 1 + r.below(60));
    const int k = 1 + static_cast<int>(r.below(3));
    if (static_cast<std::size_t>(k) > s.size()) continue;
    ASSERT_TRUE(validate_klets(s, klet_shuffle(s, k, r), k)) << s << ' ' << k;
  }
}

TEST(Shuffle, ReproducibleFromSeed) {
  Rng a(5), b(5);
  EXPECT_EQ(klet_shuffle("ACGUACGUAAGGCCUU", 2, a), klet_shuffle("ACGUACGUAAGGCCUU", 2, b));
}

TEST(Shuffle, UniformOverValidOutputs) {
  for (const auto& [s, k] : {std::pair<std::string, int>{"ABABBA", 2},
                             std::pair<std::string, int>{"AABBAB", 2},
                             std::pair<std::string, int>{"ABCABC", 1},
                             std::pair<std::string, int>{"AABABA", 3}}) {
    const auto valid = valid_outputs(s, k);
    ASSERT_FALSE(valid.empty());
    Rng r(99);
    const long draws = 60000;
    std::map<std::string, long> seen;
    for (long i = 0; i < draws; ++i) ++seen[klet_shuffle(s, k, r)];
    for (const auto& [t, c] : seen) EXPECT_TRUE(valid.count(t)) << s << " -> " << t;
    const double p = 1.0 / valid.size();
    const double se = std::sqrt(draws * p * (1 - p));
    for (const auto& t : valid) {
      const double c = seen.count(t) ? seen[t] : 0.0;
      if (valid.size() > 1) EXPECT_LT(std::abs(c - draws * p), 5 * se) << s << ' ' << t;
    }
  }
}
