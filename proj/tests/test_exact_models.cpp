#include <gtest/gtest.h>

#include <cmath>

#include "endprox/error.hpp"
#include "endprox/exact_models.hpp"
#include "endprox/pfold.hpp"
#include "oracles.hpp"

using namespace endprox;

namespace {

std::map<StatKey, BigInt> entries(const ExactTable& t) {
  return {t.entries.begin(), t.entries.end()};
}

}  // namespace

TEST(Sequences, CatalanAndMotzkin) {
  const auto cat = catalan_numbers(30);
  const auto mot = motzkin_numbers(30);
  EXPECT_EQ(cat[10], 16796);
  EXPECT_EQ(cat[30], BigInt("3814986502092304"));
  EXPECT_EQ(mot[10], 2188);
  EXPECT_EQ(mot[30], BigInt("1697385471211"));
  // Motzkin numbers as sums of Catalan numbers times binomials.
  for (int n = 0; n <= 30; ++n) {
    BigInt s = 0, choose = 1;
    for (int k = 0; 2 * k <= n; ++k) {
      s += choose * cat[k];
      choose = choose * (n - 2 * k) * (n - 2 * k - 1) / ((2 * k + 1) * (2 * k + 2));
    }
    EXPECT_EQ(s, mot[n]) << n;
  }
}

TEST(DyckDeg, Examples) {
  EXPECT_EQ(entries(dyck_deg_counts(3)),
            (std::map<StatKey, BigInt>{{{1}, 2}, {{2}, 2}, {{3}, 1}}));
  EXPECT_EQ(entries(dyck_deg_counts(1)), (std::map<StatKey, BigInt>{{{1}, 1}}));
  EXPECT_EQ(entries(dyck_deg_counts(0)), (std::map<StatKey, BigInt>{{{0}, 1}}));
}

TEST(DyckDeg, FirstReturnRecurrenceAndTotals) {
  const auto cat = catalan_numbers(60);
  for (int n = 0; n <= 40; ++n) {
    EXPECT_EQ(entries(dyck_deg_counts(n)), oracle::dyck_first_return(n)) << n;
  }
  for (int n = 0; n <= 60; ++n) EXPECT_EQ(dyck_deg_counts(n).total(), cat[n]);
}

TEST(MotzkinJoint, Examples) {
  const auto t3 = motzkin_joint_counts(3);
  EXPECT_EQ(entries(t3), (std::map<StatKey, BigInt>{
                             {{0, 3}, 1}, {{1, 1}, 2}, {{1, 0}, 1}}));
  EXPECT_EQ(entries(motzkin_joint_counts(0)), (std::map<StatKey, BigInt>{{{0, 0}, 1}}));
  const auto t4 = motzkin_joint_counts(4);
  EXPECT_EQ(t4.at({1, 2}), 3);
  EXPECT_EQ(t4.total(), 9);
}

TEST(MotzkinJoint, FirstStepRecurrenceAndTotals) {
  const auto mot = motzkin_numbers(60);
  for (int n = 0; n <= 25; ++n) {
    EXPECT_EQ(entries(motzkin_joint_counts(n)), oracle::motzkin_first_step(n)) << n;
  }
  for (int n = 0; n <= 60; ++n) EXPECT_EQ(motzkin_joint_counts(n).total(), mot[n]);
}

TEST(MotzkinJoint, DegMarginalMatchesSingleVariableCount) {
  for (int n = 0; n <= 40; ++n) {
    std::map<StatKey, BigInt> marginal;
    for_each_motzkin_joint(n, [&](int deg, int, const BigInt& c) { marginal[{deg}] += c; });
    EXPECT_EQ(marginal, oracle::motzkin_deg_only(n)) << n;
  }
}

TEST(HelStm, Examples) {
  EXPECT_EQ(entries(hel_stm_counts(Model::Dyck, 3, Stat::HEL)),
            (std::map<StatKey, BigInt>{{{1}, 3}, {{2}, 1}, {{3}, 1}}));
  EXPECT_EQ(entries(hel_stm_counts(Model::Motzkin, 3, Stat::HEL)),
            (std::map<StatKey, BigInt>{{{kAbsent}, 1}, {{1}, 3}}));
  EXPECT_EQ(entries(hel_stm_counts(Model::Motzkin, 2, Stat::STM)),
            (std::map<StatKey, BigInt>{{{kAbsent}, 1}, {{1}, 1}}));
}

TEST(HelStm, Unsupported) {
  EXPECT_THROW(hel_stm_counts(Model::Pfold, 5, Stat::STM), Error);
  EXPECT_THROW(hel_stm_counts(Model::Dyck, 5, Stat::DEG), Error);
  EXPECT_THROW(hel_stm_counts(Model::Motzkin, 5, Stat::DEG), Error);
  try {
    hel_stm_counts(Model::Pfold, 5, Stat::STM);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnsupportedCombination);
  }
}

TEST(HelStm, TotalsForLargerSizes) {
  const auto cat = catalan_numbers(200);
  const auto mot = motzkin_numbers(200);
  for (int n : {50, 120, 200}) {
    for (Stat s : {Stat::HEL, Stat::STM, Stat::StemHelices}) {
      EXPECT_EQ(hel_stm_counts(Model::Dyck, n, s).total(), cat[n]) << n;
    }
    for (Stat s : {Stat::HEL, Stat::STM, Stat::StemHelices}) {
      EXPECT_EQ(hel_stm_counts(Model::Motzkin, n, s).total(), mot[n]) << n;
    }
  }
}

TEST(Enumeration, CountsAndGuard) {
  EXPECT_EQ(enumerate_all(Model::Motzkin, 3).size(), 4u);
  EXPECT_EQ(enumerate_all(Model::Dyck, 3).size(), 5u);
  EXPECT_EQ(enumerate_all(Model::Motzkin, 0).size(), 1u);
  EXPECT_EQ(enumerate_all(Model::Motzkin, 0).front().length(), 0u);
  const auto mot = motzkin_numbers(12);
  const auto cat = catalan_numbers(10);
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(BigInt(enumerate_all(Model::Motzkin, n).size()), mot[n]);
  }
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(BigInt(enumerate_all(Model::Dyck, n).size()), cat[n]);
  }
  try {
    enumerate_all(Model::Motzkin, 17);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SizeTooLarge);
  }
}

TEST(Enumeration, DistinctStructures) {
  std::set<std::vector<int>> seen;
  enumerate_all(Model::Motzkin, 9, [&](const SecondaryStructure& s) {
    seen.insert({s.partner_table().begin(), s.partner_table().end()});
  });
  EXPECT_EQ(BigInt(seen.size()), motzkin_numbers(9)[9]);
}

TEST(OracleEquivalence, SmallSizes) {
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(entries(motzkin_joint_counts(n)),
              oracle::enumerate_histogram(Model::Motzkin, n, oracle::joint_key));
    EXPECT_EQ(entries(hel_stm_counts(Model::Motzkin, n, Stat::HEL)),
              oracle::enumerate_histogram(Model::Motzkin, n, oracle::hel_key));
    EXPECT_EQ(entries(hel_stm_counts(Model::Motzkin, n, Stat::STM)),
              oracle::enumerate_histogram(Model::Motzkin, n, oracle::stm_key));
    EXPECT_EQ(entries(hel_stm_counts(Model::Motzkin, n, Stat::StemHelices)),
              oracle::enumerate_histogram(Model::Motzkin, n, oracle::stem_helices_key));
  }
  for (int n = 0; n <= 10; ++n) {
    std::map<StatKey, BigInt> deg;
    for (const auto& [k, c] :
         oracle::enumerate_histogram(Model::Dyck, n, oracle::joint_key)) {
      EXPECT_EQ(k[1], 0);
      deg[{k[0]}] += c;
    }
    EXPECT_EQ(entries(dyck_deg_counts(n)), deg);
    EXPECT_EQ(entries(hel_stm_counts(Model::Dyck, n, Stat::HEL)),
              oracle::enumerate_histogram(Model::Dyck, n, oracle::hel_key));
    EXPECT_EQ(entries(hel_stm_counts(Model::Dyck, n, Stat::STM)),
              oracle::enumerate_histogram(Model::Dyck, n, oracle::stm_key));
    EXPECT_EQ(entries(hel_stm_counts(Model::Dyck, n, Stat::StemHelices)),
              oracle::enumerate_histogram(Model::Dyck, n, oracle::stem_helices_key));
  }
}

TEST(PfoldTables, SmallLengths) {
  const PfoldParams p;
  const auto t1 = pfold_joint_probs(1, p);
  ASSERT_EQ(t1.entries.size(), 1u);
  EXPECT_NEAR(t1.at({0, 1}), 1.0, 1e-15);
  EXPECT_NEAR(PfoldInside(p, 1).S(1), p.q1() * p.q2(), 1e-15);
  const auto t2 = pfold_joint_probs(2, p);
  ASSERT_EQ(t2.entries.size(), 1u);
  EXPECT_NEAR(t2.at({0, 2}), 1.0, 1e-15);
  for (int n : {3, 10, 57, 300}) {
    EXPECT_NEAR(pfold_joint_probs(n, p).total(), 1.0, 1e-12) << n;
  }
}

TEST(PfoldTables, ZeroMass) {
  try {
    pfold_joint_probs(0, PfoldParams{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroMassLength);
  }
  EXPECT_THROW(pfold_hel_probs(0, PfoldParams{}), Error);
}

TEST(PfoldTables, GrammarProbabilityOracle) {
  for (const PfoldParams p : {PfoldParams{}, PfoldParams{0.5, 0.4, 0.3}}) {
    for (int n = 1; n <= 12; ++n) {
      std::map<StatKey, double> joint, hel;
      double total = 0.0;
      enumerate_all(Model::Motzkin, n, [&](const SecondaryStructure& s) {
        const double w = oracle::GrammarProbability(s, p)();
        if (w == 0.0) return;
        total += w;
        joint[oracle::joint_key(s)] += w;
        hel[oracle::hel_key(s)] += w;
      });
      const PfoldExterior ext(p, n);
      EXPECT_NEAR(total, ext.inside().S(n), 1e-15) << n;
      const auto weights = ext.weights(n);
      for (const auto& [k, w] : joint) EXPECT_NEAR(weights.at(k), w, 1e-15) << n;
      EXPECT_EQ(weights.entries.size(), joint.size()) << n;
      const auto hp = pfold_hel_probs(n, p);
      for (const auto& [k, w] : hel) EXPECT_NEAR(hp.at(k), w / total, 1e-12) << n;
      EXPECT_EQ(hp.entries.size(), hel.size()) << n;
    }
  }
}

TEST(PfoldTables, Conservation) {
  const PfoldParams p;
  const PfoldExterior ext(p, 600);
  double cumulative = 0.0;
  for (int n = 1; n <= 600; ++n) {
    const double s = ext.inside().S(n);
    EXPECT_NEAR(ext.total_weight(n), s, 1e-12 * std::max(1.0, s)) << n;
    cumulative += s;
  }
  EXPECT_LE(cumulative, 1.0);
}

TEST(PfoldTables, HelSumsToOne) {
  for (int n : {1, 2, 5, 40, 400}) {
    EXPECT_NEAR(pfold_hel_probs(n, PfoldParams{}).total(), 1.0, 1e-12) << n;
  }
}

TEST(ExactMarginal, MatchesTables) {
  const auto deg = exact_marginal(Model::Motzkin, 4, Stat::DEG);
  EXPECT_NEAR(deg.at(1), 7.0 / 9.0, 1e-15);
  EXPECT_NEAR(deg.at(2), 1.0 / 9.0, 1e-15);
  double total = 0.0;
  for (const auto& [k, v] : deg) total += v;
  EXPECT_NEAR(total, 1.0, 1e-15);
  const auto unp = exact_marginal(Model::Dyck, 7, Stat::UNP);
  EXPECT_EQ(unp.size(), 1u);
  EXPECT_DOUBLE_EQ(unp.at(0), 1.0);
  EXPECT_THROW(exact_marginal(Model::Pfold, 20, Stat::STM), Error);
  EXPECT_THROW(exact_marginal(Model::Motzkin, 20, Stat::ETE), Error);
  const auto len = exact_marginal(Model::Pfold, 30, Stat::LEN);
  double t = 0.0;
  for (const auto& [k, v] : len) t += v;
  EXPECT_NEAR(t, 1.0, 1e-12);
}

TEST(ExactCounts, TablesForEveryStatistic) {
  const auto chn = exact_counts(Model::Motzkin, 4, Stat::CHN);
  EXPECT_EQ(chn.stat_names, std::vector<std::string>{"CHN"});
  EXPECT_EQ(chn.total(), 9);
  EXPECT_EQ(chn.at({3}), 1);  // "...." has deg 0, unp 4
  const auto len = exact_counts(Model::Dyck, 3, Stat::LEN);
  EXPECT_EQ(entries(len), (std::map<StatKey, BigInt>{{{2}, 2}, {{4}, 2}, {{6}, 1}}));
  const auto joint = exact_counts(Model::Dyck, 3, Stat::JOINT);
  EXPECT_EQ(joint.stat_names.size(), 2u);
  EXPECT_EQ(joint.at({2, 0}), 2);
  EXPECT_EQ(entries(exact_counts(Model::Motzkin, 6, Stat::STM)),
            entries(hel_stm_counts(Model::Motzkin, 6, Stat::STM)));
  EXPECT_THROW(exact_counts(Model::Pfold, 5, Stat::DEG), Error);
  EXPECT_THROW(exact_counts(Model::Motzkin, 5, Stat::ETE), Error);
}

TEST(ExactCounts, PfoldTables) {
  const PfoldParams p;
  const auto len = pfold_table(40, Stat::LEN, p);
  EXPECT_NEAR(len.total(), 1.0, 1e-12);
  const auto deg = exact_marginal(Model::Pfold, 40, Stat::DEG, p);
  const auto t = pfold_table(40, Stat::DEG, p);
  for (const auto& [k, w] : deg) EXPECT_NEAR(t.at({k}), w, 1e-15);
  EXPECT_EQ(pfold_table(10, Stat::JOINT, p).stat_names.size(), 2u);
  EXPECT_THROW(pfold_table(10, Stat::STM, p), Error);
}
