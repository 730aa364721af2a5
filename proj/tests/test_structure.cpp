#include <gtest/gtest.h>

#include <cmath>

#include "endprox/error.hpp"
#include "endprox/exact_models.hpp"
#include "endprox/samplers.hpp"
#include "endprox/structure.hpp"

using namespace endprox;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(DotBracket, NestedPairs) {
  const auto s = parse_dot_bracket("((..))");
  EXPECT_EQ(s.pairs(), (Pairs{{0, 5}, {1, 4}}));
  EXPECT_FALSE(s.crossing());
}

TEST(DotBracket, EmptyText) {
  const auto s = parse_dot_bracket("  \n");
  EXPECT_EQ(s.length(), 0u);
  EXPECT_TRUE(s.pairs().empty());
}

TEST(DotBracket, MixedFamiliesCross) {
  const auto s = parse_dot_bracket("([)]");
  EXPECT_EQ(s.pairs(), (Pairs{{0, 2}, {1, 3}}));
  EXPECT_TRUE(s.crossing());
}

TEST(DotBracket, UnclosedReportsEnd) {
  try {
    parse_dot_bracket("((.)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnbalancedBracket);
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(DotBracket, StrayCloserAndIllegalCharacter) {
  EXPECT_EQ(code_of([] { parse_dot_bracket(".)"); }), Errc::UnbalancedBracket);
  EXPECT_EQ(code_of([] { parse_dot_bracket("(x)"); }), Errc::IllegalCharacter);
  EXPECT_EQ(code_of([] { parse_dot_bracket("( )"); }), Errc::IllegalCharacter);
}

TEST(DotBracket, RoundTripNested) {
  Rng rng(7);
  const MotzkinSampler sample(60);
  for (int i = 0; i < 200; ++i) {
    const auto s = sample(rng);
    EXPECT_EQ(parse_dot_bracket(to_dot_bracket(s)), s);
  }
  EXPECT_EQ(to_dot_bracket(parse_dot_bracket("([)]")), "([)]");
}

TEST(DotBracket, TooManyLayers) {
  // Five mutually crossing pairs need five bracket families.
  std::vector<int> partner(10);
  for (int i = 0; i < 5; ++i) {
    partner[i] = i + 5;
    partner[i + 5] = i;
  }
  EXPECT_EQ(code_of([&] { to_dot_bracket(SecondaryStructure(partner)); }),
            Errc::TooManyCrossingLayers);
}

TEST(PartnerTable, RejectsBadTables) {
  EXPECT_EQ(code_of([] { SecondaryStructure({1, 2, 0}); }), Errc::AsymmetricPair);
  EXPECT_EQ(code_of([] { SecondaryStructure({0}); }), Errc::SelfPair);
  EXPECT_EQ(code_of([] { SecondaryStructure({5, -1}); }), Errc::AsymmetricPair);
}

TEST(Bpseq, Examples) {
  EXPECT_EQ(parse_bpseq("1 A 3\n2 C 0\n3 G 1\n").structure.pairs(), (Pairs{{0, 2}}));
  const auto rec = parse_bpseq("# comment\n1 A 2\n2 C 1\n\n3 G 0\n");
  EXPECT_EQ(rec.structure.pairs(), (Pairs{{0, 1}}));
  EXPECT_EQ(rec.sequence, "ACG");
  EXPECT_EQ(code_of([] { parse_bpseq("1 A 2\n2 C 3\n3 G 2\n"); }), Errc::AsymmetricPair);
}

TEST(Bpseq, Errors) {
  EXPECT_EQ(code_of([] { parse_bpseq("1 A 0\n3 C 0\n"); }), Errc::NonContiguousIndices);
  EXPECT_EQ(code_of([] { parse_bpseq("1 A 0\n1 C 0\n"); }), Errc::NonContiguousIndices);
  EXPECT_EQ(code_of([] { parse_bpseq("1 A 1\n"); }), Errc::SelfPair);
  EXPECT_EQ(code_of([] { parse_bpseq("1 A 0\n2 C\n"); }), Errc::MalformedLine);
  EXPECT_EQ(code_of([] { parse_bpseq("1 A 9\n2 C 0\n"); }), Errc::AsymmetricPair);
}

TEST(Bpseq, HeaderBlockSkipped) {
  const auto rec = parse_bpseq("Filename: x.bpseq\nOrganism: y\n1 G 2\n2 C 1\n");
  EXPECT_EQ(rec.structure.pair_count(), 1u);
}

TEST(Exterior, TwoArchExample) {
  const auto st = exterior_stats(parse_dot_bracket(".(...)..(...)."));
  EXPECT_EQ(st.deg, 2);
  EXPECT_EQ(st.unp, 4);
  EXPECT_EQ(st.chn, 5);
  EXPECT_EQ(st.len_ext, 8);
  EXPECT_NEAR(st.ete_nm, 2.80, 0.005);
}

TEST(Exterior, SmallCases) {
  const auto hairpin = exterior_stats(parse_dot_bracket("()"));
  EXPECT_EQ(hairpin.deg, 1);
  EXPECT_EQ(hairpin.unp, 0);
  EXPECT_EQ(hairpin.chn, 0);
  EXPECT_EQ(hairpin.len_ext, 2);
  EXPECT_DOUBLE_EQ(hairpin.ete_nm, 1.5);

  const auto dots = exterior_stats(parse_dot_bracket("...."));
  EXPECT_EQ(dots.deg, 0);
  EXPECT_EQ(dots.unp, 4);
  EXPECT_EQ(dots.chn, 3);
  EXPECT_NEAR(dots.ete_nm, 0.62 * std::pow(3.0, 0.6), 1e-12);
  EXPECT_FALSE(dots.hel);
  EXPECT_FALSE(dots.stm);

  const auto empty = exterior_stats(SecondaryStructure{});
  EXPECT_EQ(empty.chn, 0);
  EXPECT_EQ(empty.ete_nm, 0.0);
}

TEST(Exterior, RejectsCrossing) {
  EXPECT_EQ(code_of([] { exterior_stats(parse_dot_bracket("([)]")); }),
            Errc::CrossingStructure);
}

TEST(Exterior, RmsUsesExteriorLength) {
  const auto st = exterior_stats(parse_dot_bracket(".(...)..(...)."));
  EXPECT_DOUBLE_EQ(st.rms_nm, rms_distance(8));
}

TEST(Helix, Examples) {
  EXPECT_EQ(first_helix_length(parse_dot_bracket("(((...)))")), 3);
  EXPECT_EQ(first_helix_length(parse_dot_bracket("((.(...)))")), 2);
  EXPECT_FALSE(first_helix_length(parse_dot_bracket("...")));
  EXPECT_EQ(first_helix_length(parse_dot_bracket("(())")), 2);
  EXPECT_EQ(first_helix_length(parse_dot_bracket("..([)]")), 1);
}

TEST(Stem, Examples) {
  EXPECT_EQ(first_stem(parse_dot_bracket("((.(...)))")), (FirstStem{3, 2}));
  EXPECT_EQ(first_stem(parse_dot_bracket("(((...)))")), (FirstStem{3, 1}));
  EXPECT_EQ(first_stem(parse_dot_bracket("((...)(...))")), (FirstStem{1, 1}));
  EXPECT_FALSE(first_stem(parse_dot_bracket("....")));
  EXPECT_EQ(code_of([] { first_stem(parse_dot_bracket("([)]")); }),
            Errc::CrossingStructure);
}

TEST(Distances, Examples) {
  EXPECT_NEAR(ete_distance(2, 5), 2.80, 0.005);
  EXPECT_DOUBLE_EQ(ete_distance(1, 0), 1.5);
  EXPECT_DOUBLE_EQ(rms_distance(17), 3.0);
  EXPECT_DOUBLE_EQ(rms_distance(1), 0.0);
  EXPECT_DOUBLE_EQ(rms_distance(0), 0.0);
}

TEST(Distances, MonotoneInBothArguments) {
  for (int d = 0; d < 30; ++d) {
    for (int c = 0; c < 30; ++c) {
      EXPECT_LE(ete_distance(d, c), ete_distance(d + 1, c));
      EXPECT_LE(ete_distance(d, c), ete_distance(d, c + 1));
    }
  }
}

TEST(EteModelValidation, Bounds) {
  EXPECT_NO_THROW(EteModel{}.validate());
  EXPECT_EQ(code_of([] { EteModel{1.5, 0.62, 2.0, 0.75}.validate(); }),
            Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { EteModel{0.0, 0.62, 1.2, 0.75}.validate(); }),
            Errc::InvalidArgument);
}

TEST(ShortestPath, MatchesExteriorOnExamples) {
  for (const char* db : {".(...)..(...).", "()", "....", "((..))((..))", ".",
                         "(.)(.)", "()()()", "..(((...)))..", "(()())"}) {
    const auto s = parse_dot_bracket(db);
    const auto a = exterior_stats(s);
    const auto b = shortest_path_stats(s);
    EXPECT_EQ(a.deg, b.deg) << db;
    EXPECT_EQ(a.unp, b.unp) << db;
    EXPECT_EQ(a.chn, b.chn) << db;
    EXPECT_EQ(a.len_ext, b.len_ext) << db;
    EXPECT_EQ(a.ete_nm, b.ete_nm) << db;
    EXPECT_EQ(a.stm, b.stm) << db;
  }
}

TEST(ShortestPath, Pseudoknot) {
  const auto st = shortest_path_stats(parse_dot_bracket("([)]"));
  EXPECT_EQ(st.deg, 1);
  EXPECT_EQ(st.chn, 1);
  EXPECT_EQ(st.unp, 0);
  EXPECT_EQ(st.len_ext, 3);
  EXPECT_FALSE(st.stm);
  EXPECT_FALSE(st.stem_helices);
  EXPECT_EQ(st.hel, 1);
}

TEST(ShortestPath, SingleNodeAndEmpty) {
  const auto st = shortest_path_stats(parse_dot_bracket("."));
  EXPECT_EQ(st.deg, 0);
  EXPECT_EQ(st.chn, 0);
  EXPECT_EQ(st.unp, exterior_stats(parse_dot_bracket(".")).unp);
  EXPECT_EQ(code_of([] { shortest_path_stats(SecondaryStructure{}); }),
            Errc::EmptyStructure);
}

TEST(ShortestPath, LexicographicTieBreak) {
  // 0-1-4-5 and 0-3-4-5 both use one pair edge; the first is smaller.
  const auto st = shortest_path_stats(parse_dot_bracket("([.)]."));
  EXPECT_EQ(st.deg, 1);
  EXPECT_EQ(st.chn, 2);
  EXPECT_EQ(st.unp, 1);
  EXPECT_EQ(st.len_ext, 4);
}

TEST(ShortestPath, PrefersSmallerEte) {
  // Shortest routes 0-4-5-7 (two pair edges) and 0-1-6-7 (one pair edge);
  // the second has the smaller distance estimate.
  std::vector<int> partner(8, SecondaryStructure::kUnpaired);
  auto link = [&](int a, int b) { partner[a] = b; partner[b] = a; };
  link(0, 4);
  link(1, 6);
  link(5, 7);
  const auto st = shortest_path_stats(SecondaryStructure(partner));
  EXPECT_EQ(st.deg + st.chn, 3);
  EXPECT_EQ(st.deg, 1);
  EXPECT_DOUBLE_EQ(st.ete_nm, ete_distance(1, 2));
}

TEST(ShortestPath, AgreesWithExteriorOnSamples) {
  Rng rng(11);
  const MotzkinSampler sample(80);
  for (int i = 0; i < 2000; ++i) {
    const auto s = sample(rng);
    const auto a = exterior_stats(s);
    const auto b = shortest_path_stats(s);
    ASSERT_EQ(a.deg, b.deg);
    ASSERT_EQ(a.unp, b.unp);
    ASSERT_EQ(a.chn, b.chn);
    ASSERT_EQ(a.ete_nm, b.ete_nm);
  }
}

TEST(Invariants, OverAllSmallMotzkin) {
  for (int n = 0; n <= 10; ++n) {
    enumerate_all(Model::Motzkin, n, [&](const SecondaryStructure& s) {
      const auto st = exterior_stats(s);
      EXPECT_LE(st.len_ext, static_cast<int>(s.length()));
      EXPECT_EQ(st.deg == 0, !st.hel.has_value());
      EXPECT_EQ(st.deg == 0, !st.stm.has_value());
      if (st.hel) {
        EXPECT_GE(*st.hel, 1);
        EXPECT_LE(*st.hel, *st.stm);
        EXPECT_LE(*st.stem_helices, *st.stm);
      }
    });
  }
}
