#include <gtest/gtest.h>

#include "oracles.hpp"
#include "schubert/classify.hpp"

using namespace schubert;

namespace {

// Every tuple in lexicographic order, checked against the definitions.
std::optional<ConfigurationInstance> least_instance_oracle(const Permutation& w) {
  const Diagram d = rothe_diagram(w);
  const int n = w.size();
  std::optional<ConfigurationInstance> best;
  for (int r1 = 1; r1 <= n; ++r1)
    for (int c1 = 1; c1 <= n; ++c1)
      for (int r2 = 1; r2 <= n; ++r2)
        for (int c2 = 1; c2 <= n; ++c2)
          for (int r3 = 1; r3 <= n; ++r3)
            for (int r4 = 0; r4 <= n; ++r4)
              for (auto kind : {ConfigurationKind::A, ConfigurationKind::B, ConfigurationKind::BPrime}) {
                if ((kind == ConfigurationKind::A) != (r4 == 0)) continue;
                ConfigurationInstance x{kind, r1, c1, r2, c2, r3, r4};
                if (!is_configuration_instance(d, w, x)) continue;
                if (!best || x.key() < best->key()) best = x;
              }
  return best;
}

}  // namespace

TEST(Configuration, ExampleInstance) {
  const auto w = parse_permutation("13254");
  const Diagram d = rothe_diagram(w);
  EXPECT_EQ(oracle::boxes_of(d), (std::set<std::pair<int, int>>{{2, 2}, {4, 4}}));
  const ConfigurationInstance a{ConfigurationKind::A, 2, 2, 4, 4, 1, 0};
  EXPECT_TRUE(is_configuration_instance(d, w, a));
  EXPECT_EQ(find_configuration(w), a);
  EXPECT_EQ(to_string(a), "A (2,2,4,4,1)");
}

TEST(Configuration, IdentityHasNone) { EXPECT_FALSE(find_configuration(Permutation::identity(6))); }

TEST(Configuration, EveryMultiplicitousPatternHasOne) {
  for (const auto& p : multiplicitous_patterns()) {
    const auto x = find_configuration(p);
    ASSERT_TRUE(x) << to_string(p);
    EXPECT_TRUE(is_configuration_instance(rothe_diagram(p), p, *x));
  }
}

TEST(Configuration, ScanReturnsLeastInstance) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : oracle::all_permutations(n)) ASSERT_EQ(find_configuration(w), least_instance_oracle(w)) << to_string(w);
}

TEST(Configuration, RejectsMismatchedSizes) {
  EXPECT_THROW(find_configuration(Diagram(3), Permutation::identity(4)), std::invalid_argument);
}

TEST(Patterns, Membership) {
  EXPECT_FALSE(avoids_multiplicitous(parse_permutation("12543")));
  for (const auto& w : oracle::all_permutations(4)) EXPECT_TRUE(avoids_multiplicitous(w));
  EXPECT_TRUE(avoids_multiplicitous(parse_permutation("457812693")));
  const auto witness = find_multiplicitous_pattern(parse_permutation("12543"));
  ASSERT_TRUE(witness);
  EXPECT_EQ(witness->pattern, parse_permutation("12543"));
  EXPECT_EQ(witness->realization, (std::vector<int>{1, 2, 3, 4, 5}));
}

TEST(Patterns, AvoidanceMatchesSubsetOracle) {
  for (const auto& w : oracle::all_permutations(7)) {
    bool oracle_avoids = true;
    for (const auto& p : multiplicitous_patterns())
      if (oracle::find_pattern(w, p)) oracle_avoids = false;
    ASSERT_EQ(avoids_multiplicitous(w), oracle_avoids) << to_string(w);
  }
}

TEST(Patterns, EachHasMaxCoefficientTwo) {
  for (const auto& p : multiplicitous_patterns())
    EXPECT_EQ(max_coefficient(oracle::schubert_compatible_sequences(p)), 2) << to_string(p);
}

TEST(Patterns, MinimalAmongNonZeroOne) {
  for (const auto& p : multiplicitous_patterns())
    for (int k = 1; k <= p.size(); ++k) {
      const auto sigma = one_step_pattern(p, k);
      EXPECT_TRUE(is_zero_one(oracle::schubert_compatible_sequences(sigma))) << to_string(p) << " k=" << k;
    }
}

TEST(ZeroOne, Examples) {
  const auto yes = zero_one_status(parse_permutation("31542"), true);
  EXPECT_TRUE(*yes.by_expansion && yes.by_patterns && yes.by_configurations && yes.by_multiplicity_free);
  const auto no = zero_one_status(parse_permutation("12543"), true);
  EXPECT_FALSE(*no.by_expansion || no.by_patterns || no.by_configurations || no.by_multiplicity_free);
  EXPECT_FALSE(zero_one_status(parse_permutation("12543")).by_expansion.has_value());
}

TEST(ZeroOne, FourWayAgreementOnS7) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : oracle::all_permutations(n)) {
      const auto s = zero_one_status(w, true);
      ASSERT_TRUE(s.agree()) << to_string(w);
      // the reduced-word oracle is too slow beyond S_6
      if (n <= 6) {
        ASSERT_EQ(*s.by_expansion, is_zero_one(oracle::schubert_compatible_sequences(w))) << to_string(w);
      }
    }
}

TEST(ZeroOne, ConfigurationsIffPatternsOnS6) {
  for (const auto& w : oracle::all_permutations(6))
    EXPECT_EQ(!find_configuration(w).has_value(), avoids_multiplicitous(w)) << to_string(w);
}

TEST(ZeroOne, ClosedUnderPatternsOnS6) {
  for (const auto& w : oracle::all_permutations(6)) {
    if (!is_zero_one(schubert_classic(w))) continue;
    for (unsigned mask = 1; mask < 64; ++mask) {
      std::vector<int> keep;
      for (int i = 1; i <= 6; ++i)
        if (mask & (1u << (i - 1))) keep.push_back(i);
      EXPECT_TRUE(is_zero_one(schubert_classic(pattern_at(w, keep)))) << to_string(w) << " mask=" << mask;
    }
  }
}

TEST(Survey, SmallCounts) {
  EXPECT_EQ(survey(1).zero_one, 1);
  EXPECT_EQ(survey(1).total, 1);
  EXPECT_EQ(survey(4).zero_one, 24);
  const auto s5 = survey(5, SurveyMethods::All);
  EXPECT_EQ(s5.zero_one, 115);
  EXPECT_EQ(s5.total, 120);
  EXPECT_EQ(s5.disagreements, 0);
  EXPECT_EQ(survey(6).zero_one, 605);
  EXPECT_EQ(survey(7).zero_one, 3343);
}

TEST(Survey, DeterministicAcrossThreadCounts) {
  const auto a = survey(7, SurveyMethods::Fast, -1, 1);
  const auto b = survey(7, SurveyMethods::Fast, -1, 4);
  EXPECT_EQ(a.zero_one, b.zero_one);
  EXPECT_EQ(a.total, b.total);
  EXPECT_EQ(a.disagreements, b.disagreements);
}

TEST(Survey, Limits) {
  EXPECT_THROW(survey(9), LimitExceeded);
  EXPECT_THROW(survey(8, SurveyMethods::All), LimitExceeded);
  EXPECT_THROW(survey(0), std::invalid_argument);
}
