#include <gtest/gtest.h>

#include "oracles.hpp"
#include "schubert/classic.hpp"
#include "schubert/tableaux.hpp"

using namespace schubert;

namespace {

WordSet words(std::initializer_list<const char*> texts) {
  WordSet out;
  for (const char* t : texts) out.insert(parse_word(t));
  return out;
}

}  // namespace

TEST(RootOperator, WorkedExample) {
  const Word t = parse_word("3122213124324131");
  const auto once = root_operator(1, t);
  ASSERT_TRUE(once);
  EXPECT_EQ(to_string(*once), "3122213124324231");
  EXPECT_EQ(*root_operator_position(1, t), 13u);
  const auto twice = root_operator(1, *once);
  ASSERT_TRUE(twice);
  EXPECT_EQ(to_string(*twice), "3122213124324232");
  EXPECT_FALSE(root_operator(1, *twice));
}

TEST(RootOperator, SingleLetters) {
  EXPECT_FALSE(root_operator(1, parse_word("2")));
  EXPECT_EQ(*root_operator(1, parse_word("1")), parse_word("2"));
}

TEST(RootOperator, WeightShiftsByOneBox) {
  for (const auto& w : oracle::all_permutations(5)) {
    for (const Word& t : tableaux_set(w)) {
      for (int i = 1; i < 5; ++i) {
        const auto f = root_operator(i, t);
        if (!f) continue;
        auto before = weight(t, 5);
        auto after = weight(*f, 5);
        --after[static_cast<std::size_t>(i)];
        ++after[static_cast<std::size_t>(i - 1)];
        EXPECT_EQ(before, after);
      }
    }
  }
}

TEST(QuantizedDemazure, WorkedExampleChain) {
  EXPECT_EQ(quantized_demazure(1, words({"1"})), words({"1", "2"}));
  EXPECT_TRUE(quantized_demazure(2, WordSet{}).empty());
  EXPECT_EQ(quantized_demazure(3, words({"1231", "1232"})), words({"1231", "1241", "1232", "1242"}));
  EXPECT_EQ(quantized_demazure(2, words({"1231", "1241", "1232", "1242"})),
            words({"1231", "1241", "1341", "1232", "1233", "1242", "1342", "1343"}));
}

TEST(Tableaux, WorkedExample) {
  const auto w = parse_permutation("31542");
  EXPECT_EQ(tableaux_set(w), words({"11231", "11241", "11341", "11232", "11233", "11242", "11342", "11343"}));
  EXPECT_EQ(tableaux_stage(w, 3), words({"1"}));
  EXPECT_TRUE(tableaux_stage(w, 2).count(parse_word("1232")));
  EXPECT_TRUE(tableaux_stage(w, 1).count(parse_word("1242")));
}

TEST(Tableaux, Identity) {
  EXPECT_EQ(tableaux_set(Permutation::identity(4)), WordSet{Word{}});
  EXPECT_EQ(schubert_from_tableaux(Permutation::identity(4)), Polynomial::constant(4, 1));
}

TEST(Tableaux, SizeIsCoefficientSum) {
  for (const auto& w : oracle::all_permutations(5))
    EXPECT_EQ(Integer(tableaux_set(w).size()), coefficient_sum(oracle::schubert_compatible_sequences(w)));
}

TEST(Tableaux, WeightGeneratingFunctionOnS6) {
  for (const auto& w : oracle::all_permutations(6)) {
    const Polynomial p = schubert_from_tableaux(w);
    ASSERT_EQ(p, schubert_classic(w)) << to_string(w);
    ASSERT_EQ(p, schubert_orthodontic(w)) << to_string(w);
  }
}

TEST(Tau, WorkedExample) {
  EXPECT_EQ(tau_reindexing(parse_permutation("31542")), parse_permutation("12435"));
  EXPECT_EQ(tau_reindexing(Permutation::identity(4)), Permutation::identity(4));
}

// Enumerate every permutation and count those meeting both matching rules.
TEST(Tau, UniqueOnS5) {
  const auto candidates = oracle::all_permutations(5);
  for (const auto& w : oracle::all_permutations(5)) {
    const Diagram d = rothe_diagram(w);
    Diagram padded = build_D_im(orthodontic_sequence(w), 5);
    std::vector<RowSet> target(padded.columns().begin(), padded.columns().end());
    target.resize(5);
    int count = 0;
    Permutation found;
    for (const auto& t : candidates) {
      bool ok = true;
      for (int c = 1; c <= 5 && ok; ++c) {
        if (d.column(c) != target[static_cast<std::size_t>(t(c) - 1)]) ok = false;
        for (int c2 = c + 1; c2 <= 5 && ok; ++c2)
          if (d.column(c) == d.column(c2) && t(c) > t(c2)) ok = false;
      }
      if (ok) {
        ++count;
        found = t;
      }
    }
    ASSERT_EQ(count, 1) << to_string(w);
    EXPECT_EQ(tau_reindexing(w), found) << to_string(w);
  }
}

TEST(Filling, WorkedExampleStages) {
  const FillingContext ctx(parse_permutation("31542"));
  const auto f3 = read_into_diagram(ctx, parse_word("1"), 3);
  EXPECT_EQ(f3.cells().size(), 1u);
  const auto f2 = read_into_diagram(ctx, parse_word("1232"), 2);
  // column 2 holds rows 1, 2, 3 in O(w,2); column 4 holds row 2
  EXPECT_EQ(f2.column_order(), (std::vector<int>{2, 4}));
  EXPECT_EQ(f2.column_of_position(3), 4);
  read_into_diagram(ctx, parse_word("1242"), 1);
  const auto f0 = read_into_diagram(ctx, parse_word("11342"), 0);
  EXPECT_EQ(f0.column_order(), (std::vector<int>{1, 2, 4}));
}

TEST(Filling, LengthMismatchRejected) {
  const FillingContext ctx(parse_permutation("31542"));
  EXPECT_THROW(ctx.read(parse_word("12"), 3), std::invalid_argument);
}

TEST(Filling, EmptyWordIntoEmptyDiagram) {
  const auto view = read_into_diagram(Word{}, Permutation::identity(3), 0);
  EXPECT_TRUE(view.cells().empty());
  EXPECT_TRUE(view.is_column_strict());
  EXPECT_TRUE(view.is_row_flagged());
}

TEST(Filling, EveryStageIsAValidFillingOnS6) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : oracle::all_permutations(n)) {
      const FillingContext ctx(w);
      for (int r = 0; r <= ctx.trace.length(); ++r) {
        ASSERT_TRUE(has_northwest_property(ctx.trace.stage(r)));
        for (const Word& word : ctx.stages[static_cast<std::size_t>(r)]) {
          const auto view = ctx.read(word, r);
          ASSERT_TRUE(view.is_column_strict()) << to_string(w) << " r=" << r << " " << to_string(word);
          ASSERT_TRUE(view.is_row_flagged()) << to_string(w) << " r=" << r << " " << to_string(word);
        }
      }
    }
  }
}

// For multiplicity-free w with a repeated tooth at steps r < s (common impact
// {c}), each f_{i_j}, r <= j <= s, only changes letters read into column c.
TEST(Filling, RootOperatorsStayInImpactColumn) {
  for (const auto& w : oracle::all_permutations(6)) {
    const FillingContext ctx(w);
    if (!is_multiplicity_free(ctx.trace)) continue;
    const auto& teeth = ctx.trace.sequence.teeth;
    const int l = ctx.trace.length();
    for (int r = 1; r <= l; ++r) {
      for (int s = r + 1; s <= l; ++s) {
        if (teeth[static_cast<std::size_t>(r - 1)] != teeth[static_cast<std::size_t>(s - 1)]) continue;
        const int c = impact(ctx.trace, r).front();
        for (int j = r; j <= s; ++j) {
          // f_{i_j} acts on T_w(j) while building T_w(j-1), whose words
          // are read into O(w, j-1) after the prefix for step j-1
          const int i = teeth[static_cast<std::size_t>(j - 1)];
          const auto& stage_words = ctx.stages[static_cast<std::size_t>(j)];
          const std::size_t shift =
              ctx.stages[static_cast<std::size_t>(j - 1)].begin()->size() - stage_words.begin()->size();
          for (const Word& t : stage_words) {
            auto cur = std::optional<Word>(t);
            while (true) {
              const auto pos = root_operator_position(i, *cur);
              if (!pos) break;
              Word prefixed(shift, 1);
              prefixed.insert(prefixed.end(), cur->begin(), cur->end());
              const FillingView view(prefixed, ctx.trace.stage(j - 1), ctx.column_order(j - 1));
              EXPECT_EQ(view.column_of_position(shift + *pos), c)
                  << to_string(w) << " r=" << r << " s=" << s << " j=" << j << " word=" << to_string(*cur);
              cur = root_operator(i, *cur);
            }
          }
        }
      }
    }
  }
}

TEST(Tableaux, DistinctWeightsWhenMultiplicityFree) {
  for (const auto& w : oracle::all_permutations(6)) {
    if (!is_multiplicity_free(w)) continue;
    std::set<std::vector<int>> seen;
    for (const Word& t : tableaux_set(w)) EXPECT_TRUE(seen.insert(weight(t, 6)).second) << to_string(w);
  }
}
