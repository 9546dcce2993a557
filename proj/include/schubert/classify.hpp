#pragma once

// Zero-one classification: configurations A / B / B' in Rothe diagrams, the
// twelve multiplicitous patterns, and exhaustive surveys over S_n.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "schubert/classic.hpp"
#include "schubert/orthodontia.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

enum class ConfigurationKind { A, B, BPrime };

inline std::string_view to_string(ConfigurationKind kind) {
  switch (kind) {
    case ConfigurationKind::A: return "A";
    case ConfigurationKind::B: return "B";
    case ConfigurationKind::BPrime: return "B'";
  }
  return "?";
}

struct ConfigurationInstance {
  ConfigurationKind kind = ConfigurationKind::A;
  int r1 = 0, c1 = 0, r2 = 0, c2 = 0, r3 = 0;
  int r4 = 0;  ///< 0 for kind A

  /// Lexicographic order on (r1, c1, r2, c2, r3, r4), then kind.
  auto key() const { return std::tuple(r1, c1, r2, c2, r3, r4, static_cast<int>(kind)); }
  friend bool operator==(const ConfigurationInstance&, const ConfigurationInstance&) = default;
};

inline std::string to_string(const ConfigurationInstance& inst) {
  std::string s = std::string(to_string(inst.kind)) + " (" + std::to_string(inst.r1) + "," + std::to_string(inst.c1) +
                  "," + std::to_string(inst.r2) + "," + std::to_string(inst.c2) + "," + std::to_string(inst.r3);
  if (inst.kind != ConfigurationKind::A) s += "," + std::to_string(inst.r4);
  return s + ")";
}

/// Checks every defining condition of the instance's kind against D = D(w).
/// Kind B only asks 1 < c1: with 2 < c1 the patterns 315264, 315624 and
/// 315642 would contain no instance at all.
inline bool is_configuration_instance(const Diagram& d, const Permutation& w, const ConfigurationInstance& x) {
  const int n = w.size();
  auto in_range = [n](int v) { return v >= 1 && v <= n; };
  if (!in_range(x.r1) || !in_range(x.r2) || !in_range(x.r3) || !in_range(x.c1) || !in_range(x.c2)) return false;
  switch (x.kind) {
    case ConfigurationKind::A:
      return x.r3 < x.r1 && x.r1 < x.r2 && 1 < x.c1 && x.c1 < x.c2 && d.contains(x.r1, x.c1) &&
             d.contains(x.r2, x.c2) && !d.contains(x.r1, x.c2) && w(x.r3) < x.c1;
    case ConfigurationKind::B:
      return in_range(x.r4) && x.r4 != x.r3 && x.r3 < x.r1 && x.r4 < x.r1 && x.r1 < x.r2 && 1 < x.c1 &&
             x.c1 < x.c2 && d.contains(x.r1, x.c1) && d.contains(x.r1, x.c2) && d.contains(x.r2, x.c2) &&
             w(x.r3) < x.c1 && w(x.r4) < x.c2;
    case ConfigurationKind::BPrime:
      return in_range(x.r4) && x.r4 < x.r3 && x.r3 < x.r1 && x.r1 < x.r2 && 2 < x.c1 && x.c1 < x.c2 &&
             d.contains(x.r1, x.c1) && d.contains(x.r1, x.c2) && d.contains(x.r2, x.c1) && w(x.r3) < x.c1 &&
             w(x.r4) < x.c1;
  }
  return false;
}

/// Lexicographically least instance of A, B or B' in D = D(w), if any.
inline std::optional<ConfigurationInstance> find_configuration(const Diagram& d, const Permutation& w) {
  const int n = w.size();
  detail::require(d.rows() == n && d.num_columns() == n, "find_configuration: diagram and permutation sizes differ");
  // Scanning (r1, c1, r2, c2, r3, r4) in increasing order, the first hit of
  // any kind is the least instance; kinds are tried A, B, B' at each tuple.
  for (int r1 = 1; r1 <= n; ++r1) {
    for (int c1 = 2; c1 <= n; ++c1) {
      if (!d.contains(r1, c1)) continue;
      for (int r2 = r1 + 1; r2 <= n; ++r2) {
        for (int c2 = c1 + 1; c2 <= n; ++c2) {
          const bool a_shape = d.contains(r2, c2) && !d.contains(r1, c2);
          const bool b_shape = d.contains(r1, c2) && d.contains(r2, c2);
          const bool bp_shape = c1 > 2 && d.contains(r1, c2) && d.contains(r2, c1);
          if (!a_shape && !b_shape && !bp_shape) continue;
          for (int r3 = 1; r3 < r1; ++r3) {
            if (a_shape && w(r3) < c1) return ConfigurationInstance{ConfigurationKind::A, r1, c1, r2, c2, r3, 0};
            for (int r4 = 1; r4 < r1; ++r4) {
              if (b_shape && r4 != r3 && w(r3) < c1 && w(r4) < c2)
                return ConfigurationInstance{ConfigurationKind::B, r1, c1, r2, c2, r3, r4};
              if (bp_shape && r4 < r3 && w(r3) < c1 && w(r4) < c1)
                return ConfigurationInstance{ConfigurationKind::BPrime, r1, c1, r2, c2, r3, r4};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<ConfigurationInstance> find_configuration(const Permutation& w) {
  return find_configuration(rothe_diagram(w), w);
}

inline const std::array<Permutation, 12>& multiplicitous_patterns() {
  static const std::array<Permutation, 12> patterns = {
      parse_permutation("12543"),  parse_permutation("13254"),  parse_permutation("13524"),
      parse_permutation("13542"),  parse_permutation("21543"),  parse_permutation("125364"),
      parse_permutation("125634"), parse_permutation("215364"), parse_permutation("215634"),
      parse_permutation("315264"), parse_permutation("315624"), parse_permutation("315642"),
  };
  return patterns;
}

struct PatternWitness {
  Permutation pattern;
  std::vector<int> realization;
};

/// First multiplicitous pattern (in the listed order) contained in w.
inline std::optional<PatternWitness> find_multiplicitous_pattern(const Permutation& w) {
  for (const auto& p : multiplicitous_patterns())
    if (auto r = contains_pattern(w, p)) return PatternWitness{p, *r};
  return std::nullopt;
}

inline bool avoids_multiplicitous(const Permutation& w) { return !find_multiplicitous_pattern(w).has_value(); }

struct ZeroOneStatus {
  std::optional<bool> by_expansion;  ///< only when requested
  bool by_patterns = false;
  bool by_configurations = false;
  bool by_multiplicity_free = false;
  std::optional<PatternWitness> pattern_witness;
  std::optional<ConfigurationInstance> configuration_witness;

  bool agree() const {
    const bool v = by_patterns;
    return by_configurations == v && by_multiplicity_free == v && (!by_expansion || *by_expansion == v);
  }
  bool verdict() const { return by_expansion.value_or(by_patterns); }
};

/// Computes each predicate independently. In checked mode a disagreement
/// raises InternalError.
inline ZeroOneStatus zero_one_status(const Permutation& w, bool include_expansion = false, bool checked = false) {
  ZeroOneStatus s;
  s.pattern_witness = find_multiplicitous_pattern(w);
  s.by_patterns = !s.pattern_witness;
  s.configuration_witness = find_configuration(w);
  s.by_configurations = !s.configuration_witness;
  s.by_multiplicity_free = is_multiplicity_free(w);
  if (include_expansion) s.by_expansion = is_zero_one(schubert_classic(w));
  if (checked && !s.agree())
    throw InternalError("zero-one predicates disagree on " + to_string(w));
  return s;
}

enum class SurveyMethods { Fast, All };

inline constexpr int kDefaultSurveyLimitFast = 8;
inline constexpr int kDefaultSurveyLimitAll = 7;

struct SurveySummary {
  int n = 0;
  SurveyMethods methods = SurveyMethods::Fast;
  long long total = 0;
  long long zero_one = 0;
  long long disagreements = 0;
  std::optional<Permutation> first_disagreement;
};

inline int default_survey_limit(SurveyMethods methods) {
  return methods == SurveyMethods::All ? kDefaultSurveyLimitAll : kDefaultSurveyLimitFast;
}

/// Exhaustive sweep over S_n. Work is split into the n lexicographic blocks
/// of permutations sharing a first entry; block results are merged in block
/// order so the summary does not depend on scheduling.
inline SurveySummary survey(int n, SurveyMethods methods = SurveyMethods::Fast, int limit = -1,
                            unsigned threads = 0) {
  if (limit < 0) limit = default_survey_limit(methods);
  detail::require(n >= 1, "survey needs n >= 1");
  if (n > limit) throw LimitExceeded("survey size " + std::to_string(n) + " exceeds the limit " + std::to_string(limit));
  if (methods == SurveyMethods::All)
    detail::require(n <= kMaxVariables, "expansion needs n <= 16");

  struct Block {
    long long total = 0, zero_one = 0, disagreements = 0;
    std::optional<Permutation> first_disagreement;
  };
  std::vector<Block> blocks(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int b = next++; b < n; b = next++) {
      Block& out = blocks[static_cast<std::size_t>(b)];
      std::vector<int> rest;
      for (int v = 1; v <= n; ++v)
        if (v != b + 1) rest.push_back(v);
      do {
        std::vector<int> e{b + 1};
        e.insert(e.end(), rest.begin(), rest.end());
        const Permutation w(std::move(e));
        const ZeroOneStatus s = zero_one_status(w, methods == SurveyMethods::All);
        ++out.total;
        if (s.verdict()) ++out.zero_one;
        if (!s.agree()) {
          ++out.disagreements;
          if (!out.first_disagreement) out.first_disagreement = w;
        }
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SurveySummary summary;
  summary.n = n;
  summary.methods = methods;
  for (const auto& b : blocks) {
    summary.total += b.total;
    summary.zero_one += b.zero_one;
    summary.disagreements += b.disagreements;
    if (!summary.first_disagreement && b.first_disagreement) summary.first_disagreement = b.first_disagreement;
  }
  return summary;
}

}  // namespace schubert
