#pragma once

// Orthodontia on Rothe diagrams: the orthodontic sequence (i, k; m),
// the intermediate diagrams O(w, r), the reconstruction D_{i,m}, the operator
// formula for S_w, the impact function and multiplicity-freeness.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

struct OrthodonticSequence {
  std::vector<int> teeth;                    ///< i_1, ..., i_l
  std::vector<int> interval_multiplicities;  ///< k_1, ..., k_n
  std::vector<int> step_multiplicities;      ///< m_1, ..., m_l

  int length() const noexcept { return static_cast<int>(teeth.size()); }
  int size() const noexcept { return static_cast<int>(interval_multiplicities.size()); }

  bool has_distinct_teeth() const {
    auto sorted = teeth;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  friend bool operator==(const OrthodonticSequence&, const OrthodonticSequence&) = default;
};

/// Full record of one orthodontia run.
///
/// stages[r] is O(w, r): the diagram right after the r-th row swap, before the
/// interval columns [i_r] it created are emptied. Columns keep their index in
/// D(w). removed[r] lists the (original) indices of the interval columns that
/// are emptied at step r; removed[0] holds the columns counted by the k's.
struct OrthodontiaTrace {
  OrthodonticSequence sequence;
  std::vector<Diagram> stages;
  std::vector<std::vector<int>> removed;

  int length() const noexcept { return sequence.length(); }

  const Diagram& stage(int r) const {
    detail::require(r >= 0 && r <= length(), "orthodontia stage out of range");
    return stages[static_cast<std::size_t>(r)];
  }

  /// O(w, r)_-: O(w, r) with the interval columns recorded at step r emptied.
  Diagram stage_minus(int r) const {
    Diagram d = stage(r);
    for (int c : removed[static_cast<std::size_t>(r)]) d.set_column(c, RowSet{});
    return d;
  }
};

inline OrthodontiaTrace orthodontia(const Permutation& w) {
  const int n = w.size();
  OrthodontiaTrace trace;
  trace.sequence.interval_multiplicities.assign(static_cast<std::size_t>(n), 0);

  Diagram current = rothe_diagram(w);
  trace.stages.push_back(current);

  // step 0: record every interval column [j] as k_j
  std::vector<int> removed;
  for (int c = 1; c <= n; ++c) {
    const RowSet col = current.column(c);
    if (!col.is_interval()) continue;
    ++trace.sequence.interval_multiplicities[static_cast<std::size_t>(col.max() - 1)];
    removed.push_back(c);
    current.set_column(c, RowSet{});
  }
  trace.removed.push_back(std::move(removed));

  while (true) {
    int first = 0;
    for (int c = 1; c <= n && first == 0; ++c)
      if (!current.column(c).empty()) first = c;
    if (first == 0) break;

    const auto tooth = current.column(first).smallest_missing_tooth();
    detail::ensure(tooth.has_value(), "orthodontia: leftmost nonempty column has no missing tooth");
    current.swap_rows(*tooth);
    trace.sequence.teeth.push_back(*tooth);
    trace.stages.push_back(current);

    // only [i_r] can appear as a new interval after swapping rows i_r, i_r + 1
    const RowSet target = RowSet::interval(*tooth);
    int multiplicity = 0;
    std::vector<int> step_removed;
    for (int c = 1; c <= n; ++c) {
      const RowSet col = current.column(c);
      detail::ensure(!col.is_interval() || col == target, "orthodontia: unexpected interval column");
      if (col == target) {
        ++multiplicity;
        step_removed.push_back(c);
        current.set_column(c, RowSet{});
      }
    }
    trace.sequence.step_multiplicities.push_back(multiplicity);
    trace.removed.push_back(std::move(step_removed));
  }
  return trace;
}

inline OrthodonticSequence orthodontic_sequence(const Permutation& w) { return orthodontia(w).sequence; }

/// s_{i_1} s_{i_2} ... s_{i_j} applied to the set [i_j].
inline RowSet orthodontic_column(const OrthodonticSequence& seq, int j) {
  RowSet col = RowSet::interval(seq.teeth[static_cast<std::size_t>(j - 1)]);
  for (int t = j; t >= 1; --t) col = col.swapped(seq.teeth[static_cast<std::size_t>(t - 1)]);
  return col;
}

/// (+)_j k_j [j]  (+)  (+)_j m_j (s_{i_1} ... s_{i_j} [i_j]), in a frame of n rows.
inline Diagram build_D_im(const OrthodonticSequence& seq, int n) {
  std::vector<RowSet> cols;
  for (int j = 1; j <= seq.size(); ++j)
    for (int c = 0; c < seq.interval_multiplicities[static_cast<std::size_t>(j - 1)]; ++c)
      cols.push_back(RowSet::interval(j));
  for (int j = 1; j <= seq.length(); ++j) {
    const RowSet col = orthodontic_column(seq, j);
    for (int c = 0; c < seq.step_multiplicities[static_cast<std::size_t>(j - 1)]; ++c) cols.push_back(col);
  }
  return Diagram(n, std::move(cols));
}

/// Equal multisets of nonempty columns.
inline bool column_equivalent(const Diagram& a, const Diagram& b) {
  auto nonempty = [](const Diagram& d) {
    std::vector<RowSet> cols;
    for (const auto& c : d.columns())
      if (!c.empty()) cols.push_back(c);
    std::sort(cols.begin(), cols.end());
    return cols;
  };
  return nonempty(a) == nonempty(b);
}

/// omega_1^{k_1} ... omega_n^{k_n} pi_{i_1}(omega_{i_1}^{m_1} pi_{i_2}( ... pi_{i_l}(omega_{i_l}^{m_l}) ... ))
inline Polynomial schubert_from_sequence(const OrthodonticSequence& seq, int nvars) {
  auto omega_power = [](int j, int e) {
    Monomial m;
    for (int v = 1; v <= j; ++v) m.set(v, e);
    return m;
  };
  const int l = seq.length();
  Polynomial p = Polynomial::constant(nvars, 1);
  if (l > 0) {
    p = Polynomial::term(nvars, omega_power(seq.teeth.back(), seq.step_multiplicities.back()));
    for (int j = l - 1; j >= 1; --j) {
      p = demazure(seq.teeth[static_cast<std::size_t>(j)], p);
      p = p.times(omega_power(seq.teeth[static_cast<std::size_t>(j - 1)],
                              seq.step_multiplicities[static_cast<std::size_t>(j - 1)]));
    }
    p = demazure(seq.teeth.front(), p);
  }
  Monomial prefix;
  for (int j = 1; j <= seq.size(); ++j) prefix = prefix * omega_power(j, seq.interval_multiplicities[static_cast<std::size_t>(j - 1)]);
  return p.times(prefix);
}

inline Polynomial schubert_orthodontic(const Permutation& w) {
  detail::require(w.size() >= 1 && w.size() <= kMaxVariables, "Schubert polynomials need 1 <= n <= 16");
  return schubert_from_sequence(orthodontic_sequence(w), w.size());
}

/// Columns (original indices) holding a box in row i_j + 1 of O(w, j-1)_-.
inline std::vector<int> impact(const OrthodontiaTrace& trace, int j) {
  if (j < 1 || j > trace.length()) throw std::out_of_range("impact: step " + std::to_string(j) + " out of range");
  const Diagram before = trace.stage_minus(j - 1);
  const int row = trace.sequence.teeth[static_cast<std::size_t>(j - 1)] + 1;
  std::vector<int> cols;
  for (int c = 1; c <= before.num_columns(); ++c)
    if (before.contains(row, c)) cols.push_back(c);
  return cols;
}

inline std::vector<int> impact(const Permutation& w, int j) { return impact(orthodontia(w), j); }

/// Every repeated tooth i_r = i_s has I(r) = I(s) = {c} for a single column c.
inline bool is_multiplicity_free(const OrthodontiaTrace& trace) {
  const auto& teeth = trace.sequence.teeth;
  std::map<int, std::vector<int>> shared;  // tooth -> its common singleton impact
  std::map<int, int> occurrences;
  for (int t : teeth) ++occurrences[t];
  for (int j = 1; j <= trace.length(); ++j) {
    const int tooth = teeth[static_cast<std::size_t>(j - 1)];
    if (occurrences[tooth] < 2) continue;
    auto cols = impact(trace, j);
    if (cols.size() != 1) return false;
    auto [it, inserted] = shared.try_emplace(tooth, cols);
    if (!inserted && it->second != cols) return false;
  }
  return true;
}

inline bool is_multiplicity_free(const Permutation& w) { return is_multiplicity_free(orthodontia(w)); }

}  // namespace schubert
