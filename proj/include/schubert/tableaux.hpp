#pragma once

// Root operators on reading words, quantized Demazure operators, and the
// tableau family T_w together with its partial stages T_w(r).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "schubert/orthodontia.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;
using WordSet = std::set<Word>;  // lexicographic order

inline Word make_word(std::initializer_list<int> letters) {
  Word w;
  for (int x : letters) w.push_back(static_cast<Letter>(x));
  return w;
}

/// Digits for alphabets up to 9, comma-separated otherwise.
inline std::string to_string(const Word& word, int alphabet = 9) {
  std::string out;
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (alphabet > 9 && p > 0) out += ',';
    out += std::to_string(static_cast<int>(word[p]));
  }
  return out;
}

inline Word parse_word(std::string_view text) {
  Word w;
  if (text.find(',') != std::string_view::npos) {
    for (int v : parse_int_list(text, ',')) {
      detail::require(v >= 1 && v <= 255, "word letter out of range");
      w.push_back(static_cast<Letter>(v));
    }
    return w;
  }
  for (char ch : text) {
    detail::require(ch >= '1' && ch <= '9', "invalid word letter");
    w.push_back(static_cast<Letter>(ch - '0'));
  }
  return w;
}

/// Position (0-based) of the letter f_i would change: the leftmost i left
/// unmatched after pairing each i with a later i+1.
inline std::optional<std::size_t> root_operator_position(int i, const Word& word) {
  std::vector<std::size_t> unmatched;  // stack of unmatched i's
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (word[p] == i)
      unmatched.push_back(p);
    else if (word[p] == i + 1 && !unmatched.empty())
      unmatched.pop_back();
  }
  if (unmatched.empty()) return std::nullopt;
  return unmatched.front();
}

/// f_i; nullopt when undefined.
inline std::optional<Word> root_operator(int i, const Word& word) {
  detail::require(i >= 1 && i < 255, "root operator index out of range");
  auto pos = root_operator_position(i, word);
  if (!pos) return std::nullopt;
  Word out = word;
  out[*pos] = static_cast<Letter>(i + 1);
  return out;
}

/// Union of the f_i-orbits {T, f_i T, f_i^2 T, ...}.
inline WordSet quantized_demazure(int i, const WordSet& words) {
  WordSet out;
  for (const Word& start : words) {
    std::optional<Word> cur = start;
    while (cur) {
      out.insert(*cur);
      cur = root_operator(i, *cur);
    }
  }
  return out;
}

/// m copies of 1, 2, ..., j.
inline Word omega_word(int j, int copies) {
  Word w;
  for (int c = 0; c < copies; ++c)
    for (int x = 1; x <= j; ++x) w.push_back(static_cast<Letter>(x));
  return w;
}

inline WordSet prepend(const Word& prefix, const WordSet& words) {
  WordSet out;
  for (const Word& w : words) {
    Word joined = prefix;
    joined.insert(joined.end(), w.begin(), w.end());
    out.insert(std::move(joined));
  }
  return out;
}

/// stages[r] = T_w(r) for r = 0..l, with T_w(l) = {omega_{i_l}^{m_l}} and
/// T_w(0) = T_w (the k-prefix included).
inline std::vector<WordSet> tableaux_stages(const OrthodonticSequence& seq) {
  const int l = seq.length();
  std::vector<WordSet> stages(static_cast<std::size_t>(l) + 1);
  Word prefix;
  for (int j = 1; j <= seq.size(); ++j) {
    Word block = omega_word(j, seq.interval_multiplicities[static_cast<std::size_t>(j - 1)]);
    prefix.insert(prefix.end(), block.begin(), block.end());
  }
  if (l == 0) {
    stages[0] = WordSet{prefix};
    return stages;
  }
  auto tooth = [&](int j) { return seq.teeth[static_cast<std::size_t>(j - 1)]; };
  auto mult = [&](int j) { return seq.step_multiplicities[static_cast<std::size_t>(j - 1)]; };
  stages[static_cast<std::size_t>(l)] = WordSet{omega_word(tooth(l), mult(l))};
  for (int r = l - 1; r >= 1; --r)
    stages[static_cast<std::size_t>(r)] =
        prepend(omega_word(tooth(r), mult(r)), quantized_demazure(tooth(r + 1), stages[static_cast<std::size_t>(r) + 1]));
  stages[0] = prepend(prefix, quantized_demazure(tooth(1), stages[1]));
  return stages;
}

inline WordSet tableaux_set(const Permutation& w) { return tableaux_stages(orthodontic_sequence(w)).front(); }

inline WordSet tableaux_stage(const Permutation& w, int r) {
  auto stages = tableaux_stages(orthodontic_sequence(w));
  detail::require(r >= 0 && r < static_cast<int>(stages.size()), "tableau stage out of range");
  return stages[static_cast<std::size_t>(r)];
}

/// wt(T)_v = number of v's, v = 1..n.
inline std::vector<int> weight(const Word& word, int n) {
  std::vector<int> wt(static_cast<std::size_t>(n), 0);
  for (Letter x : word) {
    detail::require(x >= 1 && x <= n, "word letter outside [n]");
    ++wt[static_cast<std::size_t>(x - 1)];
  }
  return wt;
}

inline Polynomial weight_polynomial(const WordSet& words, int n) {
  Polynomial p(n);
  for (const Word& word : words) p.add(Monomial::from_exponents(weight(word, n)), 1);
  return p;
}

inline Polynomial schubert_from_tableaux(const Permutation& w) {
  detail::require(w.size() >= 1 && w.size() <= kMaxVariables, "Schubert polynomials need 1 <= n <= 16");
  return weight_polynomial(tableaux_set(w), w.size());
}

/// tau(c) for c = 1..n: matches column c of D to an equal column of
/// D_{i,m} (+) (empty columns), preserving the order among equal columns.
inline Permutation tau_reindexing(const Diagram& d, const Diagram& dim) {
  const int n = d.num_columns();
  std::vector<RowSet> target(dim.columns().begin(), dim.columns().end());
  detail::require(static_cast<int>(target.size()) <= n, "reconstruction has more columns than the diagram");
  target.resize(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> tau(static_cast<std::size_t>(n), 0);
  for (int c = 1; c <= n; ++c) {
    for (int t = 1; t <= n; ++t) {
      if (!used[static_cast<std::size_t>(t - 1)] && target[static_cast<std::size_t>(t - 1)] == d.column(c)) {
        used[static_cast<std::size_t>(t - 1)] = true;
        tau[static_cast<std::size_t>(c - 1)] = t;
        break;
      }
    }
    detail::ensure(tau[static_cast<std::size_t>(c - 1)] != 0, "tau: diagram is not column-equivalent to D_{i,m}");
  }
  return Permutation(std::move(tau));
}

inline Permutation tau_reindexing(const Permutation& w) {
  const auto seq = orthodontic_sequence(w);
  return tau_reindexing(rothe_diagram(w), build_D_im(seq, w.size()));
}

/// A word read into a diagram: consecutive segments fill the nonempty columns
/// in the given order, each top to bottom.
class FillingView {
 public:
  FillingView(Word word, Diagram diagram, std::vector<int> column_order)
      : word_(std::move(word)), diagram_(std::move(diagram)), order_(std::move(column_order)) {
    detail::require(static_cast<int>(word_.size()) == diagram_.box_count(),
                    "filling: word length " + std::to_string(word_.size()) + " does not match " +
                        std::to_string(diagram_.box_count()) + " boxes");
    std::size_t p = 0;
    for (int c : order_) {
      for (int row : diagram_.column(c).elements()) {
        cells_.push_back({row, c, word_[p]});
        ++p;
      }
    }
    detail::require(p == word_.size(), "filling: column order does not cover the diagram");
  }

  struct Cell {
    int row;
    int column;
    int entry;
  };

  const Word& word() const noexcept { return word_; }
  const Diagram& diagram() const noexcept { return diagram_; }
  const std::vector<int>& column_order() const noexcept { return order_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  /// Column that receives the word letter at 0-based position p.
  int column_of_position(std::size_t p) const { return cells_.at(p).column; }

  /// Strictly increasing down each column.
  bool is_column_strict() const {
    for (std::size_t p = 1; p < cells_.size(); ++p)
      if (cells_[p].column == cells_[p - 1].column && cells_[p].entry <= cells_[p - 1].entry) return false;
    return true;
  }

  /// Entry in box (p, q) is at most p.
  bool is_row_flagged() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.entry <= c.row; });
  }

 private:
  Word word_;
  Diagram diagram_;
  std::vector<int> order_;
  std::vector<Cell> cells_;
};

/// Precomputed data for reading words of T_w(r) into O(w, r).
struct FillingContext {
  OrthodontiaTrace trace;
  Permutation tau;
  std::vector<WordSet> stages;

  explicit FillingContext(const Permutation& w)
      : trace(orthodontia(w)),
        tau(tau_reindexing(trace.stage(0), build_D_im(trace.sequence, w.size()))),
        stages(tableaux_stages(trace.sequence)) {}

  /// Columns tau^{-1}(1), tau^{-1}(2), ... that are nonempty in O(w, r).
  std::vector<int> column_order(int r) const {
    const Diagram& d = trace.stage(r);
    const Permutation inv = tau.inverse();
    std::vector<int> order;
    for (int t = 1; t <= inv.size(); ++t)
      if (!d.column(inv(t)).empty()) order.push_back(inv(t));
    return order;
  }

  FillingView read(const Word& word, int r) const { return FillingView(word, trace.stage(r), column_order(r)); }
};

/// Reads a word of T_w(r) into O(w, r) and checks that the result is a
/// column-strict, row-flagged filling; a violation raises InternalError.
inline FillingView read_into_diagram(const FillingContext& ctx, const Word& word, int r) {
  FillingView view = ctx.read(word, r);
  detail::ensure(view.is_column_strict(), "filling of O(w," + std::to_string(r) + ") is not column-strict");
  detail::ensure(view.is_row_flagged(), "filling of O(w," + std::to_string(r) + ") is not row-flagged");
  return view;
}

inline FillingView read_into_diagram(const Word& word, const Permutation& w, int r) {
  return read_into_diagram(FillingContext(w), word, r);
}

}  // namespace schubert
