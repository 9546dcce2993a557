#pragma once

// Permutations in one-line notation, column-major diagrams, Rothe diagrams,
// pattern containment and row/column deletion. All indices are 1-based.

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schubert/error.hpp"

namespace schubert {

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : entries_) {
      detail::require(v >= 1 && v <= n, "permutation entry out of range: " + std::to_string(v));
      detail::require(!seen[static_cast<std::size_t>(v)], "repeated permutation entry: " + std::to_string(v));
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(e));
  }

  /// w_0 = n n-1 ... 1
  static Permutation longest(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(e));
  }

  int size() const noexcept { return static_cast<int>(entries_.size()); }

  /// w_i for 1 <= i <= n.
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> one_line() const noexcept { return entries_; }

  Permutation inverse() const {
    std::vector<int> inv(entries_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Permutation(std::move(inv));
  }

  /// w s_i: swaps the entries in positions i and i+1.
  Permutation times_simple(int i) const {
    detail::require(i >= 1 && i < size(), "simple transposition index out of range");
    auto e = entries_;
    std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(i)]);
    return Permutation(std::move(e));
  }

  bool is_ascent(int i) const { return (*this)(i) < (*this)(i + 1); }

  /// Number of inversions.
  int length() const {
    int count = 0;
    for (int i = 1; i <= size(); ++i)
      for (int j = i + 1; j <= size(); ++j)
        if ((*this)(i) > (*this)(j)) ++count;
    return count;
  }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : w.one_line()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

/// "31542" for n <= 9, "4,5,7,8,1,2,6,9,3,10" otherwise.
inline std::string to_string(const Permutation& w) {
  std::string out;
  const bool compact = w.size() <= 9;
  for (int i = 1; i <= w.size(); ++i) {
    if (!compact && i > 1) out += ',';
    out += std::to_string(w(i));
  }
  return out;
}

inline std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(sep, pos);
    if (next == std::string_view::npos) next = text.size();
    auto tok = text.substr(pos, next - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    detail::require(!tok.empty() && ec == std::errc() && ptr == tok.data() + tok.size(),
                    "malformed integer '" + std::string(tok) + "'");
    out.push_back(value);
    pos = next + 1;
  }
  return out;
}

/// Accepts both the compact digit form and the comma-separated form.
inline Permutation parse_permutation(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  detail::require(!text.empty(), "empty permutation");
  if (text.find(',') != std::string_view::npos) return Permutation(parse_int_list(text, ','));
  std::vector<int> entries;
  for (char ch : text) {
    detail::require(ch >= '1' && ch <= '9', "invalid permutation digit '" + std::string(1, ch) + "'");
    entries.push_back(ch - '0');
  }
  return Permutation(std::move(entries));
}

/// A subset of [64], used for one column of a diagram. Bit i-1 stands for row i.
class RowSet {
 public:
  static constexpr int kMaxRow = 64;

  constexpr RowSet() = default;
  constexpr explicit RowSet(std::uint64_t bits) : bits_(bits) {}
  RowSet(std::initializer_list<int> rows) {
    for (int r : rows) insert(r);
  }

  /// [j] = {1, ..., j}
  static constexpr RowSet interval(int j) {
    return RowSet(j >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << j) - 1));
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(int row) const noexcept {
    return row >= 1 && row <= kMaxRow && ((bits_ >> (row - 1)) & 1u);
  }
  void insert(int row) {
    detail::require(row >= 1 && row <= kMaxRow, "row index out of range");
    bits_ |= std::uint64_t{1} << (row - 1);
  }
  void erase(int row) {
    if (row >= 1 && row <= kMaxRow) bits_ &= ~(std::uint64_t{1} << (row - 1));
  }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  /// Largest row, 0 when empty.
  constexpr int max() const noexcept { return empty() ? 0 : 64 - std::countl_zero(bits_); }

  /// Nonempty and of the form [j].
  constexpr bool is_interval() const noexcept { return !empty() && (bits_ & (bits_ + 1)) == 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// Exchanges membership of rows i and i+1.
  constexpr RowSet swapped(int i) const noexcept {
    const std::uint64_t lo = (bits_ >> (i - 1)) & 1u;
    const std::uint64_t hi = (bits_ >> i) & 1u;
    if (lo == hi) return *this;
    return RowSet(bits_ ^ (std::uint64_t{3} << (i - 1)));
  }

  /// Smallest i with i not in the set and i+1 in it.
  std::optional<int> smallest_missing_tooth() const noexcept {
    const std::uint64_t teeth = (bits_ >> 1) & ~bits_;
    if (teeth == 0) return std::nullopt;
    return std::countr_zero(teeth) + 1;
  }

  /// Removes row k and shifts the rows above it down by one.
  constexpr RowSet without_row_reindexed(int k) const noexcept {
    const std::uint64_t low_mask = (std::uint64_t{1} << (k - 1)) - 1;
    const std::uint64_t high = k >= 64 ? 0 : (bits_ >> k) << (k - 1);
    return RowSet((bits_ & low_mask) | high);
  }

  friend constexpr auto operator<=>(const RowSet&, const RowSet&) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// A sequence of columns C_1, ..., C_m of subsets of [rows]. For Rothe diagrams
/// and the weyl module the frame is square (m == rows); orthodontic
/// reconstructions may carry any number of columns.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(int rows) : Diagram(rows, std::vector<RowSet>(static_cast<std::size_t>(rows))) {}
  Diagram(int rows, std::vector<RowSet> columns) : rows_(rows), columns_(std::move(columns)) {
    detail::require(rows >= 0 && rows <= RowSet::kMaxRow, "diagram size out of range");
    for (const auto& c : columns_) detail::require(c.max() <= rows_, "diagram box outside the row frame");
  }

  /// Builds a rows x rows diagram from (row, column) boxes.
  static Diagram from_boxes(int rows, std::initializer_list<std::pair<int, int>> boxes) {
    Diagram d(rows);
    for (auto [i, j] : boxes) d.add_box(i, j);
    return d;
  }

  int rows() const noexcept { return rows_; }
  int num_columns() const noexcept { return static_cast<int>(columns_.size()); }

  RowSet column(int j) const { return columns_[static_cast<std::size_t>(j - 1)]; }
  void set_column(int j, RowSet c) {
    detail::require(j >= 1 && j <= num_columns(), "column index out of range");
    detail::require(c.max() <= rows_, "diagram box outside the row frame");
    columns_[static_cast<std::size_t>(j - 1)] = c;
  }
  std::span<const RowSet> columns() const noexcept { return columns_; }

  bool contains(int i, int j) const {
    return j >= 1 && j <= num_columns() && column(j).contains(i);
  }
  void add_box(int i, int j) {
    detail::require(i >= 1 && i <= rows_ && j >= 1 && j <= num_columns(), "box outside the diagram frame");
    columns_[static_cast<std::size_t>(j - 1)].insert(i);
  }

  int box_count() const noexcept {
    int total = 0;
    for (const auto& c : columns_) total += c.size();
    return total;
  }

  /// Boxes in column-major order.
  std::vector<std::pair<int, int>> boxes() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= num_columns(); ++j)
      for (int i : column(j).elements()) out.emplace_back(i, j);
    return out;
  }

  /// Number of boxes in row i.
  int row_count(int i) const {
    int count = 0;
    for (const auto& c : columns_) count += c.contains(i) ? 1 : 0;
    return count;
  }

  /// Swaps rows i and i+1 in every column.
  void swap_rows(int i) {
    detail::require(i >= 1 && i < rows_, "row swap index out of range");
    for (auto& c : columns_) c = c.swapped(i);
  }

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  int rows_ = 0;
  std::vector<RowSet> columns_;
};

/// D(w) = {(i, j) : i < w^{-1}(j) and j < w(i)}.
inline Diagram rothe_diagram(const Permutation& w) {
  const int n = w.size();
  detail::require(n <= RowSet::kMaxRow, "permutation too large for a diagram");
  const Permutation inv = w.inverse();
  Diagram d(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < w(i); ++j)
      if (i < inv(j)) d.add_box(i, j);
  return d;
}

/// (r, c'), (r', c) in D with r < r', c < c' forces (r, c) in D.
inline bool has_northwest_property(const Diagram& d) {
  const int m = d.num_columns();
  for (int c = 1; c <= m; ++c) {
    const RowSet col = d.column(c);
    for (int cp = c + 1; cp <= m; ++cp) {
      // rows r holding a box in column c' that sit strictly above some box of column c
      const int lowest = col.max();
      for (int r : d.column(cp).elements()) {
        if (r >= lowest) break;
        if (!col.contains(r)) return false;
      }
    }
  }
  return true;
}

/// Lexicographically least realization j_1 < ... < j_m of sigma in w, if any.
inline std::optional<std::vector<int>> contains_pattern(const Permutation& w, const Permutation& sigma) {
  const int n = w.size();
  const int m = sigma.size();
  if (m > n) return std::nullopt;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(m));
  std::function<bool(int)> search = [&](int next) -> bool {
    const int depth = static_cast<int>(chosen.size());
    if (depth == m) return true;
    for (int p = next; p <= n - (m - depth) + 1; ++p) {
      bool consistent = true;
      for (int t = 0; t < depth && consistent; ++t)
        consistent = (w(chosen[static_cast<std::size_t>(t)]) < w(p)) == (sigma(t + 1) < sigma(depth + 1));
      if (!consistent) continue;
      chosen.push_back(p);
      if (search(p + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(1)) return std::nullopt;
  return chosen;
}

/// The pattern of w at the given strictly increasing positions, flattened to S_m.
inline Permutation pattern_at(const Permutation& w, std::span<const int> positions) {
  std::vector<int> values;
  values.reserve(positions.size());
  for (int p : positions) values.push_back(w(p));
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  for (int& v : values) v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
  return Permutation(std::move(values));
}

enum class DeletionMode {
  Reindex,    ///< drop row k and column l, relabel the rest into [n-1]
  KeepIndex,  ///< only clear boxes in row k or column l, keep the frame
};

inline Diagram delete_row_col(const Diagram& d, int k, int l, DeletionMode mode) {
  if (k < 1 || k > d.rows() || l < 1 || l > d.num_columns())
    throw std::out_of_range("delete_row_col: row or column index out of range");
  if (mode == DeletionMode::KeepIndex) {
    Diagram out = d;
    for (int j = 1; j <= d.num_columns(); ++j) {
      RowSet c = j == l ? RowSet{} : d.column(j);
      c.erase(k);
      out.set_column(j, c);
    }
    return out;
  }
  std::vector<RowSet> cols;
  cols.reserve(static_cast<std::size_t>(d.num_columns() - 1));
  for (int j = 1; j <= d.num_columns(); ++j)
    if (j != l) cols.push_back(d.column(j).without_row_reindexed(k));
  return Diagram(d.rows() - 1, std::move(cols));
}

/// The pattern in S_{n-1} obtained by forgetting w_k.
inline Permutation one_step_pattern(const Permutation& w, int k) {
  detail::require(k >= 1 && k <= w.size(), "position out of range");
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(w.size() - 1));
  for (int i = 1; i <= w.size(); ++i)
    if (i != k) e.push_back(w(i) > w(k) ? w(i) - 1 : w(i));
  return Permutation(std::move(e));
}

/// One line per column: "j: i1 i2 ..." ("j:" for an empty column).
inline std::string format_diagram(const Diagram& d) {
  std::ostringstream out;
  for (int j = 1; j <= d.num_columns(); ++j) {
    out << j << ':';
    for (int i : d.column(j).elements()) out << ' ' << i;
    out << '\n';
  }
  return out.str();
}

/// Inverse of format_diagram. Blank lines and lines starting with '#' are
/// skipped. The frame is square: as many rows as there are columns.
inline Diagram parse_diagram(std::string_view text) {
  std::vector<RowSet> cols;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    detail::require(colon != std::string::npos, "line " + std::to_string(line_no) + ": expected 'j: rows...'");
    int j = 0;
    {
      std::istringstream head(line.substr(0, colon));
      detail::require(static_cast<bool>(head >> j), "line " + std::to_string(line_no) + ": bad column index");
    }
    detail::require(j == static_cast<int>(cols.size()) + 1,
                    "line " + std::to_string(line_no) + ": columns must be listed as 1, 2, ... in order");
    RowSet c;
    std::istringstream rest(line.substr(colon + 1));
    std::string tok;
    while (rest >> tok) {
      int i = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), i);
      detail::require(ec == std::errc() && ptr == tok.data() + tok.size() && i >= 1 && i <= RowSet::kMaxRow,
                      "line " + std::to_string(line_no) + ": bad row index '" + tok + "'");
      c.insert(i);
    }
    cols.push_back(c);
  }
  const int n = static_cast<int>(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    detail::require(cols[j].max() <= n, "column " + std::to_string(j + 1) + " has a row index larger than " +
                                            std::to_string(n));
  return Diagram(n, std::move(cols));
}

}  // namespace schubert
