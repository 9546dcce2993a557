#pragma once

// Flagged Weyl modules of diagrams. The dual character chi_D is assembled
// monomial by monomial: the coefficient of x^a is the rank of the span of
// prod_j det(Y^{C_j}_{D_j}) over all C <= D of weight a, where Y is the
// generic upper-triangular matrix.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schubert/classic.hpp"
#include "schubert/linalg.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

/// Hard ceiling for the symbolic matrix; the configurable limit sits below it.
inline constexpr int kMaxWeylSize = 8;
inline constexpr int kDefaultWeylLimit = 6;

/// R <= S: same size and the k-th least element of R is at most the k-th least of S.
inline bool column_leq(RowSet r, RowSet s) {
  if (r.size() != s.size()) return false;
  const auto re = r.elements();
  const auto se = s.elements();
  for (std::size_t t = 0; t < re.size(); ++t)
    if (re[t] > se[t]) return false;
  return true;
}

/// Columnwise <=.
inline bool diagram_leq(const Diagram& c, const Diagram& d) {
  if (c.num_columns() != d.num_columns()) return false;
  for (int j = 1; j <= d.num_columns(); ++j)
    if (!column_leq(c.column(j), d.column(j))) return false;
  return true;
}

/// Polynomial in the indeterminates y_{ij}, i <= j, of an n x n upper-triangular matrix.
class YPolynomial {
 public:
  static constexpr int kMaxVariables = kMaxWeylSize * (kMaxWeylSize + 1) / 2;
  using Key = std::array<std::uint8_t, kMaxVariables>;

  explicit YPolynomial(int n) : n_(n) {
    detail::require(n >= 0 && n <= kMaxWeylSize, "symbolic matrix too large");
  }

  static YPolynomial one(int n) {
    YPolynomial p(n);
    p.add(Key{}, 1);
    return p;
  }

  /// Index of y_{ij} (1 <= i <= j <= n).
  static int variable_index(int n, int i, int j) { return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i); }

  static YPolynomial variable(int n, int i, int j) {
    detail::require(1 <= i && i <= j && j <= n, "y_ij only exists for i <= j");
    Key k{};
    k[static_cast<std::size_t>(variable_index(n, i, j))] = 1;
    YPolynomial p(n);
    p.add(k, 1);
    return p;
  }

  int size() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Key, Integer>& terms() const noexcept { return terms_; }

  void add(const Key& k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
    YPolynomial out(a.n_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        Key k;
        for (std::size_t v = 0; v < k.size(); ++v) k[v] = static_cast<std::uint8_t>(ka[v] + kb[v]);
        out.add(k, ca * cb);
      }
    return out;
  }

  friend bool operator==(const YPolynomial&, const YPolynomial&) = default;

  /// Exponent of y_{ij} in a key.
  int exponent(const Key& k, int i, int j) const {
    return k[static_cast<std::size_t>(variable_index(n_, i, j))];
  }

 private:
  int n_;
  std::map<Key, Integer> terms_;
};

/// det(Y restricted to rows R and columns S). Zero unless R <= S.
inline YPolynomial minor(int n, RowSet rows, RowSet cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: row and column sets differ in size");
  detail::require(rows.max() <= n && cols.max() <= n, "minor: index outside the matrix");
  const auto r = rows.elements();
  const auto s = cols.elements();
  const std::size_t k = r.size();
  YPolynomial det(n);
  std::vector<bool> used(k, false);
  YPolynomial::Key key{};
  // Laplace expansion along successive rows, skipping structural zeros.
  std::function<void(std::size_t, int)> expand = [&](std::size_t a, int sign) {
    if (a == k) {
      det.add(key, sign);
      return;
    }
    int position = 0;  // index of column b among the still-unused columns
    for (std::size_t b = 0; b < k; ++b) {
      if (used[b]) continue;
      if (r[a] <= s[b]) {
        used[b] = true;
        auto& e = key[static_cast<std::size_t>(YPolynomial::variable_index(n, r[a], s[b]))];
        ++e;
        expand(a + 1, (position % 2 == 0) ? sign : -sign);
        --e;
        used[b] = false;
      }
      ++position;
    }
  };
  expand(0, 1);
  return det;
}

/// All R with R <= S, built position by position: r_t ranges over (r_{t-1}, s_t].
inline std::vector<RowSet> subsets_below(RowSet s) {
  const auto se = s.elements();
  std::vector<RowSet> out;
  RowSet cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t t, int prev) {
    if (t == se.size()) {
      out.push_back(cur);
      return;
    }
    for (int v = prev + 1; v <= se[t]; ++v) {
      cur.insert(v);
      rec(t + 1, v);
      cur.erase(v);
    }
  };
  rec(0, 0);
  return out;
}

/// prod_j prod_{i in C_j} x_i
inline Monomial diagram_weight(std::span<const RowSet> columns) {
  Monomial m;
  for (const auto& c : columns)
    for (int i : c.elements()) m.set(i, m[i] + 1);
  return m;
}

/// Subdiagram families: for each weight monomial, every C <= D of that weight.
using SubdiagramFamilies = std::map<Monomial, std::vector<std::vector<RowSet>>>;

inline void check_weyl_size(const Diagram& d, int limit) {
  detail::require(limit >= 0 && limit <= kMaxWeylSize,
                  "size limit must lie in [0, " + std::to_string(kMaxWeylSize) + "]");
  const int size = std::max(d.rows(), d.num_columns());
  if (size > limit)
    throw LimitExceeded("diagram size " + std::to_string(size) + " exceeds the limit " + std::to_string(limit));
}

inline SubdiagramFamilies subdiagram_families(const Diagram& d) {
  std::vector<std::vector<RowSet>> choices;
  for (const auto& col : d.columns()) choices.push_back(subsets_below(col));
  SubdiagramFamilies groups;
  std::vector<RowSet> cur(choices.size());
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == choices.size()) {
      groups[diagram_weight(cur)].push_back(cur);
      return;
    }
    for (const auto& c : choices[j]) {
      cur[j] = c;
      rec(j + 1);
    }
  };
  rec(0);
  return groups;
}

/// Caches det(Y^R_S) for one matrix size.
class MinorTable {
 public:
  explicit MinorTable(int n) : n_(n) {}
  const YPolynomial& get(RowSet rows, RowSet cols) {
    auto key = std::make_pair(rows.bits(), cols.bits());
    auto it = table_.find(key);
    if (it == table_.end()) it = table_.emplace(key, minor(n_, rows, cols)).first;
    return it->second;
  }

 private:
  int n_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, YPolynomial> table_;
};

/// prod_j det(Y^{C_j}_{D_j})
inline YPolynomial determinant_product(const Diagram& d, std::span<const RowSet> c, MinorTable& minors) {
  YPolynomial p = YPolynomial::one(std::max(d.rows(), d.num_columns()));
  for (int j = 1; j <= d.num_columns(); ++j) {
    if (d.column(j).empty()) continue;
    p = p * minors.get(c[static_cast<std::size_t>(j - 1)], d.column(j));
  }
  return p;
}

/// dim span{ prod_j det(Y^{C_j}_{D_j}) : C in members }, exactly.
inline int span_rank(const Diagram& d, const std::vector<std::vector<RowSet>>& members, MinorTable& minors) {
  if (members.empty()) return 0;
  // a single product of nonzero minors is nonzero
  if (members.size() == 1) return 1;
  std::vector<YPolynomial> products;
  products.reserve(members.size());
  std::map<YPolynomial::Key, std::size_t> basis;
  for (const auto& c : members) {
    products.push_back(determinant_product(d, c, minors));
    for (const auto& [k, coeff] : products.back().terms()) basis.try_emplace(k, basis.size());
  }
  IntegerMatrix m(products.size(), std::vector<Integer>(basis.size(), 0));
  for (std::size_t r = 0; r < products.size(); ++r)
    for (const auto& [k, coeff] : products[r].terms()) m[r][basis.at(k)] = coeff;
  return rank_fraction_free(std::move(m));
}

inline int weyl_matrix_size(const Diagram& d) { return std::max(d.rows(), d.num_columns()); }

/// chi_D in x_1..x_rows.
inline Polynomial dual_character(const Diagram& d, int limit = kDefaultWeylLimit) {
  check_weyl_size(d, limit);
  MinorTable minors(weyl_matrix_size(d));
  Polynomial chi(d.rows());
  for (const auto& [weight, members] : subdiagram_families(d)) chi.add(weight, span_rank(d, members, minors));
  return chi;
}

struct DominanceResult {
  Diagram reduced;                ///< D with the boxes in row k or column l removed
  Monomial multiplier;            ///< M
  Polynomial character;           ///< chi_D
  Polynomial reduced_character;   ///< chi_{D-hat}
  Polynomial remainder;           ///< F = chi_D - M chi_{D-hat}(x_k = 0)
  bool ok = false;                ///< F has no negative coefficient
  bool rank_monotone = false;     ///< augmented products span at least as much as the reduced ones, per group
  bool augmentation_ok = false;   ///< every C-hat <= D-hat augments into a C <= D of weight M m
  bool augmentation_checked = false;
};

/// M = product of x_i over the boxes (i, j) of D with i == k or j == l.
///
/// A box at (k, l) contributes x_k once; it is a single box of the augmented
/// diagram.
inline Monomial dominance_multiplier(const Diagram& d, int k, int l) {
  Monomial m;
  for (auto [i, j] : d.boxes())
    if (i == k || j == l) m.set(i, m[i] + 1);
  return m;
}

inline DominanceResult pattern_dominance_check(const Diagram& d, int k, int l, int limit = kDefaultWeylLimit,
                                               int augmentation_check_limit = 4) {
  check_weyl_size(d, limit);
  DominanceResult res;
  res.reduced = delete_row_col(d, k, l, DeletionMode::KeepIndex);
  res.multiplier = dominance_multiplier(d, k, l);

  const int n = weyl_matrix_size(d);
  MinorTable minors(n);
  const auto families = subdiagram_families(d);
  res.character = Polynomial(d.rows());
  for (const auto& [weight, members] : families) res.character.add(weight, span_rank(d, members, minors));

  const auto reduced_families = subdiagram_families(res.reduced);
  res.reduced_character = Polynomial(d.rows());
  res.rank_monotone = true;
  res.augmentation_checked = n <= augmentation_check_limit;
  res.augmentation_ok = true;
  Polynomial shifted(d.rows());  // M chi_{D-hat}(x_k = 0)
  for (const auto& [weight, members] : reduced_families) {
    const int reduced_rank = span_rank(res.reduced, members, minors);
    res.reduced_character.add(weight, reduced_rank);
    if (weight[k] != 0) continue;
    const Monomial target = weight * res.multiplier;
    shifted.add(target, reduced_rank);

    // augment each C-hat by the row-k and column-l boxes of D
    std::vector<std::vector<RowSet>> augmented;
    for (const auto& c : members) {
      std::vector<RowSet> aug = c;
      for (int j = 1; j <= d.num_columns(); ++j) {
        auto& col = aug[static_cast<std::size_t>(j - 1)];
        if (j == l) col = d.column(l);
        if (d.column(j).contains(k)) col.insert(k);
      }
      if (res.augmentation_checked) {
        Diagram aug_d(d.rows(), aug);
        const bool below = diagram_leq(aug_d, d);
        const bool weight_ok = diagram_weight(aug) == target;
        const bool recovers = delete_row_col(aug_d, k, l, DeletionMode::KeepIndex) == Diagram(d.rows(), c);
        if (!(below && weight_ok && recovers)) res.augmentation_ok = false;
      }
      augmented.push_back(std::move(aug));
    }
    const int aug_rank = span_rank(d, augmented, minors);
    if (aug_rank < reduced_rank || res.character.coefficient(target) < aug_rank) res.rank_monotone = false;
  }
  res.remainder = res.character - shifted;
  res.ok = is_nonnegative(res.remainder);
  return res;
}

/// S_w - M S_sigma(x_1, .., x_k-hat, .., x_n) where sigma forgets w_k.
inline Polynomial pattern_inequality_remainder(const Permutation& w, int k) {
  const Permutation sigma = one_step_pattern(w, k);
  const Diagram d = rothe_diagram(w);
  const Polynomial sw = schubert_classic(w);
  Polynomial ss = sigma.size() == 0 ? Polynomial::constant(0, 1) : schubert_classic(sigma);
  const Polynomial lifted = skip_variable(ss, k);
  return sw - lifted.times(dominance_multiplier(d, k, w(k)));
}

inline bool schubert_pattern_inequality(const Permutation& w, int k) {
  return is_nonnegative(pattern_inequality_remainder(w, k));
}

}  // namespace schubert
