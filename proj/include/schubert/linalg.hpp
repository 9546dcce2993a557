#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/poly.hpp"

namespace schubert {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Rank over Q of an integer matrix by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry stays an integer: after eliminating with pivot p,
/// the update (a * p - b * c) / prev divides exactly by the previous pivot.
inline int rank_fraction_free(IntegerMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  for (const auto& r : m) detail::require(r.size() == cols, "ragged matrix");

  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Integer& p = m[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Integer factor = m[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        Integer num = m[r][c] * p - factor * m[rank][c];
        detail::ensure(num % prev == 0, "Bareiss elimination: inexact division");
        m[r][c] = num / prev;
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace schubert
