#pragma once

// Exact multivariate polynomials over Z with the divided-difference and
// Demazure operators. Variables are x_1 .. x_n, 1-based.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schubert/error.hpp"

namespace schubert {

using Integer = boost::multiprecision::cpp_int;

inline constexpr int kMaxVariables = 16;

/// Exponent vector of fixed capacity kMaxVariables.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial from_exponents(std::span<const int> exps) {
    detail::require(static_cast<int>(exps.size()) <= kMaxVariables, "too many variables");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i) + 1, exps[i]);
    return m;
  }

  constexpr int operator[](int var) const noexcept { return exps_[static_cast<std::size_t>(var - 1)]; }

  void set(int var, int e) {
    detail::require(var >= 1 && var <= kMaxVariables, "variable index out of range");
    detail::require(e >= 0 && e <= 255, "exponent out of range");
    exps_[static_cast<std::size_t>(var - 1)] = static_cast<std::uint8_t>(e);
  }

  int degree() const noexcept {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (int v = 1; v <= kMaxVariables; ++v) m.set(v, (*this)[v] + o[v]);
    return m;
  }

  /// Exchanges the exponents of x_i and x_{i+1}.
  Monomial swapped(int i) const noexcept {
    Monomial m = *this;
    std::swap(m.exps_[static_cast<std::size_t>(i - 1)], m.exps_[static_cast<std::size_t>(i)]);
    return m;
  }

  /// Exponents of x_1..x_nvars.
  std::vector<int> exponents(int nvars) const {
    return std::vector<int>(exps_.begin(), exps_.begin() + nvars);
  }

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {
    detail::require(nvars >= 0 && nvars <= kMaxVariables, "variable count out of range");
  }

  static Polynomial constant(int nvars, const Integer& c) {
    Polynomial p(nvars);
    p.add(Monomial{}, c);
    return p;
  }
  static Polynomial term(int nvars, const Monomial& m, const Integer& c = 1) {
    Polynomial p(nvars);
    p.add(m, c);
    return p;
  }
  static Polynomial variable(int nvars, int var) {
    detail::require(var >= 1 && var <= nvars, "variable index out of range");
    Monomial m;
    m.set(var, 1);
    return term(nvars, m);
  }

  int nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Adds c * m, dropping the term if it cancels.
  void add(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    Polynomial out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
    return out;
  }

  Polynomial times(const Monomial& m) const {
    Polynomial out(nvars_);
    for (const auto& [t, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), t * m, c);
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_same_ring(const Polynomial& o) const {
    detail::require(nvars_ == o.nvars_, "polynomials live in different variable counts");
  }

  int nvars_ = 0;
  TermMap terms_;
};

/// omega_j = x_1 x_2 ... x_j as a monomial.
inline Monomial omega(int j) {
  Monomial m;
  for (int v = 1; v <= j; ++v) m.set(v, 1);
  return m;
}

/// s_i f: exchanges x_i and x_{i+1}.
inline Polynomial swap_variables(int i, const Polynomial& f) {
  detail::require(i >= 1 && i < f.nvars(), "variable index out of range");
  Polynomial out(f.nvars());
  for (const auto& [m, c] : f.terms()) out.add(m.swapped(i), c);
  return out;
}

/// (f - s_i f) / (x_i - x_{i+1}).
///
/// The numerator is antisymmetric in x_i, x_{i+1}, so its terms pair up as
/// c x^a and -c x^{s_i a}. Each pair with a_i > a_{i+1} divides exactly into a
/// geometric sum; an unpaired term means the division is inexact, which can
/// only be a bug and raises InternalError.
inline Polynomial divided_difference(int i, const Polynomial& f) {
  detail::require(i >= 1 && i < f.nvars(), "divided difference index out of range");
  const Polynomial numerator = f - swap_variables(i, f);
  Polynomial quotient(f.nvars());
  for (const auto& [m, c] : numerator.terms()) {
    const int p = m[i];
    const int q = m[i + 1];
    detail::ensure(p != q, "divided difference: numerator not antisymmetric");
    if (p < q) {
      detail::ensure(numerator.coefficient(m.swapped(i)) == -c, "divided difference: inexact division");
      continue;
    }
    // c (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p) / (x_i - x_{i+1})
    //   = c sum_{t=0}^{p-q-1} x_i^{p-1-t} x_{i+1}^{q+t}
    Monomial t = m;
    for (int s = 0; s < p - q; ++s) {
      t.set(i, p - 1 - s);
      t.set(i + 1, q + s);
      quotient.add(t, c);
    }
  }
  return quotient;
}

/// pi_i f = d_i (x_i f).
inline Polynomial demazure(int i, const Polynomial& f) {
  Monomial xi;
  xi.set(i, 1);
  return divided_difference(i, f.times(xi));
}

/// f(x_1, ..., x_{k-1}, 0, x_{k+1}, ...).
inline Polynomial substitute_zero(const Polynomial& f, int k) {
  Polynomial out(f.nvars());
  for (const auto& [m, c] : f.terms())
    if (m[k] == 0) out.add(m, c);
  return out;
}

/// Re-embeds f(x_1..x_{n-1}) as f(x_1, ..., x_{k-1}, x_{k+1}, ..., x_n).
inline Polynomial skip_variable(const Polynomial& f, int k) {
  const int n = f.nvars() + 1;
  detail::require(k >= 1 && k <= n, "variable index out of range");
  Polynomial out(n);
  for (const auto& [m, c] : f.terms()) {
    Monomial t;
    for (int v = 1; v < n; ++v) t.set(v < k ? v : v + 1, m[v]);
    out.add(t, c);
  }
  return out;
}

/// Same polynomial viewed in a larger ring.
inline Polynomial widen(const Polynomial& f, int nvars) {
  detail::require(nvars >= f.nvars(), "cannot narrow a polynomial ring");
  Polynomial out(nvars);
  for (const auto& [m, c] : f.terms()) out.add(m, c);
  return out;
}

inline bool is_zero_one(const Polynomial& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.second == 1; });
}

/// 0 for the zero polynomial.
inline Integer max_coefficient(const Polynomial& f) {
  Integer best = 0;
  for (const auto& [m, c] : f.terms()) best = std::max(best, c);
  return best;
}

inline bool is_nonnegative(const Polynomial& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.second > 0; });
}

/// f - g has no negative coefficient.
inline bool coefficientwise_geq(const Polynomial& f, const Polynomial& g) {
  detail::require(f.nvars() == g.nvars(), "polynomials live in different variable counts");
  for (const auto& [m, c] : g.terms())
    if (f.coefficient(m) < c) return false;
  for (const auto& [m, c] : f.terms())
    if (c < 0 && g.coefficient(m) > c) return false;
  return true;
}

/// Sum of all coefficients, i.e. f(1, ..., 1).
inline Integer coefficient_sum(const Polynomial& f) {
  Integer s = 0;
  for (const auto& [m, c] : f.terms()) s += c;
  return s;
}

/// Terms in graded-lexicographic order: higher total degree first, then
/// lexicographically larger exponent vectors first.
inline std::vector<std::pair<Monomial, Integer>> graded_lex_terms(const Polynomial& f) {
  std::vector<std::pair<Monomial, Integer>> out(f.terms().begin(), f.terms().end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int da = a.first.degree();
    const int db = b.first.degree();
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return out;
}

inline std::string format_monomial(const Monomial& m, int nvars) {
  std::string out;
  for (int v = 1; v <= nvars; ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(v);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out;
}

/// "x1^3*x2*x3 + 2*x1^2*x2^2*x4 - x3", "0" for the zero polynomial.
inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : graded_lex_terms(f)) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const std::string mono = format_monomial(m, f.nvars());
    if (mono.empty())
      out += magnitude.str();
    else if (magnitude == 1)
      out += mono;
    else
      out += magnitude.str() + "*" + mono;
  }
  return out;
}

/// Line-oriented records: a header line, then one line per term in
/// graded-lex order, e.g. "term exponents=3,1,1,0,0 coefficient=1".
inline std::string to_structured(const Polynomial& f) {
  std::ostringstream out;
  out << "polynomial nvars=" << f.nvars() << " terms=" << f.term_count() << '\n';
  for (const auto& [m, c] : graded_lex_terms(f)) {
    out << "term exponents=";
    for (int v = 1; v <= f.nvars(); ++v) out << (v > 1 ? "," : "") << m[v];
    out << " coefficient=" << c.str() << '\n';
  }
  return out.str();
}

}  // namespace schubert
