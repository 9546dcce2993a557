#pragma once

// Schubert polynomials from the top: S_{w0} = x_1^{n-1} ... x_{n-1} and
// S_w = d_i S_{w s_i} whenever w_i < w_{i+1}.

#include <cstddef>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

enum class AscentStrategy { Leftmost, Rightmost };

inline Polynomial schubert_longest(int n) {
  detail::require(n >= 1 && n <= kMaxVariables, "Schubert polynomials need 1 <= n <= 16");
  Monomial m;
  for (int v = 1; v < n; ++v) m.set(v, n - v);
  return Polynomial::term(n, m);
}

/// Thread-safe memo of Schubert polynomials keyed by permutation. Once
/// `capacity` entries are stored, new results are still returned but no
/// longer cached.
class SchubertCache {
 public:
  static constexpr std::size_t kDefaultCapacity = std::size_t{1} << 17;

  explicit SchubertCache(std::size_t capacity = kDefaultCapacity,
                         AscentStrategy strategy = AscentStrategy::Leftmost)
      : capacity_(capacity), strategy_(strategy) {}

  SchubertCache(const SchubertCache&) = delete;
  SchubertCache& operator=(const SchubertCache&) = delete;

  std::shared_ptr<const Polynomial> get(const Permutation& w) {
    detail::require(w.size() >= 1 && w.size() <= kMaxVariables, "Schubert polynomials need 1 <= n <= 16");
    if (auto hit = lookup(w)) return hit;

    // climb along ascents until w0 or a cached permutation
    std::vector<Permutation> chain{w};
    std::vector<int> steps;
    std::shared_ptr<const Polynomial> top;
    const Permutation w0 = Permutation::longest(w.size());
    while (true) {
      const Permutation& u = chain.back();
      if (u == w0) {
        top = std::make_shared<const Polynomial>(schubert_longest(w.size()));
        store(u, top);
        break;
      }
      if (chain.size() > 1) {
        if (auto hit = lookup(u)) {
          top = hit;
          break;
        }
      }
      const int i = pick_ascent(u);
      steps.push_back(i);
      chain.push_back(u.times_simple(i));
    }

    // descend: S_{chain[t]} = d_{steps[t]} S_{chain[t+1]}
    for (std::size_t t = steps.size(); t-- > 0;) {
      top = std::make_shared<const Polynomial>(divided_difference(steps[t], *top));
      store(chain[t], top);
    }
    return top;
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return table_.size();
  }

  std::size_t capacity() const noexcept { return capacity_; }
  AscentStrategy strategy() const noexcept { return strategy_; }

  void clear() {
    std::lock_guard lock(mutex_);
    table_.clear();
  }

 private:
  int pick_ascent(const Permutation& u) const {
    const int n = u.size();
    if (strategy_ == AscentStrategy::Leftmost) {
      for (int i = 1; i < n; ++i)
        if (u.is_ascent(i)) return i;
    } else {
      for (int i = n - 1; i >= 1; --i)
        if (u.is_ascent(i)) return i;
    }
    throw InternalError("no ascent in a permutation other than w0");
  }

  std::shared_ptr<const Polynomial> lookup(const Permutation& w) const {
    std::lock_guard lock(mutex_);
    auto it = table_.find(w);
    return it == table_.end() ? nullptr : it->second;
  }

  void store(const Permutation& w, std::shared_ptr<const Polynomial> p) {
    std::lock_guard lock(mutex_);
    if (table_.size() < capacity_) table_.emplace(w, std::move(p));
  }

  std::size_t capacity_;
  AscentStrategy strategy_;
  mutable std::mutex mutex_;
  std::unordered_map<Permutation, std::shared_ptr<const Polynomial>, PermutationHash> table_;
};

inline SchubertCache& default_schubert_cache() {
  static SchubertCache cache;
  return cache;
}

/// S_w in x_1..x_n for w in S_n.
inline Polynomial schubert_classic(const Permutation& w) { return *default_schubert_cache().get(w); }

}  // namespace schubert
