#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Thrown when a computation detects that one of its own invariants broke
/// (inexact division, disagreeing oracles in checked mode, ...). Never caused
/// by bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown when an input is valid but exceeds a configured size limit.
class LimitExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace detail
}  // namespace schubert
