#pragma once

#include <stdexcept>
#include <string>
#include <vector>
#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace hk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Bad input from a caller (malformed composition, index out of range, ...).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but exceeds a size cap.
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested combination of object and mode is not available
// (e.g. graded characteristic of an ungraded module).
struct UnavailableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed; indicates a bug, never expected to fire.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw ArgumentError(msg);
}

inline void check(bool ok, const std::string& msg) {
  if (!ok) throw ConsistencyError(msg);
}

// Default cap on n for enumerations that scale like 2^n or n!.
inline constexpr int kDefaultMaxN = 12;

inline void guard_n(int n, int bound, const std::string& what) {
  require(n >= 0, what + ": n must be nonnegative");
  if (n > bound)
    throw SizeLimitError(what + ": n=" + std::to_string(n) +
                         " exceeds bound " + std::to_string(bound));
}

}  // namespace hk
