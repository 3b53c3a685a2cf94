#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/// Shared scalar types and the error taxonomy used across the library.

namespace flagdim {

/// Representation dimensions and combinatorial counts overflow 64 bits
/// already at moderate rank, so they are arbitrary-precision throughout.
using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar; all root-system geometry is done over Q.
using Rat = boost::multiprecision::cpp_rational;

/// Weight and root coordinates are small integers.
using Coord = long long;
using CoordVec = std::vector<Coord>;
using RatVec = std::vector<Rat>;

/// Ground field of the matrix model: symmetric (SO) vs Hermitian (SU) side.
enum class Field { Real, Complex };

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A parameter lies outside its validity range (rank, group size, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A coordinate vector violates the dominance staircase; index() is the
/// 1-based position of the first offending coordinate.
class DominanceError : public Error {
 public:
  DominanceError(const std::string& msg, int index) : Error(msg), index_(index) {}
  [[nodiscard]] int index() const noexcept { return index_; }

 private:
  int index_;
};

/// A configurable resource ceiling was exceeded; dimension() reports the
/// representation dimension that tripped it.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& msg, Int dimension)
      : Error(msg), dimension_(std::move(dimension)) {}
  [[nodiscard]] const Int& dimension() const noexcept { return dimension_; }

 private:
  Int dimension_;
};

/// An internal cross-check failed (inexact division, non-integral character
/// average, kernel vs closed-form disagreement). Indicates a bug, not bad
/// input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Quotient of two integers that must divide exactly.
inline Int exact_div(const Int& num, const Int& den, const char* what) {
  Int q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw ConsistencyError(std::string(what) + ": " + num.str() +
                           " is not divisible by " + den.str());
  }
  return q;
}

/// Extracts the integer value of a rational whose denominator must be 1.
inline Int rat_to_int(const Rat& x, const char* what) {
  if (boost::multiprecision::denominator(x) != 1) {
    throw ConsistencyError(std::string(what) + ": non-integral value " + x.str());
  }
  return boost::multiprecision::numerator(x);
}

inline Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int num = 1, den = 1;
  for (long long i = 1; i <= k; ++i) {
    num *= n - k + i;
    den *= i;
  }
  return exact_div(num, den, "binomial");
}

/// Renders coordinates as "(2,1,0)" for messages and reports.
inline std::string format_coords(const CoordVec& mu) {
  std::string s = "(";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(mu[i]);
  }
  return s + ")";
}

}  // namespace flagdim
