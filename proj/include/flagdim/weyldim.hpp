#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>

#include "common.hpp"
#include "rootsys.hpp"

/// Weyl dimension formula: per-family closed products plus the generic
/// product over positive roots, which serves as an independent oracle for
/// the closed forms. Products are accumulated as one big-integer numerator
/// and one denominator; the single final division is asserted exact.

namespace flagdim {

/// dim V(mu) for D_n:
///   prod_{i<j} (mu_i - mu_j + j - i)(mu_i + mu_j + 2n - i - j)
///            / ((j - i)(2n - i - j)).
inline Int dim_d(int rank, const CoordVec& mu) {
  check_dominant(Family::D, rank, mu);
  const long long n = rank;
  Int num = 1, den = 1;
  for (long long i = 1; i <= n; ++i) {
    for (long long j = i + 1; j <= n; ++j) {
      num *= Int(mu[i - 1] - mu[j - 1] + j - i) *
             Int(mu[i - 1] + mu[j - 1] + 2 * n - i - j);
      den *= Int(j - i) * Int(2 * n - i - j);
    }
  }
  return exact_div(num, den, "dim_d");
}

/// dim V(mu) for B_n: the same staircase product with 2n+1 in place of 2n
/// and the second factor extended over i <= j (the diagonal terms are the
/// short-root contributions).
inline Int dim_b(int rank, const CoordVec& mu) {
  check_dominant(Family::B, rank, mu);
  const long long n = rank;
  Int num = 1, den = 1;
  for (long long i = 1; i <= n; ++i) {
    for (long long j = i + 1; j <= n; ++j) {
      num *= Int(mu[i - 1] - mu[j - 1] + j - i);
      den *= Int(j - i);
    }
    for (long long j = i; j <= n; ++j) {
      num *= Int(mu[i - 1] + mu[j - 1] + 2 * n + 1 - i - j);
      den *= Int(2 * n + 1 - i - j);
    }
  }
  return exact_div(num, den, "dim_b");
}

/// dim V(mu) for A_rank (group SU(rank+1)). Appending the storage 0 turns
/// the formula into one difference product over all ambient pairs:
///   prod_{i<j<=rank+1} (mu_i - mu_j + j - i) / (j - i).
inline Int dim_a(int rank, const CoordVec& mu) {
  check_dominant(Family::A, rank, mu);
  const long long n = rank + 1;
  CoordVec m = mu;
  m.push_back(0);
  Int num = 1, den = 1;
  for (long long i = 1; i <= n; ++i) {
    for (long long j = i + 1; j <= n; ++j) {
      num *= Int(m[i - 1] - m[j - 1] + j - i);
      den *= Int(j - i);
    }
  }
  return exact_div(num, den, "dim_a");
}

/// Per-family dispatch with a thread-safe memo cache keyed by
/// (family, rank, coordinates).
inline Int dim_weight(const DominantWeight& w) {
  using Key = std::tuple<int, int, CoordVec>;
  static std::map<Key, Int> cache;
  static std::mutex cache_mutex;
  Key key{static_cast<int>(w.family), w.rank, w.coords};
  {
    std::lock_guard<std::mutex> guard(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const CoordVec u = w.user_coords();
  Int d = w.family == Family::A   ? dim_a(w.rank, u)
          : w.family == Family::B ? dim_b(w.rank, u)
                                  : dim_d(w.rank, u);
  std::lock_guard<std::mutex> guard(cache_mutex);
  return cache.emplace(std::move(key), std::move(d)).first->second;
}

/// Independent oracle: dim V(mu) = prod_{alpha>0} <mu+rho,alpha> / <rho,alpha>
/// evaluated in exact rational arithmetic, with the family-appropriate inner
/// product (quotient form for A).
inline Int dim_generic(const RootSystem& rs, const DominantWeight& w) {
  if (w.family != rs.family() || w.rank != rs.rank()) {
    throw DomainError("weight " + format_coords(w.user_coords()) +
                      " does not belong to this root system");
  }
  const RatVec& rho = rs.weyl_vector();
  RatVec shifted(rs.ambient());
  for (int i = 0; i < rs.ambient(); ++i) shifted[i] = Rat(w.coords[i]) + rho[i];
  Rat num = 1, den = 1;
  for (const auto& a : rs.positive_roots()) {
    num *= rs.inner(shifted, a);
    den *= rs.inner(rho, a);
  }
  return rat_to_int(num / den, "dim_generic");
}

/// Dimension of the isospectral matrix space: trace-zero symmetric matrices
/// (n+2)(n-1)/2 over R, trace-zero Hermitian matrices n^2 - 1 over C.
inline Int dim_isospectral(Field f, int n) {
  if (n < 2) {
    throw DomainError("isospectral model needs n >= 2, got " + std::to_string(n));
  }
  if (f == Field::Real) return exact_div(Int(n + 2) * (n - 1), 2, "dim_isospectral");
  return Int(n) * n - 1;
}

}  // namespace flagdim
