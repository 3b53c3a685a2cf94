#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "common.hpp"
#include "exactlinalg.hpp"

/// Spherical harmonics in three variables: exact Laplacian-kernel dimensions
/// and the degree-2 dictionary between harmonic quadratics and traceless
/// symmetric 3x3 matrices.

namespace flagdim {

/// Exponent triples of total degree k, lexicographically by leading exponent.
inline std::vector<std::array<int, 3>> monomials3(int k) {
  std::vector<std::array<int, 3>> out;
  for (int d1 = k; d1 >= 0; --d1) {
    for (int d2 = k - d1; d2 >= 0; --d2) out.push_back({d1, d2, k - d1 - d2});
  }
  return out;
}

namespace detail {

/// Rank of the Laplacian restricted to the span of the given degree-k
/// monomials, expressed in the full degree k-2 monomial basis.
inline std::size_t laplacian_rank(const std::vector<std::array<int, 3>>& basis,
                                  int k) {
  if (k < 2 || basis.empty()) return 0;
  std::map<std::array<int, 3>, std::size_t> index;
  for (const auto& mono : monomials3(k - 2)) index.emplace(mono, index.size());

  std::vector<std::vector<Rat>> rows;
  rows.reserve(basis.size());
  for (const auto& d : basis) {
    std::vector<Rat> row(index.size(), Rat(0));
    for (int axis = 0; axis < 3; ++axis) {
      if (d[axis] < 2) continue;
      auto target = d;
      target[axis] -= 2;
      row[index.at(target)] += static_cast<long long>(d[axis]) * (d[axis] - 1);
    }
    rows.push_back(std::move(row));
  }
  return rational_rank(std::move(rows));
}

}  // namespace detail

/// dim of the harmonic polynomials of degree k in three variables (kernel of
/// the Laplacian on the full degree-k space); equals 2k+1.
inline int harmonic_dim(int k) {
  if (k < 0) throw DomainError("polynomial degree must be >= 0");
  const auto basis = monomials3(k);
  return static_cast<int>(basis.size()) -
         static_cast<int>(detail::laplacian_rank(basis, k));
}

/// dim of the harmonic polynomials of degree k spanned by monomials with all
/// exponents even: the subspace fixed by the full diagonal sign group of the
/// three coordinates. It vanishes in odd degree (no such monomial exists)
/// and agrees with the fixed space of the determinant-one sign subgroup in
/// even degree, which is what the classification bound needs.
inline int harmonic_fixed_dim(int k) {
  if (k < 0) throw DomainError("polynomial degree must be >= 0");
  std::vector<std::array<int, 3>> evens;
  for (const auto& d : monomials3(k)) {
    if (d[0] % 2 == 0 && d[1] % 2 == 0 && d[2] % 2 == 0) evens.push_back(d);
  }
  return static_cast<int>(evens.size()) -
         static_cast<int>(detail::laplacian_rank(evens, k));
}

/// Quadratic form in three variables, coefficients ordered as
/// (x1^2, x2^2, x3^2, x1x2, x1x3, x2x3).
using Quadratic = std::array<double, 6>;

/// The symmetric matrix of a quadratic: f(x) = x^T phi(f) x, cross-term
/// coefficients split across the two off-diagonal slots.
inline Eigen::Matrix3d phi_matrix(const Quadratic& f) {
  Eigen::Matrix3d m;
  m << f[0], f[3] / 2, f[4] / 2,
       f[3] / 2, f[1], f[5] / 2,
       f[4] / 2, f[5] / 2, f[2];
  return m;
}

inline Quadratic quadratic_from_matrix(const Eigen::Matrix3d& m) {
  return {m(0, 0), m(1, 1), m(2, 2), 2 * m(0, 1), 2 * m(0, 2), 2 * m(1, 2)};
}

/// Coefficients of f(Mx), computed by expanding each monomial product and
/// collecting terms (kept deliberately free of matrix algebra so it can act
/// as an independent route against conjugation by M).
inline Quadratic substitute_linear(const Quadratic& f, const Eigen::Matrix3d& M) {
  static constexpr int kI[6] = {0, 1, 2, 0, 0, 1};
  static constexpr int kJ[6] = {0, 1, 2, 1, 2, 2};
  auto cross_slot = [](int a, int b) { return a + b == 1 ? 3 : a + b == 2 ? 4 : 5; };
  Quadratic out{};
  for (int t = 0; t < 6; ++t) {
    if (f[t] == 0) continue;
    const int i = kI[t], j = kJ[t];
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const double w = f[t] * M(i, a) * M(j, b);
        if (a == b) {
          out[a] += w;
        } else {
          out[cross_slot(a, b)] += w;
        }
      }
    }
  }
  return out;
}

struct H2CheckReport {
  int samples = 0;
  std::uint64_t seed = 0;
  double max_residual = 0;
  int worst_sample = -1;
  double tolerance = 1e-10;
  bool passed = false;
};

/// For sampled rotations g and random harmonic quadratics f, compares the
/// matrix of the substituted polynomial f(g^{-1}x) against g phi(f) g^T.
/// The two routes share no code: one expands monomials, the other multiplies
/// matrices.
inline H2CheckReport h2_iso_check(int samples = 100, std::uint64_t seed = 42,
                                  double tolerance = 1e-10) {
  if (samples < 1) throw DomainError("sample count must be >= 1");
  H2CheckReport rep;
  rep.samples = samples;
  rep.seed = seed;
  rep.tolerance = tolerance;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    Eigen::Matrix3d g;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) g(i, j) = gauss(rng);
    }
    Eigen::HouseholderQR<Eigen::Matrix3d> qr(g);
    g = qr.householderQ();
    if (g.determinant() < 0) g.col(2) = -g.col(2);

    Quadratic f;
    for (auto& c : f) c = gauss(rng);
    f[2] = -f[0] - f[1];  // zero trace makes the quadratic harmonic

    const Quadratic moved = substitute_linear(f, g.transpose());  // g^{-1} = g^T
    const Eigen::Matrix3d lhs = phi_matrix(moved);
    const Eigen::Matrix3d rhs = g * phi_matrix(f) * g.transpose();
    const double residual = (lhs - rhs).cwiseAbs().maxCoeff();
    if (residual > rep.max_residual) {
      rep.max_residual = residual;
      rep.worst_sample = s;
    }
  }
  rep.passed = rep.max_residual < tolerance;
  return rep;
}

}  // namespace flagdim
