#pragma once

#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "multiplicity.hpp"
#include "rootsys.hpp"

/// Fixed-vector dimensions under the stabilizer subgroups of the matrix
/// models: diagonal determinant-one sign matrices on the SO side, the
/// diagonal torus criterion on the SU side.

namespace flagdim {

/// Conjugacy class data for diagonal +-1 matrices in SO(n): the class of
/// matrices with 2k entries equal to -1 has size C(n,2k), and every member
/// is conjugate within SO(n) to the maximal-torus element whose first k
/// rotation-plane coordinates are -1.
struct SignClass {
  int ambient_n = 0;
  int minus_pairs = 0;
  Int class_size;
  std::vector<int> torus_point;
};

inline std::vector<SignClass> sign_classes(int n) {
  if (n < 3) throw DomainError("sign classes need n >= 3, got " + std::to_string(n));
  const int rank = n % 2 != 0 ? (n - 1) / 2 : n / 2;
  std::vector<SignClass> out;
  for (int k = 0; 2 * k <= n; ++k) {
    SignClass cls;
    cls.ambient_n = n;
    cls.minus_pairs = k;
    cls.class_size = binomial(n, 2 * k);
    cls.torus_point.assign(rank, 1);
    for (int i = 0; i < k; ++i) cls.torus_point[i] = -1;
    out.push_back(std::move(cls));
  }
  return out;
}

/// Character of the tabulated representation at the class's torus point:
/// sum over weights of m_lambda prod_i t_i^{lambda_i}. With t_i in {+-1}
/// this is a signed multiplicity sum.
inline Int char_at_sign_class(const WeightTable& table, const SignClass& cls) {
  if (table.family == Family::A) {
    throw DomainError("sign-class characters apply to B/D weight tables only");
  }
  if (static_cast<int>(cls.torus_point.size()) != table.rank) {
    throw DomainError("torus point rank does not match the weight table");
  }
  Int total = 0;
  for (const auto& [lam, mult] : table.entries) {
    Coord minus_sum = 0;
    for (int i = 0; i < cls.minus_pairs; ++i) minus_sum += lam[i];
    total += minus_sum % 2 == 0 ? mult : -mult;
  }
  return total;
}

/// Dimension of the subspace of V(mu) fixed by every diagonal +-1 matrix of
/// determinant 1 inside SO(n): the character averaged over that group,
/// folded along conjugacy classes,
///   2^{-(n-1)} sum_k C(n,2k) chi(t_k).
/// The average of a character over a finite group is a dimension, so the
/// division must come out exact and nonnegative; both are checked at runtime
/// as a witness for the class bookkeeping.
inline Int fixed_subspace_dim_so(int n, const CoordVec& mu,
                                 const Int& ceiling = default_mult_ceiling()) {
  const RootSystem rs = so_root_system(n);
  const WeightTable table = freudenthal_table(rs, rs.make_weight(mu), ceiling);
  Int acc = 0;
  for (const auto& cls : sign_classes(n)) {
    acc += cls.class_size * char_at_sign_class(table, cls);
  }
  if (acc < 0) {
    throw ConsistencyError("negative character average for SO(" + std::to_string(n) +
                           ") weight " + format_coords(mu));
  }
  return exact_div(acc, Int(1) << (n - 1), "fixed_subspace_dim_so");
}

/// Dimension of the subspace of the SU(n) representation V(mu) fixed by the
/// diagonal stabilizer: the multiplicity of the torus-trivial weight.
inline Int fixed_subspace_dim_su(int n, const CoordVec& mu,
                                 const Int& ceiling = default_mult_ceiling()) {
  const RootSystem rs = su_root_system(n);
  return zero_weight_mult(rs, rs.make_weight(mu), ceiling);
}

/// Lattice precondition for a nonzero fixed vector; n is the group parameter
/// (SO(n) for B/D, SU(n) for A). Necessary but not sufficient: the adjoint
/// weight (1,1,0,...,0) of SO(2m) passes the parity test yet has no fixed
/// vector.
inline bool parity_filter(Family f, int n, const CoordVec& mu) {
  Coord s = 0;
  for (Coord c : mu) s += c;
  switch (f) {
    case Family::D: return s % 2 == 0;
    case Family::A: return s % n == 0;
    default: return true;
  }
}

}  // namespace flagdim
