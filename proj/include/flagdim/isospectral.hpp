#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "common.hpp"
#include "exactlinalg.hpp"

/// The isospectral matrix models: block-diagonal traceless seed matrices,
/// exact stabilizer and orbit dimensions of their conjugation orbits, and a
/// numerical roundtrip that recovers a sampled flag from the spectral
/// decomposition of the matrix it is mapped to.

namespace flagdim {

/// A = diag(a_1 I_{n_1}, ..., a_r I_{n_r}), traceless, with pairwise
/// distinct rational eigenvalues; the orbit of A under SO(n) or SU(n)
/// conjugation realizes the flag manifold of the block partition.
struct IsospectralModel {
  Field field = Field::Real;
  int n = 0;
  std::vector<int> blocks;
  std::vector<Rat> eigenvalues;
};

/// Builds a model from a block partition. Missing eigenvalues default to the
/// descending arithmetic progression r+1-2i, shifted to make the weighted
/// sum vanish; explicit eigenvalues are taken as given and validated.
inline IsospectralModel build_model(Field field, std::vector<int> blocks,
                                    std::vector<Rat> eigenvalues = {}) {
  const int r = static_cast<int>(blocks.size());
  if (r < 2) {
    throw DomainError("a flag needs at least 2 blocks; with one block the "
                      "traceless seed matrix degenerates to 0");
  }
  int n = 0;
  for (int b : blocks) {
    if (b < 1) throw DomainError("block sizes must be positive");
    n += b;
  }
  if (eigenvalues.empty()) {
    eigenvalues.resize(r);
    Rat weighted = 0;
    for (int i = 0; i < r; ++i) {
      eigenvalues[i] = r - 1 - 2 * i;
      weighted += eigenvalues[i] * blocks[i];
    }
    const Rat shift = -weighted / n;
    for (auto& a : eigenvalues) a += shift;
  }
  if (static_cast<int>(eigenvalues.size()) != r) {
    throw DomainError("eigenvalue count must match the block count");
  }
  Rat trace = 0;
  for (int i = 0; i < r; ++i) trace += eigenvalues[i] * blocks[i];
  if (trace != 0) {
    throw DomainError("weighted eigenvalue sum must vanish, got " + trace.str());
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      if (eigenvalues[i] == eigenvalues[j]) {
        throw DomainError("eigenvalues must be pairwise distinct");
      }
    }
  }
  return {field, n, std::move(blocks), std::move(eigenvalues)};
}

/// Exact stabilizer dimension: the kernel of X -> XA - AX on so(n) (real)
/// or su(n) (complex), computed by rational row reduction of the images of
/// a Lie algebra basis. Since A is diagonal, (XA - AX)_{pq} = X_{pq}(a_q - a_p).
inline int stabilizer_dim_exact(const IsospectralModel& m) {
  const int n = m.n;
  std::vector<Rat> diag;
  diag.reserve(n);
  for (std::size_t b = 0; b < m.blocks.size(); ++b) {
    diag.insert(diag.end(), m.blocks[b], m.eigenvalues[b]);
  }

  using RatMat = std::vector<std::vector<Rat>>;
  auto zero = [&] { return RatMat(n, std::vector<Rat>(n, Rat(0))); };
  auto commutator_flat = [&](const RatMat& x) {
    std::vector<Rat> row;
    row.reserve(static_cast<std::size_t>(n) * n);
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) row.push_back(x[p][q] * (diag[q] - diag[p]));
    }
    return row;
  };

  std::vector<std::vector<Rat>> rows;
  int lie_dim = 0;
  if (m.field == Field::Real) {
    lie_dim = n * (n - 1) / 2;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        RatMat x = zero();
        x[p][q] = 1;
        x[q][p] = -1;
        rows.push_back(commutator_flat(x));
      }
    }
  } else {
    lie_dim = n * n - 1;
    // X = R + iS anti-Hermitian with A real diagonal: [X,A] = [R,A] + i[S,A],
    // so each basis element flattens to (real part, imaginary part).
    auto push = [&](const RatMat& re, const RatMat& im) {
      auto row = commutator_flat(re);
      auto tail = commutator_flat(im);
      row.insert(row.end(), tail.begin(), tail.end());
      rows.push_back(std::move(row));
    };
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        RatMat re = zero();
        re[p][q] = 1;
        re[q][p] = -1;
        push(re, zero());
        RatMat im = zero();
        im[p][q] = 1;
        im[q][p] = 1;
        push(zero(), im);
      }
    }
    for (int p = 0; p + 1 < n; ++p) {
      RatMat im = zero();
      im[p][p] = 1;
      im[p + 1][p + 1] = -1;
      push(zero(), im);
    }
  }
  return lie_dim - static_cast<int>(rational_rank(std::move(rows)));
}

/// Orbit dimension = group dimension minus stabilizer dimension, cross
/// checked against the closed forms n(n-1)/2 - sum n_i(n_i-1)/2 (real) and
/// n^2 - sum n_i^2 (complex).
inline int orbit_dim(const IsospectralModel& m) {
  const int n = m.n;
  const int group = m.field == Field::Real ? n * (n - 1) / 2 : n * n - 1;
  const int orbit = group - stabilizer_dim_exact(m);
  long long closed = m.field == Field::Real ? static_cast<long long>(n) * (n - 1) / 2
                                            : static_cast<long long>(n) * n;
  for (int b : m.blocks) {
    closed -= m.field == Field::Real ? static_cast<long long>(b) * (b - 1) / 2
                                     : static_cast<long long>(b) * b;
  }
  if (orbit != closed) {
    throw ConsistencyError("orbit dimension mismatch: kernel route gives " +
                           std::to_string(orbit) + ", closed form gives " +
                           std::to_string(closed));
  }
  return orbit;
}

struct RoundtripReport {
  int samples = 0;
  std::uint64_t seed = 0;
  double max_residual = 0;         // sine of the worst principal angle seen
  double max_gram_residual = 0;    // orthonormality defect of recovered bases
  double max_eigenvalue_dev = 0;   // worst eigenvalue recovery error
  int worst_sample = -1;
  double tolerance = 1e-8;
  bool passed = false;
};

namespace detail {

template <class Scalar>
inline void roundtrip_samples(const IsospectralModel& m, int samples,
                              std::uint64_t seed, RoundtripReport& rep) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  constexpr bool is_real = std::is_same_v<Scalar, double>;
  const int n = m.n;
  const int r = static_cast<int>(m.blocks.size());

  std::vector<double> a(r);
  for (int i = 0; i < r; ++i) a[i] = m.eigenvalues[i].convert_to<double>();

  std::vector<int> offset(r, 0);
  for (int i = 1; i < r; ++i) offset[i] = offset[i - 1] + m.blocks[i - 1];

  // the eigensolver returns ascending eigenvalues, so group blocks that way
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x] < a[y]; });

  double half_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      half_gap = std::min(half_gap, std::abs(a[i] - a[j]) / 2);
    }
  }

  Eigen::VectorXd adiag(n);
  for (int i = 0; i < r; ++i) {
    for (int t = 0; t < m.blocks[i]; ++t) adiag(offset[i] + t) = a[i];
  }
  const Mat A = adiag.asDiagonal().toDenseMatrix().template cast<Scalar>();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  for (int s = 0; s < samples; ++s) {
    Mat g(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if constexpr (is_real) {
          g(i, j) = gauss(rng);
        } else {
          g(i, j) = Scalar(gauss(rng), gauss(rng));
        }
      }
    }
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    const Scalar det = q.determinant();
    if constexpr (is_real) {
      if (det < 0) q.col(n - 1) = -q.col(n - 1);
    } else {
      // |det| = 1; dividing one column by it lands in SU(n)
      q.col(n - 1) /= det;
    }

    Mat M = q * A * q.adjoint();
    M = Scalar(0.5) * (M + Mat(M.adjoint()));

    Eigen::SelfAdjointEigenSolver<Mat> es(M);
    const Eigen::VectorXd evals = es.eigenvalues();
    const Mat evecs = es.eigenvectors();

    const double gram =
        (Mat(evecs.adjoint() * evecs) - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
    rep.max_gram_residual = std::max(rep.max_gram_residual, gram);

    int pos = 0;
    for (int b : order) {
      const int nb = m.blocks[b];
      bool grouped = true;
      for (int t = 0; t < nb; ++t) {
        const double dev = std::abs(evals(pos + t) - a[b]);
        rep.max_eigenvalue_dev = std::max(rep.max_eigenvalue_dev, dev);
        if (dev > half_gap) grouped = false;
      }
      double residual;
      if (!grouped) {
        residual = std::numeric_limits<double>::infinity();
      } else {
        // sine of the largest principal angle, computed as the norm of the
        // component of the sampled block outside the recovered span; the
        // equivalent sqrt(1 - smin^2) of the overlap matrix loses half the
        // available precision to cancellation and floors near sqrt(epsilon)
        const Mat recovered = evecs.middleCols(pos, nb);
        const Mat sampled = q.middleCols(offset[b], nb);
        const Mat defect = sampled - recovered * Mat(recovered.adjoint() * sampled);
        Eigen::JacobiSVD<Mat> svd(defect);
        residual = svd.singularValues()(0);
      }
      if (residual > rep.max_residual) {
        rep.max_residual = residual;
        rep.worst_sample = s;
      }
      pos += nb;
    }
  }
}

}  // namespace detail

/// Samples flags (as special orthogonal/unitary frames), pushes the seed
/// matrix through them, and recovers each block's span from the spectral
/// decomposition. The residual is the sine of the largest principal angle
/// between the sampled and the recovered block subspaces.
inline RoundtripReport flag_roundtrip(const IsospectralModel& m, int samples = 100,
                                      std::uint64_t seed = 42,
                                      double tolerance = 1e-8) {
  if (samples < 1) throw DomainError("sample count must be >= 1");
  RoundtripReport rep;
  rep.samples = samples;
  rep.seed = seed;
  rep.tolerance = tolerance;
  if (m.field == Field::Real) {
    detail::roundtrip_samples<double>(m, samples, seed, rep);
  } else {
    detail::roundtrip_samples<std::complex<double>>(m, samples, seed, rep);
  }
  rep.passed = rep.max_residual < tolerance && rep.max_gram_residual < 1e-10;
  return rep;
}

}  // namespace flagdim
