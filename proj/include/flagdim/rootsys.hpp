#pragma once

#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

/// Root data for the classical families A, B, D in coordinate form.
///
/// Everything lives in the ambient integer lattice: A_r weights are stored
/// with r+1 coordinates (an appended 0 normalizes the translation freedom of
/// SU(r+1) weights), B_r and D_r weights with r coordinates. The Weyl vector
/// is rational (half-integral for B), so geometry is done over Q.

namespace flagdim {

enum class Family { A, B, D };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    default: return 'D';
  }
}

inline int family_min_rank(Family f) { return f == Family::D ? 2 : 1; }

/// Ambient coordinate dimension: A_r sits in Z^{r+1}, B_r and D_r in Z^r.
inline int ambient_dim(Family f, int rank) {
  return f == Family::A ? rank + 1 : rank;
}

inline void check_rank(Family f, int rank) {
  if (rank < family_min_rank(f)) {
    throw DomainError(std::string("family ") + family_letter(f) +
                      " requires rank >= " + std::to_string(family_min_rank(f)) +
                      ", got " + std::to_string(rank));
  }
}

/// Validates the dominance staircase on user-facing coordinates
/// (length = rank for every family):
///   A, B:  mu_1 >= mu_2 >= ... >= mu_rank >= 0
///   D:     mu_1 >= mu_2 >= ... >= mu_{rank-1} >= |mu_rank|
/// Throws DominanceError carrying the 1-based index of the first coordinate
/// that breaks the chain.
inline void check_dominant(Family f, int rank, const CoordVec& mu) {
  check_rank(f, rank);
  if (static_cast<int>(mu.size()) != rank) {
    throw DomainError(std::string("family ") + family_letter(f) + " rank " +
                      std::to_string(rank) + " needs " + std::to_string(rank) +
                      " coordinates, got " + std::to_string(mu.size()));
  }
  for (int i = 0; i + 1 < rank; ++i) {
    Coord next = mu[i + 1];
    if (f == Family::D && i + 2 == rank && next < 0) next = -next;
    if (mu[i] < next) {
      throw DominanceError("coordinate " + std::to_string(i + 2) + " of " +
                               format_coords(mu) + " breaks the dominance chain",
                           i + 2);
    }
  }
  if (f != Family::D && mu[rank - 1] < 0) {
    throw DominanceError("coordinate " + std::to_string(rank) + " of " +
                             format_coords(mu) + " must be nonnegative",
                         rank);
  }
}

/// A validated dominant weight in ambient storage coordinates (A carries the
/// appended 0).
struct DominantWeight {
  Family family = Family::A;
  int rank = 0;
  CoordVec coords;

  [[nodiscard]] CoordVec user_coords() const {
    CoordVec u = coords;
    if (family == Family::A) u.pop_back();
    return u;
  }

  [[nodiscard]] bool is_zero() const {
    for (Coord c : coords)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
};

inline DominantWeight make_weight(Family f, int rank, CoordVec mu) {
  check_dominant(f, rank, mu);
  if (f == Family::A) mu.push_back(0);
  return DominantWeight{f, rank, std::move(mu)};
}

class RootSystem {
 public:
  RootSystem(Family family, int rank)
      : family_(family), rank_(rank), ambient_(ambient_dim(family, rank)) {
    check_rank(family, rank);
    build_roots();
    build_rho();
  }

  [[nodiscard]] Family family() const noexcept { return family_; }
  [[nodiscard]] int rank() const noexcept { return rank_; }
  [[nodiscard]] int ambient() const noexcept { return ambient_; }
  [[nodiscard]] const std::vector<CoordVec>& positive_roots() const noexcept {
    return roots_;
  }
  [[nodiscard]] const RatVec& weyl_vector() const noexcept { return rho_; }

  [[nodiscard]] std::vector<CoordVec> simple_roots() const {
    std::vector<CoordVec> out;
    for (int i = 0; i + 1 < ambient_; ++i) {
      CoordVec v(ambient_, 0);
      v[i] = 1;
      v[i + 1] = -1;
      out.push_back(std::move(v));
    }
    if (family_ == Family::B) {
      CoordVec v(ambient_, 0);
      v[ambient_ - 1] = 1;
      out.push_back(std::move(v));
    } else if (family_ == Family::D) {
      CoordVec v(ambient_, 0);
      v[ambient_ - 2] = 1;
      v[ambient_ - 1] = 1;
      out.push_back(std::move(v));
    }
    return out;
  }

  /// Inner product of ambient vectors. For A this is the quotient form
  /// <x,y> - (sum x)(sum y)/ambient, which kills the all-ones direction the
  /// appended-0 storage convention leaves free; it agrees with the standard
  /// dot product whenever one argument has coordinate sum zero (every root
  /// does).
  template <class VX, class VY>
  [[nodiscard]] Rat inner(const VX& x, const VY& y) const {
    Rat dot = 0, sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      Rat xi(x[i]), yi(y[i]);
      dot += xi * yi;
      sx += xi;
      sy += yi;
    }
    if (family_ == Family::A) dot -= sx * sy / ambient_;
    return dot;
  }

  template <class VX>
  [[nodiscard]] Rat norm2(const VX& x) const {
    return inner(x, x);
  }

  [[nodiscard]] DominantWeight make_weight(CoordVec user) const {
    return flagdim::make_weight(family_, rank_, std::move(user));
  }

 private:
  void build_roots() {
    const int n = ambient_;
    auto push = [&](int i, int j, int si, int sj) {
      CoordVec v(n, 0);
      v[i] = si;
      if (j >= 0) v[j] = sj;
      roots_.push_back(std::move(v));
    };
    if (family_ == Family::A) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) push(i, j, 1, -1);
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          push(i, j, 1, -1);
          push(i, j, 1, 1);
        }
      if (family_ == Family::B)
        for (int i = 0; i < n; ++i) push(i, -1, 1, 0);
    }
  }

  void build_rho() {
    rho_.assign(ambient_, Rat(0));
    for (const auto& a : roots_)
      for (int i = 0; i < ambient_; ++i) rho_[i] += a[i];
    for (auto& c : rho_) c /= 2;
  }

  Family family_;
  int rank_;
  int ambient_;
  std::vector<CoordVec> roots_;
  RatVec rho_;
};

/// Root data acting behind SO(n): B_{(n-1)/2} for odd n, D_{n/2} for even n.
inline RootSystem so_root_system(int n) {
  if (n < 3) throw DomainError("SO(n) needs n >= 3, got " + std::to_string(n));
  return n % 2 != 0 ? RootSystem(Family::B, (n - 1) / 2)
                    : RootSystem(Family::D, n / 2);
}

/// Root data behind SU(n): A_{n-1}.
inline RootSystem su_root_system(int n) {
  if (n < 2) throw DomainError("SU(n) needs n >= 2, got " + std::to_string(n));
  return RootSystem(Family::A, n - 1);
}

}  // namespace flagdim
