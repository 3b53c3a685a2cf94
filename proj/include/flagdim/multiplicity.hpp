#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "common.hpp"
#include "rootsys.hpp"
#include "weyldim.hpp"

/// Exact weight multiplicities via the Freudenthal recursion.

namespace flagdim {

inline const Int& default_mult_ceiling() {
  static const Int ceiling(100000);
  return ceiling;
}

/// Full multiplicity table of one irreducible V(mu), ambient coordinates,
/// entries restricted to actual weights (multiplicity > 0).
struct WeightTable {
  Family family = Family::A;
  int rank = 0;
  CoordVec highest;
  std::map<CoordVec, Int> entries;
  Int dimension;
};

namespace detail {

/// Dominant representative of the Weyl orbit of v. A: sort descending.
/// B: sort absolute values descending. D: sort absolute values descending
/// and restore one minus sign on the smallest entry when the flip count is
/// odd and no coordinate vanishes.
inline CoordVec dominant_rep(Family f, CoordVec v) {
  if (f == Family::A) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  }
  int negatives = 0;
  for (auto& c : v) {
    if (c < 0) {
      c = -c;
      ++negatives;
    }
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  if (f == Family::D && negatives % 2 != 0 && v.back() != 0) v.back() = -v.back();
  return v;
}

/// Weyl orbit of v, generated by simple reflections: adjacent swaps for all
/// families, the last-coordinate sign flip for B, the swap-and-negate of the
/// last two coordinates for D.
inline std::vector<CoordVec> weyl_orbit(Family f, int n, const CoordVec& v) {
  std::set<CoordVec> seen{v};
  std::deque<CoordVec> queue{v};
  auto push = [&](CoordVec y) {
    if (seen.insert(y).second) queue.push_back(std::move(y));
  };
  while (!queue.empty()) {
    const CoordVec x = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i + 1 < n; ++i) {
      CoordVec y = x;
      std::swap(y[i], y[i + 1]);
      push(std::move(y));
    }
    if (f == Family::B) {
      CoordVec y = x;
      y[n - 1] = -y[n - 1];
      push(std::move(y));
    } else if (f == Family::D) {
      CoordVec y = x;
      const Coord t = y[n - 1];
      y[n - 1] = -y[n - 2];
      y[n - 2] = -t;
      push(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

inline Coord floor_div2(const Int& x) {
  const Int q = x >= 0 ? Int(x / 2) : Int(-((-x + 1) / 2));
  return static_cast<Coord>(q.convert_to<long long>());
}

inline Coord ceil_div2(const Int& x) {
  const Int q = x >= 0 ? Int((x + 1) / 2) : Int(-((-x) / 2));
  return static_cast<Coord>(q.convert_to<long long>());
}

/// All dominant staircase vectors lambda in the weight-lattice coset of mu
/// with |lambda+rho| <= |mu+rho|. Works in doubled coordinates so that the
/// half-integral rho of the B family stays integral. For A the quotient
/// correction to the norm is constant on the coset and cancels from the
/// comparison, so the plain dot product decides membership there as well.
inline std::vector<CoordVec> dominant_ball_candidates(const RootSystem& rs,
                                                      const CoordVec& mu) {
  const Family f = rs.family();
  const int n = rs.ambient();
  const RatVec& rho = rs.weyl_vector();
  CoordVec rho2(n);
  for (int i = 0; i < n; ++i) {
    rho2[i] = static_cast<Coord>(
        rat_to_int(2 * rho[i], "doubled Weyl vector").convert_to<long long>());
  }

  Int budget = 0;
  Coord mu_sum = 0;
  for (int i = 0; i < n; ++i) {
    const Int t = 2 * Int(mu[i]) + rho2[i];
    budget += t * t;
    mu_sum += mu[i];
  }

  // minimal possible contribution of each position, for suffix pruning
  std::vector<Int> suffix_min(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    Int term;
    if (f == Family::A) {
      term = (rho2[i] % 2 == 0) ? 0 : 1;
    } else {
      term = Int(rho2[i]) * rho2[i];
    }
    suffix_min[i] = suffix_min[i + 1] + term;
  }

  std::vector<CoordVec> out;
  CoordVec cur(n);
  auto rec = [&](auto&& self, int i, Coord prev, const Int& acc,
                 Coord sum_so_far) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    const Int rem = budget - acc - suffix_min[i + 1];
    if (rem < 0) return;
    const Int root = sqrt(rem);
    const bool last = i + 1 == n;

    Coord hi = std::min<Coord>(prev, floor_div2(root - rho2[i]));
    Coord lo;
    if (f == Family::A) {
      lo = ceil_div2(-root - rho2[i]);
    } else if (f == Family::D && last) {
      lo = -prev;
    } else {
      lo = 0;
    }
    if (f == Family::A) {
      // remaining coordinates are bounded above by the current one, so the
      // leftover sum must fit under r copies of it; the final coordinate is
      // forced outright
      const Coord needed = mu_sum - sum_so_far;
      if (last) {
        if (needed < lo || needed > hi) return;
        lo = hi = needed;
      }
    }

    for (Coord c = hi; c >= lo; --c) {
      if (f == Family::A && !last) {
        const Coord r = static_cast<Coord>(n - i - 1);
        if (mu_sum - sum_so_far - c > r * c) continue;
      }
      if (f == Family::D && last && ((mu_sum - sum_so_far - c) % 2 != 0)) {
        continue;
      }
      const Int t = 2 * Int(c) + rho2[i];
      const Int next = acc + t * t;
      if (next + suffix_min[i + 1] > budget) continue;
      cur[i] = c;
      self(self, i + 1, f == Family::D && last ? prev : c, next, sum_so_far + c);
    }
  };
  rec(rec, 0, std::numeric_limits<Coord>::max(), Int(0), 0);
  return out;
}

}  // namespace detail

/// Freudenthal recursion
///   (|mu+rho|^2 - |lambda+rho|^2) m_lambda
///     = 2 sum_{alpha>0} sum_{k>=1} m_{lambda+k alpha} <lambda+k alpha, alpha>
/// computed over dominant candidates only: every weight of V(mu) is the Weyl
/// image of a dominant weight lying in the ball |lambda+rho| <= |mu+rho| and
/// the same lattice coset, and multiplicities are Weyl invariant, so walk
/// points are looked up through their dominant representative. Candidates
/// are processed in decreasing <lambda,rho> order; each walk step strictly
/// increases that value, so lookups always hit finished entries.
///
/// Dominant ball candidates below mu in the root order are genuine weights.
/// The remaining candidates are not weights and resolve to 0: none of their
/// walk points lands below mu either, so every lookup misses. Candidates on
/// the ball boundary are likewise never weights and are skipped before the
/// division. The walk stops at the first vanishing multiplicity, which is
/// exact because the weights through a weight along a root direction form an
/// unbroken string. The full table is then expanded orbit by orbit.
inline WeightTable freudenthal_table(const RootSystem& rs, const DominantWeight& w,
                                     const Int& ceiling = default_mult_ceiling()) {
  if (w.family != rs.family() || w.rank != rs.rank()) {
    throw DomainError("weight " + format_coords(w.user_coords()) +
                      " does not belong to this root system");
  }
  const Int dim = dim_weight(w);
  if (dim > ceiling) {
    throw ResourceError("dim V" + format_coords(w.user_coords()) + " = " + dim.str() +
                            " exceeds the multiplicity ceiling " + ceiling.str(),
                        dim);
  }

  const int n = rs.ambient();
  const RatVec& rho = rs.weyl_vector();
  auto plus_rho = [&](const CoordVec& v) {
    RatVec s(n);
    for (int i = 0; i < n; ++i) s[i] = Rat(v[i]) + rho[i];
    return s;
  };
  const Rat top_norm = rs.norm2(plus_rho(w.coords));

  const auto candidates = detail::dominant_ball_candidates(rs, w.coords);

  std::vector<std::pair<Rat, CoordVec>> order;
  order.reserve(candidates.size());
  for (const auto& lam : candidates) order.emplace_back(rs.inner(lam, rho), lam);
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });

  std::map<CoordVec, Int> mult;
  mult[w.coords] = 1;

  for (const auto& [dot, lam] : order) {
    if (lam == w.coords) continue;
    const Rat denom = top_norm - rs.norm2(plus_rho(lam));
    if (denom == 0) continue;
    Rat rhs = 0;
    for (const auto& a : rs.positive_roots()) {
      CoordVec nu = lam;
      for (;;) {
        for (int i = 0; i < n; ++i) nu[i] += a[i];
        const auto it = mult.find(detail::dominant_rep(rs.family(), nu));
        if (it == mult.end()) break;
        rhs += Rat(it->second) * rs.inner(nu, a);
      }
    }
    if (rhs == 0) continue;
    const Int m = rat_to_int(2 * rhs / denom, "freudenthal multiplicity");
    if (m < 0) {
      throw ConsistencyError("negative multiplicity at " + format_coords(lam));
    }
    if (m > 0) mult[lam] = m;
  }

  WeightTable table;
  table.family = rs.family();
  table.rank = rs.rank();
  table.highest = w.coords;
  table.dimension = dim;
  Int total = 0;
  for (const auto& [lam, m] : mult) {
    for (const auto& point : detail::weyl_orbit(rs.family(), n, lam)) {
      if (!table.entries.emplace(point, m).second) {
        throw ConsistencyError("overlapping Weyl orbits at " + format_coords(point));
      }
      total += m;
    }
  }
  if (total != dim) {
    throw ConsistencyError("multiplicities of V" + format_coords(w.user_coords()) +
                           " sum to " + total.str() + ", expected " + dim.str());
  }
  return table;
}

/// Multiplicity of the torus-trivial weight. For B and D that weight is the
/// origin; for A it is the constant vector (s/n,...,s/n) with s the ambient
/// coordinate sum, which exists in the weight lattice of V(mu) only when n
/// divides s.
inline Int zero_weight_mult(const RootSystem& rs, const DominantWeight& w,
                            const Int& ceiling = default_mult_ceiling()) {
  const int n = rs.ambient();
  CoordVec target(n, 0);
  if (rs.family() == Family::A) {
    Coord s = 0;
    for (Coord c : w.coords) s += c;
    if (s % n != 0) return 0;
    std::fill(target.begin(), target.end(), s / n);
  }
  const WeightTable table = freudenthal_table(rs, w, ceiling);
  const auto it = table.entries.find(target);
  return it == table.entries.end() ? Int(0) : it->second;
}

}  // namespace flagdim
