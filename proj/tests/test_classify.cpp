#include <catch2/catch_amalgamated.hpp>

#include <flagdim/classify.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

using namespace flagdim;

namespace {

std::map<CoordVec, Int> as_map(const std::vector<EnumeratedWeight>& list) {
  std::map<CoordVec, Int> out;
  for (const auto& ew : list) {
    const bool fresh = out.emplace(ew.mu, ew.dim).second;
    REQUIRE(fresh);  // enumeration must be duplicate-free
  }
  return out;
}

// independent oracle: walk every dominant vector with mu_1 <= bound and keep
// the ones whose exact dimension fits
std::map<CoordVec, Int> brute_force(Family f, int rank, const Int& bound) {
  std::map<CoordVec, Int> out;
  long long cap = bound.convert_to<long long>();
  CoordVec mu;
  auto rec = [&](auto&& self, Coord prev) -> void {
    if (static_cast<int>(mu.size()) == rank) {
      const Int d = f == Family::A   ? dim_a(rank, mu)
                    : f == Family::B ? dim_b(rank, mu)
                                     : dim_d(rank, mu);
      if (d <= bound) out.emplace(mu, d);
      return;
    }
    const bool last = static_cast<int>(mu.size()) + 1 == rank;
    const Coord lo = (f == Family::D && last) ? -prev : 0;
    for (Coord t = lo; t <= prev; ++t) {
      mu.push_back(t);
      self(self, t);
      mu.pop_back();
    }
  };
  rec(rec, cap);
  return out;
}

std::vector<CoordVec> sorted(std::vector<CoordVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("enumeration reference sets", "[classify]") {
  const auto b2 = as_map(enumerate_weights(Family::B, 2, Int(14)));
  const std::map<CoordVec, Int> b2_expected{
      {{0, 0}, 1}, {{1, 0}, 5}, {{1, 1}, 10}, {{2, 0}, 14}};
  CHECK(b2 == b2_expected);

  const auto a2 = as_map(enumerate_weights(Family::A, 2, Int(8)));
  const std::map<CoordVec, Int> a2_expected{{{0, 0}, 1}, {{1, 0}, 3}, {{1, 1}, 3},
                                            {{2, 0}, 6}, {{2, 1}, 8}, {{2, 2}, 6}};
  CHECK(a2 == a2_expected);

  const auto d2 = as_map(enumerate_weights(Family::D, 2, Int(9)));
  const std::map<CoordVec, Int> d2_expected{
      {{0, 0}, 1},  {{1, 0}, 4},  {{1, 1}, 3},  {{1, -1}, 3}, {{2, 0}, 9},
      {{2, 1}, 8},  {{2, -1}, 8}, {{2, 2}, 5},  {{2, -2}, 5}, {{3, 3}, 7},
      {{3, -3}, 7}, {{4, 4}, 9},  {{4, -4}, 9}};
  CHECK(d2 == d2_expected);
}

TEST_CASE("enumeration matches the brute-force oracle", "[classify]") {
  for (Family f : {Family::A, Family::B, Family::D}) {
    for (int rank = family_min_rank(f); rank <= 4; ++rank) {
      for (const Int bound : {Int(9), Int(50)}) {
        CAPTURE(family_letter(f), rank, bound.convert_to<long long>());
        CHECK(as_map(enumerate_weights(f, rank, bound)) ==
              brute_force(f, rank, bound));
      }
    }
  }
}

TEST_CASE("branch lower bounds never exceed completed dimensions",
          "[classify]") {
  std::mt19937_64 rng(90210);
  for (Family f : {Family::A, Family::B, Family::D}) {
    for (int trial = 0; trial < 400; ++trial) {
      const int rank = std::max(family_min_rank(f), 2 + static_cast<int>(rng() % 5));
      CoordVec mu(rank);
      Coord prev = 8;
      for (int i = 0; i < rank; ++i) mu[i] = prev = static_cast<Coord>(rng() % (prev + 1));
      if (f == Family::D && rng() % 2 == 0) mu[rank - 1] = -mu[rank - 1];
      const Int d = dim_weight(make_weight(f, rank, mu));

      CoordVec nonneg = mu;
      if (nonneg[rank - 1] < 0) nonneg[rank - 1] = -nonneg[rank - 1];
      for (int k = 1; k <= rank; ++k) {
        const CoordVec prefix(nonneg.begin(), nonneg.begin() + k);
        const Rat lb = detail::completion_lower_bound(f, rank, prefix);
        CHECK(lb <= Rat(d));
      }
    }
  }
}

TEST_CASE("candidate propositions hold across the verified ranks",
          "[classify]") {
  const auto b2 = verify_candidates(Family::B, 2);
  CHECK(b2.verdict == Verdict::Match);
  CHECK(b2.bound == 14);
  CHECK(b2.survivors ==
        sorted({CoordVec{0, 0}, CoordVec{1, 0}, CoordVec{1, 1}}));

  const auto d4 = verify_candidates(Family::D, 4);
  CHECK(d4.verdict == Verdict::Match);
  CHECK(d4.survivors == sorted({CoordVec{0, 0, 0, 0}, CoordVec{1, 1, 0, 0},
                                CoordVec{1, 1, 1, 1}, CoordVec{1, 1, 1, -1},
                                CoordVec{2, 0, 0, 0}}));

  const auto d3 = verify_candidates(Family::D, 3);
  CHECK(d3.verdict == Verdict::Match);
  CHECK(d3.survivors == sorted({CoordVec{0, 0, 0}, CoordVec{1, 1, 0},
                                CoordVec{2, 0, 0}}));

  const auto a3 = verify_candidates(Family::A, 3);
  CHECK(a3.verdict == Verdict::Match);
  CHECK(a3.bound == 15);
  CHECK(a3.survivors == sorted({CoordVec{0, 0, 0}, CoordVec{2, 1, 1}}));

  CHECK_THROWS_AS(verify_candidates(Family::B, 1), DomainError);
  CHECK_THROWS_AS(verify_candidates(Family::D, 2), DomainError);
}

TEST_CASE("entries carry the parity verdicts", "[classify]") {
  const auto rep = verify_candidates(Family::D, 3);
  bool saw_odd = false;
  for (const auto& cw : rep.enumerated) {
    Coord s = 0;
    for (Coord c : cw.mu) s += c;
    CHECK(cw.parity_pass == (s % 2 == 0));
    CHECK_FALSE(cw.fixed_dim.has_value());
    saw_odd = saw_odd || !cw.parity_pass;
  }
  CHECK(saw_odd);  // the standard representation fails parity and is listed
}

TEST_CASE("theorem verdicts for small groups", "[classify]") {
  const auto so6 = verify_theorem(GroupKind::SO, 6);
  CHECK(so6.verdict == Verdict::Match);
  REQUIRE(so6.survivors.size() == 1);
  CHECK(so6.survivors[0] == CoordVec{2, 0, 0});
  CHECK(so6.bound == 20);
  for (const auto& cw : so6.enumerated) {
    REQUIRE(cw.fixed_dim.has_value());
    if (*cw.fixed_dim > 0) CHECK(cw.parity_pass);
  }

  const auto so4 = verify_theorem(GroupKind::SO, 4);
  CHECK(so4.verdict == Verdict::Match);
  CHECK(so4.survivors == sorted({CoordVec{2, 0}, CoordVec{2, 2}, CoordVec{2, -2},
                                 CoordVec{3, 3}, CoordVec{3, -3}, CoordVec{4, 4},
                                 CoordVec{4, -4}}));
  CHECK_FALSE(so4.note.empty());

  const auto su3 = verify_theorem(GroupKind::SU, 3);
  CHECK(su3.verdict == Verdict::Match);
  REQUIRE(su3.survivors.size() == 1);
  CHECK(su3.survivors[0] == CoordVec{2, 1});

  CHECK_THROWS_AS(verify_theorem(GroupKind::SO, 13), DomainError);
  CHECK_THROWS_AS(verify_theorem(GroupKind::SU, 9), DomainError);
  CHECK_THROWS_AS(verify_theorem(GroupKind::SO, 2), DomainError);
  CHECK(verify_theorem(GroupKind::SO, 13, default_mult_ceiling(), 14).verdict ==
        Verdict::Match);
}

TEST_CASE("reports are sorted and internally consistent", "[classify]") {
  const auto rep = verify_theorem(GroupKind::SO, 5);
  CHECK(std::is_sorted(rep.enumerated.begin(), rep.enumerated.end(),
                       [](const ClassifiedWeight& a, const ClassifiedWeight& b) {
                         return a.mu < b.mu;
                       }));
  CHECK(std::is_sorted(rep.survivors.begin(), rep.survivors.end()));
  CHECK(rep.offending.empty());
  CHECK(rep.group_n == 5);
  CHECK(rep.family == Family::B);
  CHECK(rep.rank == 2);
  CHECK(group_name(rep.group, rep.group_n) == "SO(5)");
}
