#include <catch2/catch_amalgamated.hpp>

#include <flagdim/fixedpoints.hpp>
#include <flagdim/multiplicity.hpp>
#include <flagdim/rootsys.hpp>
#include <flagdim/weyldim.hpp>

using namespace flagdim;

TEST_CASE("sign classes partition the diagonal subgroup", "[fixedpoints]") {
  const auto five = sign_classes(5);
  REQUIRE(five.size() == 3);
  CHECK(five[0].class_size == 1);
  CHECK(five[1].class_size == 10);
  CHECK(five[2].class_size == 5);
  CHECK(five[1].torus_point == std::vector<int>{-1, 1});

  const auto eight = sign_classes(8);
  REQUIRE(eight.size() == 5);
  Int total = 0;
  for (const auto& cls : eight) total += cls.class_size;
  CHECK(total == Int(1) << 7);  // |H| = 2^{n-1}

  for (int n = 3; n <= 11; ++n) {
    Int sum = 0;
    for (const auto& cls : sign_classes(n)) sum += cls.class_size;
    CHECK(sum == Int(1) << (n - 1));
  }
  CHECK_THROWS_AS(sign_classes(2), DomainError);
}

TEST_CASE("characters at sign classes", "[fixedpoints]") {
  const RootSystem d3(Family::D, 3);
  const auto adjoint = freudenthal_table(d3, d3.make_weight({1, 1, 0}));
  const auto classes = sign_classes(6);
  CHECK(char_at_sign_class(adjoint, classes[0]) == 15);  // identity class

  const RootSystem b2(Family::B, 2);
  const auto standard = freudenthal_table(b2, b2.make_weight({1, 0}));
  // one sign pair flipped: trace of diag(-1,-1,1,1,1) is 1
  CHECK(char_at_sign_class(standard, sign_classes(5)[1]) == 1);

  const RootSystem a2(Family::A, 2);
  const auto a_table = freudenthal_table(a2, a2.make_weight({1, 0}));
  CHECK_THROWS_AS(char_at_sign_class(a_table, classes[0]), DomainError);
}

TEST_CASE("fixed subspace dimensions for SO", "[fixedpoints]") {
  CHECK(fixed_subspace_dim_so(5, {1, 1}) == 0);
  CHECK(fixed_subspace_dim_so(5, {2, 0}) == 4);
  CHECK(fixed_subspace_dim_so(8, {1, 1, 1, 1}) == 0);
  CHECK(fixed_subspace_dim_so(8, {1, 1, 1, -1}) == 0);
  CHECK(fixed_subspace_dim_so(7, {1, 0, 0}) == 0);
  CHECK(fixed_subspace_dim_so(3, {1}) == 0);
  CHECK(fixed_subspace_dim_so(3, {2}) == 2);
  CHECK(fixed_subspace_dim_so(4, {1, 1}) == 0);
  CHECK(fixed_subspace_dim_so(4, {1, -1}) == 0);
  CHECK(fixed_subspace_dim_so(4, {2, 2}) == 2);
  CHECK(fixed_subspace_dim_so(4, {2, -2}) == 2);
  CHECK(fixed_subspace_dim_so(4, {2, 1}) == 0);
  CHECK(fixed_subspace_dim_so(6, {1, 1, 1}) == 0);
}

TEST_CASE("diagonal quadric forms realize the generic fixed dimension",
          "[fixedpoints]") {
  for (int n = 3; n <= 9; ++n) {
    const int rank = n % 2 != 0 ? (n - 1) / 2 : n / 2;
    CoordVec two(rank, 0);
    two[0] = 2;
    CHECK(fixed_subspace_dim_so(n, two) == n - 1);
  }
}

TEST_CASE("fixed subspace dimensions for SU", "[fixedpoints]") {
  CHECK(fixed_subspace_dim_su(3, {2, 1}) == 2);
  CHECK(fixed_subspace_dim_su(4, {1, 0, 0}) == 0);
  CHECK(fixed_subspace_dim_su(2, {2}) == 1);
  CHECK(fixed_subspace_dim_su(4, {2, 1, 1}) == 3);
  CHECK(fixed_subspace_dim_su(2, {1}) == 0);
}

TEST_CASE("parity filter", "[fixedpoints]") {
  CHECK(parity_filter(Family::D, 8, {1, 1, 1, 1}));
  CHECK(parity_filter(Family::D, 8, {1, 1, 1, -1}));
  CHECK_FALSE(parity_filter(Family::D, 8, {1, 0, 0, 0}));
  CHECK(parity_filter(Family::A, 4, {2, 1, 1}));
  CHECK_FALSE(parity_filter(Family::A, 3, {1, 0}));
  CHECK(parity_filter(Family::B, 7, {1, 0, 0}));
  CHECK(parity_filter(Family::B, 7, {2, 1, 1}));
}

TEST_CASE("a passing parity filter does not force a fixed vector",
          "[fixedpoints]") {
  // adjoint weights pass the parity test yet carry no fixed vector
  CHECK(parity_filter(Family::D, 8, {1, 1, 0, 0}));
  CHECK(fixed_subspace_dim_so(8, {1, 1, 0, 0}) == 0);
  CHECK(parity_filter(Family::D, 6, {1, 1, 0}));
  CHECK(fixed_subspace_dim_so(6, {1, 1, 0}) == 0);
}

TEST_CASE("fixed dimension is bounded by the full dimension",
          "[fixedpoints]") {
  for (int n : {5, 6}) {
    const RootSystem rs = so_root_system(n);
    for (Coord m1 = 0; m1 <= 2; ++m1) {
      for (Coord m2 = 0; m2 <= m1; ++m2) {
        CoordVec mu(rs.rank(), 0);
        mu[0] = m1;
        mu[1] = m2;
        const Int fixed = fixed_subspace_dim_so(n, mu);
        const Int dim = dim_weight(rs.make_weight(mu));
        CHECK(fixed <= dim);
        CHECK((fixed == dim) == (m1 == 0 && m2 == 0));
      }
    }
  }
}
