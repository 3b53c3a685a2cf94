#include <catch2/catch_amalgamated.hpp>

#include <flagdim/isospectral.hpp>
#include <flagdim/weyldim.hpp>

#include <vector>

using namespace flagdim;

namespace {

// all ordered compositions of n into at least two parts
std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      if (cur.size() >= 2) out.push_back(cur);
      return;
    }
    for (int part = 1; part <= rest; ++part) {
      cur.push_back(part);
      self(self, rest - part);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

long long stab_closed(Field f, const std::vector<int>& blocks) {
  long long s = 0;
  for (int b : blocks) {
    s += f == Field::Real ? static_cast<long long>(b) * (b - 1) / 2
                          : static_cast<long long>(b) * b;
  }
  if (f == Field::Complex) s -= 1;
  return s;
}

}  // namespace

TEST_CASE("model construction and validation", "[isospectral]") {
  const auto m = build_model(Field::Real, {2, 2}, {Rat(1), Rat(-1)});
  CHECK(m.n == 4);
  CHECK(m.eigenvalues == std::vector<Rat>{Rat(1), Rat(-1)});

  const auto defaulted = build_model(Field::Real, {1, 2});
  REQUIRE(defaulted.eigenvalues.size() == 2);
  CHECK(defaulted.eigenvalues[0] == Rat(4, 3));
  CHECK(defaulted.eigenvalues[1] == Rat(-2, 3));
  Rat weighted = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    weighted += defaulted.eigenvalues[i] * defaulted.blocks[i];
  }
  CHECK(weighted == 0);

  CHECK_THROWS_AS(build_model(Field::Real, {5}), DomainError);
  CHECK_THROWS_AS(build_model(Field::Real, {}), DomainError);
  CHECK_THROWS_AS(build_model(Field::Real, {2, 0}), DomainError);
  CHECK_THROWS_AS(build_model(Field::Real, {2, 2}, {Rat(1), Rat(1)}), DomainError);
  CHECK_THROWS_AS(build_model(Field::Real, {2, 2}, {Rat(1), Rat(-2)}), DomainError);
  CHECK_THROWS_AS(build_model(Field::Real, {2, 2}, {Rat(1)}), DomainError);
}

TEST_CASE("stabilizer dimensions from the kernel route", "[isospectral]") {
  CHECK(stabilizer_dim_exact(build_model(Field::Real, {2, 2}, {Rat(1), Rat(-1)})) == 2);
  CHECK(stabilizer_dim_exact(
            build_model(Field::Real, {2, 2, 1}, {Rat(1), Rat(-1), Rat(0)})) == 2);
  CHECK(stabilizer_dim_exact(
            build_model(Field::Complex, {1, 1, 1}, {Rat(1), Rat(0), Rat(-1)})) == 2);
  CHECK(stabilizer_dim_exact(build_model(Field::Real, {1, 1}, {Rat(1), Rat(-1)})) == 0);
}

TEST_CASE("orbit dimensions and closed forms", "[isospectral]") {
  CHECK(orbit_dim(build_model(Field::Real, {2, 2})) == 4);
  CHECK(orbit_dim(build_model(Field::Real, {2, 2, 1})) == 8);
  CHECK(orbit_dim(build_model(Field::Complex, {1, 1, 1})) == 6);

  // spheres and projective spaces as sanity anchors
  CHECK(orbit_dim(build_model(Field::Real, {1, 4})) == 4);
  CHECK(orbit_dim(build_model(Field::Complex, {1, 3})) == 6);
}

TEST_CASE("kernel route equals closed form across all partitions",
          "[isospectral]") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& blocks : compositions(n)) {
      for (Field f : {Field::Real, Field::Complex}) {
        const auto m = build_model(f, blocks);
        const long long group = f == Field::Real
                                    ? static_cast<long long>(n) * (n - 1) / 2
                                    : static_cast<long long>(n) * n - 1;
        CHECK(stabilizer_dim_exact(m) == stab_closed(f, blocks));
        CHECK(orbit_dim(m) == group - stab_closed(f, blocks));
      }
    }
  }
}

TEST_CASE("Grassmannian orbit dimensions", "[isospectral]") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      CHECK(orbit_dim(build_model(Field::Real, {k, n - k})) ==
            static_cast<long long>(k) * (n - k));
      CHECK(orbit_dim(build_model(Field::Complex, {k, n - k})) ==
            2LL * k * (n - k));
    }
  }
}

TEST_CASE("spectral roundtrip recovers sampled flags", "[isospectral]") {
  const auto real_rep = flag_roundtrip(build_model(Field::Real, {2, 2}), 100, 42);
  CHECK(real_rep.passed);
  CHECK(real_rep.max_residual < 1e-8);
  CHECK(real_rep.max_gram_residual < 1e-10);
  CHECK(real_rep.max_eigenvalue_dev < 1e-10);
  CHECK(real_rep.samples == 100);
  CHECK(real_rep.seed == 42);

  const auto cplx_rep =
      flag_roundtrip(build_model(Field::Complex, {1, 1, 1}), 100, 7);
  CHECK(cplx_rep.passed);
  CHECK(cplx_rep.max_residual < 1e-8);

  const auto tall = flag_roundtrip(build_model(Field::Real, {1, 2, 3}), 50, 3);
  CHECK(tall.passed);

  CHECK_THROWS_AS(flag_roundtrip(build_model(Field::Real, {2, 2}), 0, 1),
                  DomainError);
}

TEST_CASE("roundtrip reports are deterministic for a fixed seed",
          "[isospectral]") {
  const auto m = build_model(Field::Complex, {2, 1});
  const auto a = flag_roundtrip(m, 25, 2026);
  const auto b = flag_roundtrip(m, 25, 2026);
  CHECK(a.max_residual == b.max_residual);
  CHECK(a.max_gram_residual == b.max_gram_residual);
  CHECK(a.max_eigenvalue_dev == b.max_eigenvalue_dev);
  CHECK(a.worst_sample == b.worst_sample);
}

TEST_CASE("matrix space dimensions anchor the embedding bound",
          "[isospectral]") {
  // the seed matrix lives in the trace-zero symmetric/Hermitian space, whose
  // dimension is the classification bound
  CHECK(dim_isospectral(Field::Real, 4) == 9);
  CHECK(dim_isospectral(Field::Complex, 4) == 15);
}
