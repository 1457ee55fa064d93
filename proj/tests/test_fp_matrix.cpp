#include <doctest.h>

#include <random>

#include "csext/fp_matrix.hpp"
#include "csext/kernels.hpp"
#include "oracles.hpp"

using namespace csext;

namespace {

FpMatrix random_matrix(std::mt19937& rng, Prime p, std::size_t r, std::size_t c, double density = 1.0) {
  FpMatrix a(p, r, c);
  std::uniform_int_distribution<int> d(0, p.value() - 1);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng)) a(i, j) = static_cast<std::uint8_t>(d(rng));
  return a;
}

// Random matrix of prescribed rank as a product of r x k and k x c factors.
FpMatrix low_rank(std::mt19937& rng, Prime p, std::size_t r, std::size_t c, std::size_t k) {
  return random_matrix(rng, p, r, k) * random_matrix(rng, p, k, c);
}

std::vector<std::vector<long long>> to_rows(const FpMatrix& a) {
  std::vector<std::vector<long long>> out(a.rows(), std::vector<long long>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j);
  return out;
}

}  // namespace

TEST_CASE("construction reduces mod p") {
  const FpMatrix a(Prime(5), {{-1, 7}, {10, 4}});
  CHECK(a(0, 0) == 4);
  CHECK(a(0, 1) == 2);
  CHECK(a(1, 0) == 0);
  CHECK_THROWS(FpMatrix(Prime(5), {{1, 2}, {3}}));
}

TEST_CASE("rank examples") {
  const Prime p5(5);
  CHECK(rank(FpMatrix::identity(p5, 6)) == 6);
  CHECK(rank(FpMatrix(p5, 4, 3)) == 0);
  CHECK(rank(FpMatrix(p5, {{1, 2}, {2, 4}})) == 1);
  CHECK(rank(FpMatrix(p5, 0, 3)) == 0);
}

TEST_CASE("nullspace examples") {
  const Prime p5(5);
  CHECK(nullspace(FpMatrix::identity(p5, 4)).cols() == 0);
  const auto z = nullspace(FpMatrix(p5, 3, 3));
  CHECK(z.cols() == 3);
  CHECK(rank(z) == 3);
  const FpMatrix a(p5, {{1, 2}, {2, 4}});
  const auto n = nullspace(a);
  REQUIRE(n.cols() == 1);
  // Proportional to (3, 1): x + 2y = 0.
  CHECK((n(0, 0) + 2 * n(1, 0)) % 5 == 0);
  CHECK(n(1, 0) != 0);
  CHECK((a * n).is_zero());
}

TEST_CASE("solve_in_span examples") {
  const Prime p3(3);
  const FpVector v{2, 1, 0};
  CHECK(solve_in_span(FpMatrix::identity(p3, 3), v) == v);
  CHECK(solve_in_span(FpMatrix::identity(p3, 3), FpVector{0, 0, 0}) == FpVector{0, 0, 0});
  const FpMatrix b(p3, {{1}, {2}});
  CHECK(solve_in_span(b, FpVector{2, 1}) == FpVector{2});
  CHECK_FALSE(solve_in_span(b, FpVector{1, 1}).has_value());
  CHECK_THROWS(SpanSolver(FpMatrix(p3, {{1, 2}, {2, 1}})));  // (1,2) and (2,1) are dependent mod 3
}

TEST_CASE("inverse") {
  const Prime p7(7);
  const FpMatrix a(p7, {{1, 2}, {3, 4}});
  const auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == FpMatrix::identity(p7, 2));
  CHECK_FALSE(inverse(FpMatrix(p7, {{1, 2}, {2, 4}})).has_value());
  for (int x = 1; x < 7; ++x) CHECK(x * inverse_mod(static_cast<std::uint8_t>(x), p7) % 7 == 1);
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(0, 40);
  for (int p : {2, 3, 5, 7}) {
    const Prime pp(p);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t r = dim(rng), c = dim(rng);
      const FpMatrix a = trial % 3 == 0 ? low_rank(rng, pp, r, c, std::min<std::size_t>(dim(rng) % 8, std::min(r, c)))
                                        : random_matrix(rng, pp, r, c, trial % 3 == 1 ? 0.2 : 1.0);
      const std::size_t rk = rank(a);
      const FpMatrix n = nullspace(a);
      REQUIRE(n.rows() == c);
      CHECK(rk + n.cols() == c);
      CHECK(rank(n) == n.cols());
      CHECK((a * n).is_zero());
      if (trial % 10 == 0) CHECK(rk == oracle::rank_mod(to_rows(a), p));
      CHECK(rank(a.transpose()) == rk);
    }
  }
}

TEST_CASE("rref is canonical") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Prime p5(5);
    const FpMatrix a = low_rank(rng, p5, 9, 12, 4);
    const Echelon e = rref(a);
    // Left-multiplying by an invertible matrix leaves the rref unchanged.
    FpMatrix g = random_matrix(rng, p5, 9, 9);
    while (!inverse(g)) g = random_matrix(rng, p5, 9, 9);
    const Echelon f = rref(g * a);
    CHECK(e.reduced == f.reduced);
    CHECK(e.pivot_cols == f.pivot_cols);
  }
}

TEST_CASE("span solver recovers coefficients") {
  std::mt19937 rng(99);
  for (int p : {3, 7, 251}) {
    const Prime pp(p);
    for (int trial = 0; trial < 100; ++trial) {
      FpMatrix b = random_matrix(rng, pp, 20, 6);
      if (rank(b) < 6) continue;
      const SpanSolver solver(b);
      const FpMatrix coeffs = random_matrix(rng, pp, 6, 3);
      const auto got = solver.solve(b * coeffs);
      REQUIRE(got.has_value());
      CHECK(*got == coeffs);
    }
  }
}

TEST_CASE("subspace builder") {
  const Prime p3(3);
  SubspaceBuilder s(p3, 3);
  CHECK(s.add(FpVector{1, 2, 0}));
  CHECK_FALSE(s.add(FpVector{2, 1, 0}));
  CHECK(s.contains(FpVector{0, 0, 0}));
  CHECK_FALSE(s.contains(FpVector{0, 1, 0}));
  CHECK(s.add(FpVector{0, 1, 0}));
  CHECK(s.contains(FpVector{1, 0, 0}));
  CHECK(s.dim() == 2);
  CHECK(rank(s.basis()) == 2);
}

TEST_CASE("results do not depend on the kernel set") {
  std::mt19937 rng(5);
  const auto sets = kernels::available_kernels();
  for (int trial = 0; trial < 50; ++trial) {
    const FpMatrix a = random_matrix(rng, Prime(7), 37, 70, 0.5);
    std::vector<Echelon> results;
    for (const auto* ks : sets) {
      kernels::select(ks->name);
      results.push_back(rref(a));
    }
    for (const auto& r : results) CHECK(r.reduced == results.front().reduced);
  }
  kernels::select(sets.back()->name);
}
