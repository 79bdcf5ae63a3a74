#include <doctest.h>

#include <random>

#include "eicat/field.hpp"
#include "eicat/matrix.hpp"

using namespace eicat;

TEST_CASE("field spec") {
  CHECK(FieldSpec(0).invertible(6));
  CHECK_FALSE(FieldSpec(2).invertible(6));
  CHECK(FieldSpec(5).invertible(6));
  CHECK_THROWS_AS(FieldSpec(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(-3), std::invalid_argument);
}

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.mul(3, f.inv(3)) == 1);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.parse("1/2") == 4);
  RationalField q;
  CHECK(q.parse("6/4") == mpq_class(3, 2));
}

TEST_CASE("rref examples") {
  PrimeField f2(2);
  auto id = Matrix<PrimeField>::identity(f2, 2);
  auto e = rref(id);
  CHECK(e.reduced == id);
  CHECK(e.rank == 2);

  Matrix<PrimeField> zero(f2, 3, 3);
  auto z = rref(zero);
  CHECK(z.rank == 0);
  CHECK(z.reduced.is_zero());

  auto m = Matrix<PrimeField>::from_rows(f2, {{1, 1}, {1, 1}}, 2);
  auto r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.reduced == Matrix<PrimeField>::from_rows(f2, {{1, 1}, {0, 0}}, 2));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel basis examples") {
  RationalField q;
  CHECK(kernel_basis(Matrix<RationalField>::identity(q, 3)).empty());
  CHECK(kernel_basis(Matrix<RationalField>(q, 2, 3)).size() == 3);
  auto k = kernel_basis(Matrix<RationalField>::from_rows(q, {{1, 2}}, 2));
  REQUIRE(k.size() == 1);
  // spans (-2, 1)
  CHECK(k[0][0] * 1 == k[0][1] * -2);
  CHECK(k[0][1] != 0);
}

TEST_CASE("solve examples") {
  RationalField q;
  std::vector<mpq_class> b{mpq_class(3), mpq_class(-1, 2)};
  auto x = solve(Matrix<RationalField>::identity(q, 2), std::span<const mpq_class>(b));
  REQUIRE(x);
  CHECK(*x == b);

  std::vector<mpq_class> nz{mpq_class(1), mpq_class(0)};
  CHECK_FALSE(solve(Matrix<RationalField>(q, 2, 2), std::span<const mpq_class>(nz)));

  std::vector<mpq_class> one{mpq_class(1)};
  auto half = solve(Matrix<RationalField>::from_rows(q, {{mpq_class(2)}}, 1), std::span<const mpq_class>(one));
  REQUIRE(half);
  CHECK((*half)[0] == mpq_class(1, 2));
}

TEST_CASE("random matrices over prime fields: rank-nullity, idempotent rref, exact kernels, solve") {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
      Matrix<PrimeField> m(f, rows, cols);
      // sparse-ish entries so rank deficiency is common
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          if (rng() % 3 == 0) m(r, c) = f.from_int(static_cast<std::int64_t>(rng() % p));
      const auto e = rref(m);
      const auto k = kernel_basis(m);
      CHECK(e.rank + k.size() == cols);
      CHECK(rref(e.reduced).reduced == e.reduced);
      for (const auto& v : k) {
        const auto mv = m.apply(std::span<const std::uint32_t>(v));
        CHECK(std::all_of(mv.begin(), mv.end(), [](auto x) { return x == 0; }));
      }
      std::vector<std::uint32_t> x(cols);
      for (auto& xi : x) xi = f.from_int(static_cast<std::int64_t>(rng() % p));
      const auto b = m.apply(std::span<const std::uint32_t>(x));
      const auto s = solve(m, std::span<const std::uint32_t>(b));
      REQUIRE(s);
      CHECK(m.apply(std::span<const std::uint32_t>(*s)) == b);
    }
  }
}

TEST_CASE("rational kernels are exact") {
  RationalField q;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
    Matrix<RationalField> m(q, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = mpq_class(static_cast<long>(rng() % 7) - 3, static_cast<long>(1 + rng() % 4));
        m(r, c).canonicalize();
      }
    const auto k = kernel_basis(m);
    CHECK(rank(m) + k.size() == cols);
    for (const auto& v : k) CHECK(m.apply(std::span<const mpq_class>(v)) == std::vector<mpq_class>(rows, 0));
  }
}

TEST_CASE("row space") {
  PrimeField f(3);
  RowSpace<PrimeField> s(f, 3);
  CHECK(s.insert({1, 2, 0}));
  CHECK(s.insert({0, 1, 1}));
  CHECK_FALSE(s.insert({1, 0, 1}));  // (1,2,0) + (0,1,1) mod 3
  CHECK(s.dim() == 2);
  std::vector<std::uint32_t> v{2, 1, 0};
  CHECK(s.contains(std::span<const std::uint32_t>(v)));
  std::vector<std::uint32_t> w{0, 0, 1};
  CHECK_FALSE(s.contains(std::span<const std::uint32_t>(w)));
  CHECK_THROWS(s.coordinates(std::span<const std::uint32_t>(w)));
}
