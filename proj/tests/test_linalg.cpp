#include <doctest.h>

#include "mvop/exact_linalg.hpp"
#include "support/oracles.hpp"

using namespace mvop;

namespace {

RowMatrix random_matrix(oracle::Random& rng, std::size_t rows, std::size_t cols, int zero_every) {
  RowMatrix m(rows, RowVector(cols));
  std::uniform_int_distribution<int> coin(0, zero_every);
  for (auto& r : m) {
    for (auto& v : r) v = coin(rng.gen) == 0 ? Rational(0) : rng.rational();
  }
  return m;
}

Rational dot(const RowVector& a, const RowVector& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("small echelon form") {
    const RowMatrix A{{2, 4, 1}, {1, 2, 0}, {3, 6, 1}};
    const Echelon e = row_reduce(A, 3);
    CHECK(e.rank() == 2);
    CHECK(e.pivots == std::vector<std::size_t>{0, 2});
    CHECK(e.rows[0] == RowVector{1, 2, 0});
    CHECK(e.rows[1] == RowVector{0, 0, 1});
    const RowMatrix N = nullspace(A, 3);
    REQUIRE(N.size() == 1);
    CHECK(N[0] == RowVector{1, Rational(-1, 2), 0});
  }

  TEST_CASE("empty and zero matrices") {
    CHECK(row_reduce({}, 3).rank() == 0);
    CHECK(nullspace({}, 2).size() == 2);
    CHECK(rank({{0, 0}, {0, 0}}, 2) == 0);
    CHECK_THROWS_AS(row_reduce({{1, 2}, {1}}, 2), std::invalid_argument);
  }

  TEST_CASE("agrees with textbook Gauss-Jordan") {
    oracle::Random rng(53);
    for (int k = 0; k < 30; ++k) {
      const std::size_t rows = 1 + static_cast<std::size_t>(k % 7), cols = 1 + static_cast<std::size_t>((k * 3) % 8);
      const RowMatrix A = random_matrix(rng, rows, cols, k % 3);
      CHECK(row_reduce(A, cols).rows == oracle::rref(A, cols));
    }
  }

  TEST_CASE("nullspace vectors annihilate the rows") {
    oracle::Random rng(59);
    for (int k = 0; k < 20; ++k) {
      RowMatrix A = random_matrix(rng, 5, 9, 1);
      A.push_back(A[0]);
      const RowMatrix N = nullspace(A, 9);
      CHECK(N.size() + rank(A, 9) == 9);
      for (const auto& v : N) {
        for (const auto& r : A) CHECK(dot(r, v) == 0);
      }
      CHECK(oracle::rref(N, 9) == N);
    }
  }

  TEST_CASE("solve_combination") {
    const RowMatrix cols{{1, 0, 1}, {0, 1, 1}};
    const auto x = solve_combination(cols, {2, 3, 5});
    REQUIRE(x.has_value());
    CHECK(*x == RowVector{2, 3});
    CHECK_FALSE(solve_combination(cols, {1, 1, 1}).has_value());
  }

  TEST_CASE("bit guard") {
    RowMatrix A;
    Integer big = 1;
    for (int k = 0; k < 6; ++k) {
      big *= 1000003;
      A.push_back({Rational(big), Rational(big + 1), Rational(k + 1)});
    }
    CHECK_THROWS_AS(row_reduce(A, 3, 16), std::overflow_error);
    CHECK_NOTHROW(row_reduce(A, 3));
  }
}
