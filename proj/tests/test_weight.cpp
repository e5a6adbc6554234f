#include <doctest.h>

#include <cmath>

#include "mvop/families.hpp"
#include "mvop/weight.hpp"
#include "support/oracles.hpp"

using namespace mvop;

TEST_SUITE("weight") {
  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(Params(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(Params(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Params(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(Params(-1, 3), std::invalid_argument);
    CHECK(Params(1, 2).reducible());
    CHECK_FALSE(Params(1, 3).reducible());
  }

  TEST_CASE("weight invariants") {
    for (const auto& [p, n] : std::vector<std::pair<Rational, Rational>>{
             {1, 3}, {1, 4}, {2, 5}, {Rational(3, 2), Rational(7, 2)}, {Rational(5, 2), 6}, {1, 2}}) {
      const Weight W(Params(p, n));
      CHECK(W.check_invariants());
      CHECK(W.det_R() == W.det_R_closed_form());
      CHECK(W.alpha() == n / 2 - 1);
    }
  }

  TEST_CASE("reduced moments") {
    CHECK(reduced_moment(0, 3) == 1);
    CHECK(reduced_moment(1, 3) == 0);
    CHECK(reduced_moment(2, 3) == Rational(1, 4));
    CHECK(reduced_moment(2, Rational(7, 2)) == 1 / (Rational(7, 2) + 1));
    CHECK_THROWS_AS(reduced_moment(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(reduced_moment(2, 0), std::invalid_argument);
    for (const Rational n : {Rational(3), Rational(4), Rational(7, 2), Rational(6), Rational(2)}) {
      const auto h = reduced_moments(16, n);
      for (int k = 0; k <= 16; ++k) {
        CHECK(h[static_cast<std::size_t>(k)] == oracle::moment(k, n));
        CHECK(h[static_cast<std::size_t>(k)] == reduced_moment(k, n));
      }
    }
    for (int k = 0; k <= 8; ++k) {
      CHECK(std::abs(reduced_moment(k, 3).get_d() - oracle::moment_numeric(k, 3.0)) < 1e-12);
      CHECK(std::abs(reduced_moment(k, 5).get_d() - oracle::moment_numeric(k, 5.0)) < 1e-12);
    }
  }

  TEST_CASE("inner product against oracles") {
    const Params params(1, 3);
    const Weight W(params);
    const MatPoly I = MatPoly::identity();
    const Rational n = 3, p = 1;
    CHECK(inner_product_reduced(I, I, W) == ConstMat::diagonal(n * (n - p + 1) / (n + 1), n * (p + 1) / (n + 1)));
    CHECK(inner_product_reduced(build_P(0, params), build_P(1, params), W).is_zero());

    oracle::Random rng(17);
    for (int k = 0; k < 10; ++k) {
      const MatPoly a = rng.matpoly(3), b = rng.matpoly(2);
      CHECK(inner_product_reduced(a, b, W) == oracle::inner_product(a, b, params));
    }
    const MatPoly a = rng.matpoly(2), b = rng.matpoly(3);
    const auto num = oracle::inner_product_numeric(a, b, 1.0, 3.0);
    const double mass = std::acos(-1.0) / 2;
    const ConstMat exact = inner_product_reduced(a, b, W);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) CHECK(std::abs(exact(i, j).get_d() * mass - num[static_cast<std::size_t>(2 * i + j)]) < 1e-9);
    }
  }

  TEST_CASE("inner product is positive definite and hermitian") {
    oracle::Random rng(23);
    for (const auto& [p, n] : std::vector<std::pair<Rational, Rational>>{{1, 3}, {Rational(3, 2), Rational(7, 2)}, {1, 2}}) {
      const Weight W{Params(p, n)};
      for (int k = 0; k < 15; ++k) {
        const MatPoly a = rng.matpoly(4), b = rng.matpoly(3), c = rng.matpoly(2);
        const ConstMat g = inner_product_reduced(a, a, W);
        CHECK(g == g.transpose());
        CHECK(g(0, 0) > 0);
        CHECK(g.det() > 0);
        CHECK(inner_product_reduced(a, b, W).transpose() == inner_product_reduced(b, a, W));
        const ConstMat s(rng.rational(), rng.rational(), rng.rational(), rng.rational());
        CHECK(inner_product_reduced(s * a + c, b, W) == s * inner_product_reduced(a, b, W) + inner_product_reduced(c, b, W));
        CHECK(inner_product_reduced(a, s * b, W) == inner_product_reduced(a, b, W) * s.transpose());
      }
    }
  }

  TEST_CASE("reducibility") {
    const auto r = reduction_check(Weight(Params(1, 2)));
    CHECK(r.reducible);
    CHECK(r.witness_verified);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == ConstMat(1, 1, -1, 1));
    const Poly one_minus_x(std::vector<Rational>{1, -1});
    CHECK(*r.factor1 == Rational(2) * one_minus_x * one_minus_x);
    CHECK_FALSE(reduction_check(Weight(Params(1, 3))).reducible);
    CHECK(reduction_check(Weight(Params(Rational(3, 2), 3))).reducible);
  }

  TEST_CASE("conjugation symmetry") {
    CHECK(conjugation_check(1, 3));
    CHECK(conjugation_check(2, 4));
    CHECK(conjugation_check(Rational(1, 2), Rational(5, 2)));
  }
}
