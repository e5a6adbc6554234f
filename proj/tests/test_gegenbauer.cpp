#include <doctest.h>

#include "mvop/gegenbauer.hpp"
#include "support/oracles.hpp"

using namespace mvop;

TEST_SUITE("gegenbauer") {
  TEST_CASE("small cases") {
    CHECK(gegenbauer(-1, Rational(5, 2)).is_zero());
    CHECK(gegenbauer(0, Rational(7, 3)) == Poly::constant(1));
    CHECK(gegenbauer(2, 1) == Poly(std::vector<Rational>{-1, 0, 4}));
    CHECK_THROWS_AS(gegenbauer(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(gegenbauer(2, Rational(-1, 2)), std::invalid_argument);
  }

  TEST_CASE("recurrence agrees with the hypergeometric series") {
    for (const Rational lambda : {Rational(1, 2), Rational(1), Rational(2), Rational(5, 2), Rational(9, 4)}) {
      const auto seq = gegenbauer_sequence(12, lambda);
      for (int m = 0; m <= 12; ++m) {
        CAPTURE(m);
        CHECK(seq[static_cast<std::size_t>(m)] == oracle::gegenbauer(m, lambda));
      }
    }
  }

  TEST_CASE("identity suite") {
    const auto r = gegenbauer_identity_suite(6, Rational(5, 2));
    CHECK(r.passed());
    CHECK(r.identities.size() == 5);
    CHECK(gegenbauer_identity_suite(0, 2).passed());
    CHECK(gegenbauer_identity_suite(4, 3).passed());
    CHECK(gegenbauer_identity_suite(8, Rational(7, 5)).passed());
    CHECK_THROWS_AS(gegenbauer_identity_suite(4, 1), std::invalid_argument);
  }

  TEST_CASE("contiguous relation by direct expansion") {
    const Rational l = 3;
    for (int m = 0; m <= 4; ++m) {
      const Poly lhs = (m + l) * oracle::gegenbauer(m + 1, l - 1);
      Poly rhs = oracle::gegenbauer(m + 1, l);
      if (m >= 1) rhs -= oracle::gegenbauer(m - 1, l);
      CHECK(lhs == (l - 1) * rhs);
    }
  }
}
