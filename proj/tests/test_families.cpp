#include <doctest.h>

#include "mvop/diffop.hpp"
#include "mvop/families.hpp"
#include "support/oracles.hpp"

using namespace mvop;

namespace {

const std::vector<Params>& grid() {
  static const std::vector<Params> g{Params(1, 3), Params(1, 4), Params(2, 5), Params(Rational(3, 2), Rational(7, 2)),
                                     Params(Rational(5, 2), 6), Params(1, 2)};
  return g;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("P_0 and Q_0") {
    for (const Params& params : grid()) {
      CHECK(build_P(0, params) == MatPoly(ConstMat::scalar(1 / (params.n() + 1))));
      CHECK(build_Q(0, params) == MatPoly::identity());
    }
    CHECK_THROWS_AS(build_P(-1, Params(1, 3)), std::invalid_argument);
  }

  TEST_CASE("printed Q_1, Q_3 and Q_2 up to its (2,2) constant") {
    for (const Params& params : grid()) {
      const Rational& p = params.p();
      const Rational& n = params.n();
      const Rational q = n - p;
      CHECK(build_Q(1, params) == MatPoly(Poly::x(), Poly::constant(1 / (p + 1)), Poly::constant(1 / (q + 1)), Poly::x()));
      CHECK(build_Q(1, params) == displayed_monic(1, params));
      CHECK(build_Q(3, params) == displayed_monic(3, params));
      const MatPoly Q2 = build_Q(2, params);
      const MatPoly shown = displayed_monic(2, params);
      CHECK(Q2(0, 0) == shown(0, 0));
      CHECK(Q2(0, 1) == shown(0, 1));
      CHECK(Q2(1, 0) == shown(1, 0));
      CHECK(Q2(1, 1).coeff(0) == -q / ((n + 3) * (q + 2)));
      CHECK(shown(1, 1).coeff(0) == -p / ((n + 3) * (q + 2)));
    }
  }

  TEST_CASE("Gram-Schmidt oracle reproduces Q_w") {
    for (const Params& params : {Params(1, 3), Params(Rational(3, 2), Rational(7, 2)), Params(2, 5)}) {
      const auto gs = oracle::gram_schmidt_monic(6, params);
      for (int w = 0; w <= 6; ++w) {
        CAPTURE(w);
        CHECK(gs[static_cast<std::size_t>(w)] == build_Q(w, params));
      }
    }
  }

  TEST_CASE("scales") {
    const Params params(1, 3);
    CHECK(leading_scale(0, params) == Rational(1, 4));
    CHECK(leading_scale(1, params) == 1);
    CHECK(leading_scale(2, params) == 3);
    for (int w = 0; w <= 8; ++w) CHECK(monic_scale(w, params) * leading_scale(w, params) == 1);
  }

  TEST_CASE("family checks pass on the grid") {
    for (const Params& params : grid()) {
      const FamilyCache family(params, 11);
      const FamilyChecks fc = family_checks(family, 10);
      for (const Check& c : fc.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
      }
      CHECK_THROWS_AS(family_checks(family, 11), std::invalid_argument);
      bool erratum = false;
      for (const Finding& f : fc.findings) erratum = erratum || f.topic.rfind("erratum", 0) == 0;
      CHECK(erratum == (params.p() != params.n() - params.p()));
    }
  }

  TEST_CASE("recursion coefficients") {
    const Params params(Rational(5, 2), 6);
    const FamilyCache family(params, 9);
    for (int w = 0; w <= 8; ++w) {
      const RecursionCoeffs rc = recursion_coeffs(w, params);
      MatPoly lhs = scalar_matpoly(Poly::x()) * family[w].P;
      MatPoly rhs = rc.B * family[w].P + rc.C * family[w + 1].P;
      MatPoly lhs_m = scalar_matpoly(Poly::x()) * family[w].Q;
      MatPoly rhs_m = rc.B_monic * family[w].Q + family[w + 1].Q;
      if (w > 0) {
        rhs += rc.A * family[w - 1].P;
        rhs_m += rc.A_monic * family[w - 1].Q;
        CHECK(rc.A_monic == family[w].gram * *family[w - 1].gram.inverse());
      } else {
        CHECK(rc.A_monic.is_zero());
      }
      CHECK(lhs == rhs);
      CHECK(lhs_m == rhs_m);
    }
  }

  TEST_CASE("norm remark") {
    const Params params(1, 3);
    const NormReport r = norm_report(8, params);
    CHECK(r.all_diagonal());
    CHECK(r.all_ratios());
    CHECK(r.all_monic_identities());
    CHECK_FALSE(r.all_profiles());
    const FamilyCache family(params, 8);
    const Weight W(params);
    for (int w = 1; w <= 8; ++w) {
      CHECK(remark_norm_rational_part(w, params) == inner_product_reduced(family[w].P, family[w].P, W));
    }
    CHECK_THROWS_AS(norm_report(0, params), std::invalid_argument);
  }

  TEST_CASE("eigen-equation for the hypergeometric operator") {
    for (const Params& params : grid()) {
      const FamilyCache family(params, 12);
      for (const Check& c : eigen_equation_checks(family, 12)) {
        CAPTURE(c.name);
        CHECK(c.passed);
      }
      CHECK(apply(family[0].P, hypergeometric_operator(params)) ==
            ConstMat::diagonal(-params.p(), -params.q()) * family[0].P);
    }
  }
}
