#include <doctest.h>

#include "mvop/dwsolve.hpp"
#include "support/oracles.hpp"

using namespace mvop;

TEST_SUITE("dwsolve") {
  TEST_CASE("unknown layout") {
    for (int s = 0; s <= 6; ++s) {
      const UnknownLayout layout(s);
      CHECK(layout.size() == static_cast<std::size_t>(2 * (s + 1) * (s + 2)));
      for (std::size_t k = 0; k < layout.size(); ++k) {
        const auto& v = layout.variable(k);
        CHECK(layout.index(v.i, v.row, v.col, v.power) == k);
      }
    }
    const UnknownLayout layout(3);
    CHECK_THROWS_AS(layout.index(1, 0, 0, 2), std::out_of_range);
    oracle::Random rng(61);
    for (int k = 0; k < 10; ++k) {
      const DiffOp D = rng.op(3);
      CHECK(layout.assemble(layout.flatten(D)) == D);
    }
    CHECK_THROWS_AS(UnknownLayout(1).flatten(rng.op(2)), std::invalid_argument);
  }

  TEST_CASE("order zero and order one") {
    const Params params(1, 3);
    const OpSpace s0 = solve_order(0, params);
    CHECK(s0.dimension == 1);
    CHECK(s0.basis.front() == DiffOp::identity());
    const OpSpace s1 = solve_order(1, params);
    CHECK(s1.dimension == 1);
    CHECK(s1.new_dimension == 0);
  }

  TEST_CASE("order two at several parameters") {
    for (const Params& params : {Params(1, 3), Params(1, 4), Params(2, 5), Params(Rational(3, 2), Rational(7, 2)),
                                 Params(Rational(5, 2), 6), Params(Rational(2, 3), Rational(11, 5))}) {
      const OpSpace s2 = solve_order(2, params);
      CHECK(s2.dimension == 5);
      CHECK(s2.new_dimension == 4);
      CHECK(s2.stabilized);
      const NamedBasis b = named_basis(params);
      CHECK(spans_equal(s2, {b.I, b.D1, b.D2, b.D3, b.D4}));
      CHECK_FALSE(spans_equal(s2, {b.I, b.D1, b.D2, b.D3}));
      for (const DiffOp& D : s2.basis) CHECK(membership_check(D, params, s2.w_verify + 4));
    }
  }

  TEST_CASE("reducible point") {
    const OpSpace s2 = solve_order(2, Params(1, 2));
    CHECK(s2.dimension > 5);
  }

  TEST_CASE("nullspace is stable under more constraints") {
    const Params params(2, 5);
    for (int s = 0; s <= 4; ++s) {
      SolveOptions more;
      more.w_constraint = 2 * s + 8;
      more.w_verify = 3 * s + 10;
      CHECK(solve_order(s, params).basis == solve_order(s, params, more).basis);
    }
  }

  TEST_CASE("too few constraints trigger enlargement") {
    SolveOptions few;
    few.w_constraint = 1;
    few.w_verify = 10;
    const OpSpace s = solve_order(2, Params(1, 3), few);
    CHECK(s.stabilized);
    CHECK(s.enlargements > 0);
    CHECK(s.dimension == 5);
    SolveOptions bad;
    bad.w_constraint = 8;
    bad.w_verify = 8;
    CHECK_THROWS_AS(solve_order(2, Params(1, 3), bad), std::invalid_argument);
  }

  TEST_CASE("membership") {
    const Params params(1, 3);
    const NamedBasis b = named_basis(params);
    CHECK(membership_check(b.D1, params, 10));
    CHECK_FALSE(membership_check(DiffOp({MatPoly{}, scalar_matpoly(Poly::x())}), params, 10));
    for (const Params& p : {Params(1, 4), Params(Rational(5, 2), 6)}) CHECK(membership_check(hypergeometric_operator(p), p, 10));
    CHECK_FALSE(membership_check(DiffOp({scalar_matpoly(Poly::x())}), params, 3));
  }

  TEST_CASE("filtration report") {
    const FiltrationReport r = filtration_report(5, Params(1, 3));
    CHECK(r.new_dims() == std::vector<int>{1, 0, 4, 0, 4, 0});
    CHECK(r.passed());
    CHECK(all_passed(r.higher_order));
    CHECK(r.order4.size() == 9);
    for (const auto& ex : r.order4) CHECK(ex.solvable);
    for (const auto& e : r.evidence) CHECK(e.consistent);
    CHECK_THROWS_AS(filtration_report(7, Params(1, 3)), std::invalid_argument);
    const FiltrationReport red = filtration_report(2, Params(1, 2));
    CHECK(red.passed());
    CHECK(red.findings.size() == 1);
    CHECK(generators(Params(1, 3)).size() == generator_names().size());
  }
}
