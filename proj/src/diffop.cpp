#include "mvop/diffop.hpp"

#include <sstream>

namespace mvop {

namespace {

Poly poly(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }

DiffOp op2(MatPoly F0, MatPoly F1, MatPoly F2) { return DiffOp({std::move(F0), std::move(F1), std::move(F2)}); }

}  // namespace

DiffOp hypergeometric_operator(const Params& params) {
  const Rational& p = params.p();
  const Rational& n = params.n();
  MatPoly F2 = scalar_matpoly(poly({1, 0, -1}));
  MatPoly F1(poly({0, Rational(-(n + 2))}), poly({-2}), poly({-2}), poly({0, Rational(-(n + 2))}));
  MatPoly F0(ConstMat::diagonal(-p, Rational(p - n)));
  return op2(std::move(F0), std::move(F1), std::move(F2));
}

ConstMat hypergeometric_eigenvalue(int w, const Params& params) {
  const Rational& p = params.p();
  const Rational& n = params.n();
  const Rational base = -Rational(w) * (w + n + 1);
  return ConstMat::diagonal(base - p, base - n + p);
}

std::vector<NamedOperator> NamedBasis::all() const {
  return {{"I", I, false},   {"D1", D1, false}, {"D2", D2, false}, {"D3", D3, false},
          {"D4", D4, false}, {"E3", E3, false}, {"E4", E4, true},   {"D", D_thm, false}};
}

NamedBasis named_basis(const Params& params) {
  const Rational& p = params.p();
  const Rational& n = params.n();
  const Rational q = n - p;
  NamedBasis b;
  b.I = DiffOp::identity();
  b.D1 = op2(MatPoly(ConstMat::diagonal(p * (q + 1), 0)),
             MatPoly(poly({0, Rational(n + 2)}), poly({Rational(q + 2)}), poly({-p}), Poly{}),
             MatPoly(poly({0, 0, 1}), poly({0, 1}), poly({0, -1}), poly({-1})));
  b.D2 = op2(MatPoly(ConstMat::diagonal(0, (p + 1) * q)),
             MatPoly(Poly{}, poly({-q}), poly({Rational(p + 2)}), poly({0, Rational(n + 2)})),
             MatPoly(poly({-1}), poly({0, -1}), poly({0, 1}), poly({0, 0, 1})));
  b.D3 = op2(MatPoly(ConstMat(0, 0, p * (p + 1), 0)),
             MatPoly(poly({-p}), Poly{}, poly({0, Rational(2 * (p + 1))}), poly({Rational(p + 2)})),
             MatPoly(poly({0, -1}), poly({-1}), poly({0, 0, 1}), poly({0, 1})));
  b.D4 = op2(MatPoly(ConstMat(0, q * (q + 1), 0, 0)),
             MatPoly(poly({Rational(q + 2)}), poly({0, Rational(2 * (q + 1))}), Poly{}, poly({-q})),
             MatPoly(poly({0, 1}), poly({0, 0, 1}), poly({-1}), poly({0, -1})));
  b.E3 = q * b.D3 + p * b.D4;
  b.E4 = q * b.D3 - p * b.D4;
  b.D_thm = hypergeometric_operator(params);
  b.d_thm_consistent = b.D_thm == -b.D1 - b.D2 + p * q * b.I;

  const DiffOp e3_display = op2(
      MatPoly(ConstMat(0, p * q * (q + 1), p * (p + 1) * q, 0)),
      MatPoly(poly({Rational(2 * p)}), poly({0, Rational(2 * p * (q + 1))}), poly({0, Rational(2 * (p + 1) * q)}),
              poly({Rational(2 * q)})),
      MatPoly(poly({0, Rational(-(n - 2 * p))}), poly({-q, 0, p}), poly({-p, 0, q}), poly({0, Rational(n - 2 * p)})));
  const DiffOp e4_display = op2(
      MatPoly(ConstMat(0, -p * q * (q + 1), p * (p + 1) * q, 0)),
      MatPoly(poly({Rational(-2 * p * (q + 1))}), poly({0, Rational(-2 * p * (q + 1))}),
              poly({0, Rational(2 * (p + 1) * q)}), poly({Rational(2 * q * (p + 1))})),
      MatPoly(poly({0, -n}), poly({-q, 0, -p}), poly({p, 0, q}), poly({0, n})));
  b.e3_matches_display = b.E3 == e3_display;
  b.e4_matches_display = b.E4 == e4_display;
  return b;
}

DiffOp order_two_family(const Params& params, const Rational& a11, const Rational& a12, const Rational& a21,
                        const Rational& a22, const Rational& c, bool printed_sign) {
  const Rational& p = params.p();
  const Rational& n = params.n();
  const Rational q = n - p;
  const Rational s = printed_sign ? 1 : -1;
  MatPoly F2 = MatPoly::from_coefficients({ConstMat(s * a22, s * a21, s * a12, s * a11),
                                           ConstMat(a12 - a21, a11 - a22, a22 - a11, a21 - a12),
                                           ConstMat(a11, a12, a21, a22)});
  MatPoly F1 = MatPoly::from_coefficients(
      {ConstMat(-p * a21 + (q + 2) * a12, (q + 2) * a11 - q * a22, -p * a11 + (p + 2) * a22, (p + 2) * a21 - q * a12),
       ConstMat((n + 2) * a11, 2 * (q + 1) * a12, 2 * (p + 1) * a21, (n + 2) * a22)});
  MatPoly F0(ConstMat(p * (q + 1) * a11 + c, q * (q + 1) * a12, p * (p + 1) * a21, (p + 1) * q * a22 + c));
  return op2(std::move(F0), std::move(F1), std::move(F2));
}

ConstMat order_two_eigenvalue(const Params& params, int w, const Rational& a11, const Rational& a12,
                              const Rational& a21, const Rational& a22, const Rational& c) {
  const Rational& p = params.p();
  const Rational q = params.q();
  return {(w + p) * (w + q + 1) * a11 + c, (w + q) * (w + q + 1) * a12, (w + p) * (w + p + 1) * a21,
          (w + q) * (w + p + 1) * a22 + c};
}

bool eigen_equation_holds(const DiffOp& D, const FamilyCache& family, int w_max) {
  if (!D.degree_bounded()) return false;
  if (w_max > family.w_max()) throw std::invalid_argument("eigen_equation_holds: family cache too short");
  for (int w = 0; w <= w_max; ++w) {
    const MatPoly& Q = family[w].Q;
    if (apply(Q, D) != eigenvalue_of(D, w) * Q) return false;
  }
  return true;
}

std::vector<Check> eigen_equation_checks(const FamilyCache& family, int w_max) {
  if (w_max > family.w_max()) throw std::invalid_argument("eigen_equation_checks: family cache too short");
  const DiffOp D = hypergeometric_operator(family.params());
  std::vector<int> bad_eigen;
  std::vector<int> bad_formula;
  for (int w = 0; w <= w_max; ++w) {
    const MatPoly& P = family[w].P;
    const ConstMat lambda = hypergeometric_eigenvalue(w, family.params());
    if (apply(P, D) != lambda * P) bad_eigen.push_back(w);
    if (eigenvalue_of(D, w) != lambda) bad_formula.push_back(w);
  }
  auto detail = [](const std::vector<int>& bad) {
    std::ostringstream os;
    for (int w : bad) os << (os.tellp() > 0 ? " " : "fails at w = ") << w;
    return os.str();
  };
  return {{"eigen-equation P_w D = Lambda_w P_w", bad_eigen.empty(), detail(bad_eigen)},
          {"Lambda_w from leading coefficients", bad_formula.empty(), detail(bad_formula)}};
}

DiffOp adjoint(const DiffOp& D, const FamilyCache& family) {
  constexpr int kMembershipW = 4;
  constexpr int kPostconditionW = 6;
  if (family.w_max() < kPostconditionW) throw std::invalid_argument("adjoint: family cache must reach w = 6");
  if (D.order() > 2) throw std::invalid_argument("adjoint: order must be <= 2");
  if (!eigen_equation_holds(D, family, kMembershipW)) throw std::invalid_argument("adjoint: operator is not in D(W)");

  auto conjugated_eigenvalue = [&](int w) {
    const ConstMat& g = family[w].gram;
    return g * eigenvalue_of(D, w).transpose() * *g.inverse();
  };

  std::vector<MatPoly> G;
  for (int k = 0; k <= std::max(D.order(), 0); ++k) {
    const MatPoly& Q = family[k].Q;
    MatPoly rhs = conjugated_eigenvalue(k) * Q;
    for (int i = 0; i < k; ++i) rhs -= derivative(Q, i) * G[static_cast<std::size_t>(i)];
    rhs *= Rational(1) / Rational(factorial(k));
    G.push_back(std::move(rhs));
  }
  DiffOp star(std::move(G));
  for (int w = 0; w <= kPostconditionW; ++w) {
    if (eigenvalue_of(star, w) != conjugated_eigenvalue(w)) {
      throw std::logic_error("adjoint: eigenvalue postcondition fails at w = " + std::to_string(w));
    }
  }
  return star;
}

RelationReport relation_suite(const Params& params) {
  const NamedBasis b = named_basis(params);
  const Rational shift = params.n() - 2 * params.p();
  const DiffOp zero;
  RelationReport r;
  auto rel = [&](std::string name, const DiffOp& lhs, const DiffOp& rhs) {
    r.relations.push_back({std::move(name), lhs == rhs, ""});
  };
  rel("D1 D2 = 0", compose(b.D1, b.D2), zero);
  rel("D2 D1 = 0", compose(b.D2, b.D1), zero);
  rel("D1 D3 = 0", compose(b.D1, b.D3), zero);
  rel("D4 D1 = 0", compose(b.D4, b.D1), zero);
  rel("D2 D4 = 0", compose(b.D2, b.D4), zero);
  rel("D3 D2 = 0", compose(b.D3, b.D2), zero);
  rel("D3^2 = 0", compose(b.D3, b.D3), zero);
  rel("D4^2 = 0", compose(b.D4, b.D4), zero);
  rel("D3 D1 = D2 D3 - (n-2p) D3", compose(b.D3, b.D1), compose(b.D2, b.D3) - shift * b.D3);
  rel("D1 D4 = D4 D2 - (n-2p) D4", compose(b.D1, b.D4), compose(b.D4, b.D2) - shift * b.D4);
  rel("D3 D4 = D2^2 - (n-2p) D2", compose(b.D3, b.D4), compose(b.D2, b.D2) - shift * b.D2);
  rel("D4 D3 = D1^2 + (n-2p) D1", compose(b.D4, b.D3), compose(b.D1, b.D1) + shift * b.D1);
  r.noncommutative = compose(b.D1, b.D3) != compose(b.D3, b.D1);
  return r;
}

}  // namespace mvop
