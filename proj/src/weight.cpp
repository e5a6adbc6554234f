#include "mvop/weight.hpp"

#include <stdexcept>

namespace mvop {

Params::Params(Rational p, Rational n) : p_(std::move(p)), n_(std::move(n)) {
  if (!(sgn(p_) > 0 && p_ < n_)) {
    throw std::invalid_argument("parameters must satisfy 0 < p < n (got p=" + to_string(p_) +
                                ", n=" + to_string(n_) + ")");
  }
}

namespace {

MatPoly weight_polynomial_part(const Rational& p, const Rational& n) {
  return {Poly({Rational(n - p), Rational(0), p}), Poly({Rational(0), Rational(-n)}),
          Poly({Rational(0), Rational(-n)}), Poly({p, Rational(0), Rational(n - p)})};
}

}  // namespace

Weight::Weight(Params params)
    : params_(std::move(params)),
      form_{Rational(params_.n() / 2 - 1), weight_polynomial_part(params_.p(), params_.n())} {}

Poly Weight::det_R() const {
  const MatPoly& r = form_.R;
  return r(0, 0) * r(1, 1) - r(0, 1) * r(1, 0);
}

Poly Weight::det_R_closed_form() const {
  const Rational& p = params_.p();
  const Rational& n = params_.n();
  Rational pq = p * (n - p);
  return Poly({pq, Rational(0), Rational(p * p + (n - p) * (n - p) - n * n), Rational(0), pq});
}

bool Weight::check_invariants() const {
  if (form_.R != form_.R.transpose()) return false;
  const Poly det = det_R();
  if (det != det_R_closed_form()) return false;
  for (long num = -9; num <= 9; ++num) {
    if (sgn(det(make_rational(num, 10))) <= 0) return false;
  }
  return true;
}

std::vector<Rational> reduced_moments(int k_max, const Rational& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("reduced_moment: n must be positive");
  if (k_max < 0) return {};
  std::vector<Rational> h(static_cast<std::size_t>(k_max) + 1, Rational(0));
  h[0] = 1;
  for (int k = 2; k <= k_max; k += 2) {
    const int m = k / 2;
    h[static_cast<std::size_t>(k)] = h[static_cast<std::size_t>(k - 2)] * (2 * m - 1) / (n + 2 * m - 1);
  }
  return h;
}

Rational reduced_moment(int k, const Rational& n) {
  if (k < 0) throw std::invalid_argument("reduced_moment: negative power");
  return reduced_moments(k, n).back();
}

ConstMat inner_product_reduced(const MatPoly& P, const MatPoly& Q, const Weight& W) {
  const MatPoly integrand = P * W.R() * Q.transpose();
  const int deg = integrand.degree();
  if (deg < 0) return {};
  const auto h = reduced_moments(deg, W.params().n());
  ConstMat out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Rational acc = 0;
      const auto coeffs = integrand(r, c).coefficients();
      for (std::size_t k = 0; k < coeffs.size(); k += 2) acc += coeffs[k] * h[k];
      out(r, c) = acc;
    }
  }
  return out;
}

ReductionResult reduction_check(const Weight& W) {
  ReductionResult result;
  if (!W.params().reducible()) return result;
  result.reducible = true;
  const ConstMat M(1, 1, -1, 1);
  const Rational two_p = 2 * W.params().p();
  result.witness = M;
  result.factor1 = Poly({two_p, Rational(-2 * two_p), two_p});  // 2p (1-x)^2
  result.factor2 = Poly({two_p, Rational(2 * two_p), two_p});   // 2p (1+x)^2
  const MatPoly reduced = M * W.R() * M.transpose();
  result.witness_verified = reduced == MatPoly(*result.factor1, Poly{}, Poly{}, *result.factor2);
  return result;
}

bool conjugation_check(const Rational& p, const Rational& n) {
  const Weight lhs{Params(p, n)};
  const Weight rhs{Params(n - p, n)};
  const ConstMat sigma = ConstMat::swap();
  return lhs.alpha() == rhs.alpha() && sigma * lhs.R() * sigma == rhs.R();
}

}  // namespace mvop
