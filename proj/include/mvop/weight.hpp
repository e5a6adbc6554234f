#ifndef MVOP_WEIGHT_HPP
#define MVOP_WEIGHT_HPP

#include <optional>
#include <vector>

#include "mvop/matpoly.hpp"
#include "mvop/rational.hpp"

namespace mvop {

/// Parameters (p, n) of the weight, with 0 < p < n.
class Params {
 public:
  /// Throws std::invalid_argument unless 0 < p < n.
  Params(Rational p, Rational n);

  const Rational& p() const { return p_; }
  const Rational& n() const { return n_; }
  /// n - p, the parameter of the conjugate weight.
  Rational q() const { return n_ - p_; }
  /// The weight splits into scalar weights exactly when n = 2p.
  bool reducible() const { return n_ == 2 * p_; }

  friend bool operator==(const Params& l, const Params& r) { return l.p_ == r.p_ && l.n_ == r.n_; }

 private:
  Rational p_;
  Rational n_;
};

/// W(x) = (1-x^2)^alpha * R(x) with a polynomial part over the field F.
/// The exponent always stays rational.
template <class F>
struct WeightForm {
  Rational alpha;
  BasicMatPoly<F> R;
};

/// The weight W_{p,n}(x) = (1-x^2)^{n/2-1} [[p x^2 + n - p, -n x], [-n x, (n-p) x^2 + p]].
class Weight {
 public:
  explicit Weight(Params params);

  const Params& params() const { return params_; }
  const Rational& alpha() const { return form_.alpha; }
  const MatPoly& R() const { return form_.R; }
  const WeightForm<Rational>& form() const { return form_; }

  /// det R(x), expanded.
  Poly det_R() const;
  /// p(n-p) x^4 + (p^2 + (n-p)^2 - n^2) x^2 + p(n-p).
  Poly det_R_closed_form() const;
  /// det R equals its closed form, R is symmetric, and det R > 0 at a
  /// fixed set of rational sample points inside (-1, 1).
  bool check_invariants() const;

 private:
  Params params_;
  WeightForm<Rational> form_;
};

/// int x^k (1-x^2)^{n/2-1} dx divided by int (1-x^2)^{n/2-1} dx over [-1, 1].
/// Throws std::invalid_argument for n <= 0 or k < 0.
Rational reduced_moment(int k, const Rational& n);

/// Reduced moments h_0 .. h_{k_max} in one pass.
std::vector<Rational> reduced_moments(int k_max, const Rational& n);

/// Matrix inner product <P, Q> = int P W Q^T dx divided by the scalar mass
/// of (1-x^2)^alpha. Exact for rational p, n.
ConstMat inner_product_reduced(const MatPoly& P, const MatPoly& Q, const Weight& W);

struct ReductionResult {
  bool reducible = false;
  /// M with M R M^T diagonal; only present when reducible.
  std::optional<ConstMat> witness;
  /// Polynomial parts of the two scalar weights (both times (1-x^2)^alpha).
  std::optional<Poly> factor1;
  std::optional<Poly> factor2;
  /// M R M^T reproduces diag(factor1, factor2) exactly.
  bool witness_verified = false;
};

/// For n = 2p returns M = [[1,1],[-1,1]] with M W M^T = 2p (1-x^2)^alpha
/// diag((1-x)^2, (1+x)^2); otherwise reports irreducible.
ReductionResult reduction_check(const Weight& W);

/// sigma W_{p,n} sigma = W_{n-p,n} with sigma = [[0,1],[1,0]].
bool conjugation_check(const Rational& p, const Rational& n);

}  // namespace mvop

#endif  // MVOP_WEIGHT_HPP
