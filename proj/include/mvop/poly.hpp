#ifndef MVOP_POLY_HPP
#define MVOP_POLY_HPP

#include <algorithm>
#include <climits>
#include <span>
#include <utility>
#include <vector>

#include "mvop/rational.hpp"

namespace mvop {

template <class F>
bool is_zero_scalar(const F& v) {
  return v == F(0);
}
inline bool is_zero_scalar(const Rational& v) { return sgn(v) == 0; }

/// Dense univariate polynomial in x over a field F. Coefficient k is the
/// coefficient of x^k; trailing zeros are never stored.
template <class F>
class BasicPoly {
 public:
  using value_type = F;
  static constexpr int kZeroDegree = INT_MIN;

  BasicPoly() = default;
  explicit BasicPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static BasicPoly constant(const F& c) { return BasicPoly(std::vector<F>{c}); }
  static BasicPoly monomial(const F& c, int k) {
    std::vector<F> v(static_cast<std::size_t>(k) + 1, F(0));
    v.back() = c;
    return BasicPoly(std::move(v));
  }
  static BasicPoly x() { return monomial(F(1), 1); }

  /// kZeroDegree for the zero polynomial.
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  F coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return F(0);
    return c_[static_cast<std::size_t>(k)];
  }
  std::span<const F> coefficients() const { return c_; }

  F leading() const { return c_.empty() ? F(0) : c_.back(); }

  F operator()(const F& at) const {
    F r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      r *= at;
      r += *it;
    }
    return r;
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  BasicPoly& operator*=(const F& s) {
    if (is_zero_scalar(s)) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }
  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  /// Multiplication by x^k.
  BasicPoly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<F> v(static_cast<std::size_t>(k), F(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return BasicPoly(std::move(v));
  }

  friend BasicPoly operator+(BasicPoly l, const BasicPoly& r) { return l += r; }
  friend BasicPoly operator-(BasicPoly l, const BasicPoly& r) { return l -= r; }
  friend BasicPoly operator-(BasicPoly v) {
    for (auto& c : v.c_) c = -c;
    return v;
  }
  friend BasicPoly operator*(BasicPoly l, const F& s) { return l *= s; }
  friend BasicPoly operator*(const F& s, BasicPoly r) { return r *= s; }
  friend BasicPoly operator*(const BasicPoly& l, const BasicPoly& r) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<F> out(l.c_.size() + r.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < l.c_.size(); ++i) {
      if (is_zero_scalar(l.c_[i])) continue;
      for (std::size_t j = 0; j < r.c_.size(); ++j) out[i + j] += l.c_[i] * r.c_[j];
    }
    return BasicPoly(std::move(out));
  }
  friend bool operator==(const BasicPoly& l, const BasicPoly& r) { return l.c_ == r.c_; }
  friend bool operator!=(const BasicPoly& l, const BasicPoly& r) { return !(l == r); }

 private:
  void trim() {
    while (!c_.empty() && is_zero_scalar(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

using Poly = BasicPoly<Rational>;

template <class F>
BasicPoly<F> derivative(const BasicPoly<F>& p, int order = 1) {
  if (order <= 0) return p;
  if (p.degree() < order) return {};
  std::vector<F> out;
  out.reserve(static_cast<std::size_t>(p.degree() - order + 1));
  for (int k = order; k <= p.degree(); ++k) {
    F c = p.coeff(k);
    for (int j = 0; j < order; ++j) c *= F(k - j);
    out.push_back(std::move(c));
  }
  return BasicPoly<F>(std::move(out));
}

/// Multiplicity of `at` as a root of p. The zero polynomial has no finite
/// multiplicity; callers must test is_zero() first.
template <class F>
int root_multiplicity(const BasicPoly<F>& p, const F& at) {
  int m = 0;
  BasicPoly<F> q = p;
  while (!q.is_zero() && is_zero_scalar(q(at))) {
    q = derivative(q);
    ++m;
  }
  return m;
}

}  // namespace mvop

#endif  // MVOP_POLY_HPP
