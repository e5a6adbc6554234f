#ifndef MVOP_MATPOLY_HPP
#define MVOP_MATPOLY_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mvop/poly.hpp"
#include "mvop/rational.hpp"

namespace mvop {

/// 2x2 matrix over a field, row-major.
template <class F>
class Mat2 {
 public:
  Mat2() : e_{F(0), F(0), F(0), F(0)} {}
  Mat2(F a11, F a12, F a21, F a22) : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {}

  static Mat2 identity() { return {F(1), F(0), F(0), F(1)}; }
  static Mat2 scalar(const F& s) { return {s, F(0), F(0), s}; }
  static Mat2 diagonal(const F& a, const F& b) { return {a, F(0), F(0), b}; }
  static Mat2 swap() { return {F(0), F(1), F(1), F(0)}; }

  F& operator()(int r, int c) { return e_[static_cast<std::size_t>(2 * r + c)]; }
  const F& operator()(int r, int c) const { return e_[static_cast<std::size_t>(2 * r + c)]; }

  Mat2 transpose() const { return {e_[0], e_[2], e_[1], e_[3]}; }
  F det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  F trace() const { return e_[0] + e_[3]; }

  /// Adjugate over determinant; nullopt for a singular matrix.
  std::optional<Mat2> inverse() const {
    F d = det();
    if (is_zero_scalar(d)) return std::nullopt;
    F inv = F(1) / d;
    return Mat2{e_[3] * inv, -e_[1] * inv, -e_[2] * inv, e_[0] * inv};
  }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const F& v) { return is_zero_scalar(v); });
  }
  bool is_diagonal() const { return is_zero_scalar(e_[1]) && is_zero_scalar(e_[2]); }
  bool is_antidiagonal() const { return is_zero_scalar(e_[0]) && is_zero_scalar(e_[3]); }
  bool is_scalar() const { return is_diagonal() && e_[0] == e_[3]; }

  Mat2& operator+=(const Mat2& o) {
    for (std::size_t k = 0; k < 4; ++k) e_[k] += o.e_[k];
    return *this;
  }
  Mat2& operator-=(const Mat2& o) {
    for (std::size_t k = 0; k < 4; ++k) e_[k] -= o.e_[k];
    return *this;
  }
  Mat2& operator*=(const F& s) {
    for (auto& v : e_) v *= s;
    return *this;
  }

  friend Mat2 operator+(Mat2 l, const Mat2& r) { return l += r; }
  friend Mat2 operator-(Mat2 l, const Mat2& r) { return l -= r; }
  friend Mat2 operator-(const Mat2& m) { return {-m.e_[0], -m.e_[1], -m.e_[2], -m.e_[3]}; }
  friend Mat2 operator*(Mat2 l, const F& s) { return l *= s; }
  friend Mat2 operator*(const F& s, Mat2 r) { return r *= s; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2], a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
            a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2], a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]};
  }
  friend bool operator==(const Mat2& l, const Mat2& r) { return l.e_ == r.e_; }
  friend bool operator!=(const Mat2& l, const Mat2& r) { return !(l == r); }

 private:
  std::array<F, 4> e_;
};

using ConstMat = Mat2<Rational>;

/// 2x2 matrix with polynomial entries; degree is the largest entry degree.
template <class F>
class BasicMatPoly {
 public:
  using Scalar = F;
  using PolyT = BasicPoly<F>;
  using MatT = Mat2<F>;

  BasicMatPoly() = default;
  BasicMatPoly(PolyT a11, PolyT a12, PolyT a21, PolyT a22)
      : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {}
  explicit BasicMatPoly(const MatT& m)
      : e_{PolyT::constant(m(0, 0)), PolyT::constant(m(0, 1)), PolyT::constant(m(1, 0)),
           PolyT::constant(m(1, 1))} {}

  static BasicMatPoly identity() { return BasicMatPoly(MatT::identity()); }

  /// Sum_k coeffs[k] x^k.
  static BasicMatPoly from_coefficients(const std::vector<MatT>& coeffs) {
    BasicMatPoly out;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        std::vector<F> v;
        v.reserve(coeffs.size());
        for (const auto& m : coeffs) v.push_back(m(r, c));
        out(r, c) = PolyT(std::move(v));
      }
    }
    return out;
  }

  PolyT& operator()(int r, int c) { return e_[static_cast<std::size_t>(2 * r + c)]; }
  const PolyT& operator()(int r, int c) const { return e_[static_cast<std::size_t>(2 * r + c)]; }

  int degree() const {
    int d = PolyT::kZeroDegree;
    for (const auto& p : e_) d = std::max(d, p.degree());
    return d;
  }
  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const PolyT& p) { return p.is_zero(); });
  }

  /// Matrix of the x^k coefficients.
  MatT coefficient(int k) const { return {e_[0].coeff(k), e_[1].coeff(k), e_[2].coeff(k), e_[3].coeff(k)}; }

  MatT leading_coefficient() const {
    if (is_zero()) throw std::invalid_argument("leading_coefficient of the zero matrix polynomial");
    return coefficient(degree());
  }

  MatT operator()(const F& at) const { return {e_[0](at), e_[1](at), e_[2](at), e_[3](at)}; }

  BasicMatPoly transpose() const { return {e_[0], e_[2], e_[1], e_[3]}; }

  BasicMatPoly& operator+=(const BasicMatPoly& o) {
    for (std::size_t k = 0; k < 4; ++k) e_[k] += o.e_[k];
    return *this;
  }
  BasicMatPoly& operator-=(const BasicMatPoly& o) {
    for (std::size_t k = 0; k < 4; ++k) e_[k] -= o.e_[k];
    return *this;
  }
  BasicMatPoly& operator*=(const F& s) {
    for (auto& p : e_) p *= s;
    return *this;
  }

  friend BasicMatPoly operator+(BasicMatPoly l, const BasicMatPoly& r) { return l += r; }
  friend BasicMatPoly operator-(BasicMatPoly l, const BasicMatPoly& r) { return l -= r; }
  friend BasicMatPoly operator-(const BasicMatPoly& m) { return {-m.e_[0], -m.e_[1], -m.e_[2], -m.e_[3]}; }
  friend BasicMatPoly operator*(BasicMatPoly l, const F& s) { return l *= s; }
  friend BasicMatPoly operator*(const F& s, BasicMatPoly r) { return r *= s; }
  friend BasicMatPoly operator*(const PolyT& s, const BasicMatPoly& m) {
    return {s * m.e_[0], s * m.e_[1], s * m.e_[2], s * m.e_[3]};
  }
  friend BasicMatPoly operator*(const BasicMatPoly& a, const BasicMatPoly& b) {
    return {a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2], a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
            a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2], a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]};
  }
  friend BasicMatPoly operator*(const MatT& a, const BasicMatPoly& b) {
    return {a(0, 0) * b.e_[0] + a(0, 1) * b.e_[2], a(0, 0) * b.e_[1] + a(0, 1) * b.e_[3],
            a(1, 0) * b.e_[0] + a(1, 1) * b.e_[2], a(1, 0) * b.e_[1] + a(1, 1) * b.e_[3]};
  }
  friend BasicMatPoly operator*(const BasicMatPoly& a, const MatT& b) {
    return {a.e_[0] * b(0, 0) + a.e_[1] * b(1, 0), a.e_[0] * b(0, 1) + a.e_[1] * b(1, 1),
            a.e_[2] * b(0, 0) + a.e_[3] * b(1, 0), a.e_[2] * b(0, 1) + a.e_[3] * b(1, 1)};
  }
  friend bool operator==(const BasicMatPoly& l, const BasicMatPoly& r) { return l.e_ == r.e_; }
  friend bool operator!=(const BasicMatPoly& l, const BasicMatPoly& r) { return !(l == r); }

 private:
  std::array<PolyT, 4> e_;
};

using MatPoly = BasicMatPoly<Rational>;

/// Entrywise derivative of the given order.
template <class F>
BasicMatPoly<F> derivative(const BasicMatPoly<F>& m, int order = 1) {
  return {derivative(m(0, 0), order), derivative(m(0, 1), order), derivative(m(1, 0), order),
          derivative(m(1, 1), order)};
}

/// Scalar polynomial times the identity.
template <class F>
BasicMatPoly<F> scalar_matpoly(const BasicPoly<F>& p) {
  return {p, BasicPoly<F>{}, BasicPoly<F>{}, p};
}

}  // namespace mvop

#endif  // MVOP_MATPOLY_HPP
