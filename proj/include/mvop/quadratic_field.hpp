#ifndef MVOP_QUADRATIC_FIELD_HPP
#define MVOP_QUADRATIC_FIELD_HPP

#include <stdexcept>
#include <string>

#include "mvop/rational.hpp"

namespace mvop {

/// Element a + b*sqrt(2) of Q(sqrt 2). Only the similarity cross-check
/// against the 3x3 SU(2) example needs it; everything else is rational.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  QSqrt2& operator+=(const QSqrt2& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QSqrt2& operator-=(const QSqrt2& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QSqrt2& operator*=(const QSqrt2& o) {
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

  QSqrt2 inverse() const {
    // (a + b s)^-1 = (a - b s) / (a^2 - 2 b^2); the norm vanishes only at 0.
    Rational norm = a_ * a_ - 2 * b_ * b_;
    if (sgn(norm) == 0) throw std::domain_error("QSqrt2: division by zero");
    return {Rational(a_ / norm), Rational(-b_ / norm)};
  }

  friend QSqrt2 operator+(QSqrt2 l, const QSqrt2& r) { return l += r; }
  friend QSqrt2 operator-(QSqrt2 l, const QSqrt2& r) { return l -= r; }
  friend QSqrt2 operator*(QSqrt2 l, const QSqrt2& r) { return l *= r; }
  friend QSqrt2 operator/(QSqrt2 l, const QSqrt2& r) { return l /= r; }
  friend QSqrt2 operator-(const QSqrt2& v) { return {Rational(-v.a_), Rational(-v.b_)}; }
  friend bool operator==(const QSqrt2& l, const QSqrt2& r) { return l.a_ == r.a_ && l.b_ == r.b_; }
  friend bool operator!=(const QSqrt2& l, const QSqrt2& r) { return !(l == r); }

 private:
  Rational a_{0};
  Rational b_{0};
};

inline bool is_zero(const QSqrt2& v) { return is_zero(v.rational_part()) && is_zero(v.sqrt2_part()); }

inline std::string to_string(const QSqrt2& v) {
  return to_string(v.rational_part()) + " + " + to_string(v.sqrt2_part()) + "*sqrt2";
}

}  // namespace mvop

#endif  // MVOP_QUADRATIC_FIELD_HPP
