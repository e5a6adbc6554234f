#ifndef MVOP_RATIONAL_HPP
#define MVOP_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace mvop {

/// Exact rational scalar. gmpxx keeps results of arithmetic canonical
/// (lowest terms, positive denominator); values built from raw
/// numerator/denominator pairs go through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Parses "num/den" or "num". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den", including integers ("3/1").
std::string to_string(const Rational& q);

/// Bit size of numerator plus denominator.
std::size_t bit_size(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Rising factorial a(a+1)...(a+w-1); 1 for w = 0.
Rational pochhammer(const Rational& a, int w);

/// Falling factorial [w]_i = w(w-1)...(w-i+1); 1 for i = 0.
Integer falling_factorial(long w, int i);

Integer factorial(int w);

}  // namespace mvop

#endif  // MVOP_RATIONAL_HPP
