#ifndef MVOP_GEGENBAUER_HPP
#define MVOP_GEGENBAUER_HPP

#include <string>
#include <vector>

#include "mvop/poly.hpp"
#include "mvop/rational.hpp"

namespace mvop {

/// Gegenbauer polynomial C_m^lambda, built from the three-term recurrence
///   (m+1) C_{m+1} = 2(m+lambda) x C_m - (m+2lambda-1) C_{m-1}.
/// Negative m gives the zero polynomial. Throws std::invalid_argument for
/// lambda <= 0.
Poly gegenbauer(int m, const Rational& lambda);

/// C_0^lambda ... C_{m_max}^lambda in one pass of the recurrence.
std::vector<Poly> gegenbauer_sequence(int m_max, const Rational& lambda);

struct IdentityFailure {
  std::string identity;
  int m;
  Rational lambda;
};

struct GegenbauerIdentityReport {
  int m_max = 0;
  Rational lambda;
  std::vector<std::string> identities;  // labels, in check order
  std::vector<IdentityFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Checks, for 0 <= m <= m_max, the exact polynomial identities
///   ode:          (1-x^2) C'' - (2lambda+1) x C' + m(m+2lambda) C = 0
///   derivative:   d/dx C_m^lambda = 2 lambda C_{m-1}^{lambda+1}
///   recurrence:   2(m+lambda) x C_m = (m+1) C_{m+1} + (m+2lambda-1) C_{m-1}
///   lowering:     (m+2lambda-1)/(2(lambda-1)) C_{m+1}^{lambda-1} = C_{m+1}^lambda - x C_m^lambda
///   contiguous:   (m+lambda) C_{m+1}^{lambda-1} = (lambda-1)(C_{m+1}^lambda - C_{m-1}^lambda)
/// Requires lambda > 1 and m_max >= 0 (std::invalid_argument otherwise).
GegenbauerIdentityReport gegenbauer_identity_suite(int m_max, const Rational& lambda);

}  // namespace mvop

#endif  // MVOP_GEGENBAUER_HPP
