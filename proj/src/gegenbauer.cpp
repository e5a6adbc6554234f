#include "mvop/gegenbauer.hpp"

#include <stdexcept>

namespace mvop {

std::vector<Poly> gegenbauer_sequence(int m_max, const Rational& lambda) {
  if (sgn(lambda) <= 0) throw std::invalid_argument("gegenbauer: lambda must be positive");
  std::vector<Poly> out;
  if (m_max < 0) return out;
  out.reserve(static_cast<std::size_t>(m_max) + 1);
  out.push_back(Poly::constant(Rational(1)));
  if (m_max == 0) return out;
  out.push_back(Poly::monomial(Rational(2 * lambda), 1));
  const Poly x = Poly::x();
  for (int m = 1; m < m_max; ++m) {
    Poly next = Rational(2 * (m + lambda)) * (x * out[m]) - Rational(m + 2 * lambda - 1) * out[m - 1];
    next *= Rational(1, m + 1);
    out.push_back(std::move(next));
  }
  return out;
}

Poly gegenbauer(int m, const Rational& lambda) {
  if (sgn(lambda) <= 0) throw std::invalid_argument("gegenbauer: lambda must be positive");
  if (m < 0) return {};
  return gegenbauer_sequence(m, lambda).back();
}

GegenbauerIdentityReport gegenbauer_identity_suite(int m_max, const Rational& lambda) {
  if (m_max < 0) throw std::invalid_argument("gegenbauer_identity_suite: m_max must be >= 0");
  if (lambda <= 1) throw std::invalid_argument("gegenbauer_identity_suite: lambda must exceed 1");

  GegenbauerIdentityReport report;
  report.m_max = m_max;
  report.lambda = lambda;
  report.identities = {"ode", "derivative", "recurrence", "lowering", "contiguous"};

  const auto base = gegenbauer_sequence(m_max + 1, lambda);
  const auto raised = gegenbauer_sequence(m_max, lambda + 1);
  const auto lowered = gegenbauer_sequence(m_max + 1, lambda - 1);
  auto at = [](const std::vector<Poly>& seq, int m) { return m < 0 ? Poly{} : seq[static_cast<std::size_t>(m)]; };

  const Poly x = Poly::x();
  const Poly one_minus_x2(std::vector<Rational>{1, 0, -1});

  for (int m = 0; m <= m_max; ++m) {
    const Poly& c = base[static_cast<std::size_t>(m)];
    auto fail = [&](const char* name) { report.failures.push_back({name, m, lambda}); };

    Poly ode = one_minus_x2 * derivative(c, 2) - Rational(2 * lambda + 1) * (x * derivative(c)) +
               Rational(m * (m + 2 * lambda)) * c;
    if (!ode.is_zero()) fail("ode");

    if (derivative(c) != Rational(2 * lambda) * at(raised, m - 1)) fail("derivative");

    Poly lhs = Rational(2 * (m + lambda)) * (x * c);
    Poly rhs = Rational(m + 1) * at(base, m + 1) + Rational(m + 2 * lambda - 1) * at(base, m - 1);
    if (lhs != rhs) fail("recurrence");

    Poly lowering = Rational((m + 2 * lambda - 1) / (2 * (lambda - 1))) * at(lowered, m + 1);
    if (lowering != at(base, m + 1) - x * c) fail("lowering");

    Poly contiguous = Rational(m + lambda) * at(lowered, m + 1);
    if (contiguous != Rational(lambda - 1) * (at(base, m + 1) - at(base, m - 1))) fail("contiguous");
  }
  return report;
}

}  // namespace mvop
