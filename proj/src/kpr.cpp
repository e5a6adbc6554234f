#include "mvop/kpr.hpp"

namespace mvop {

QPoly lift(const Poly& p) {
  std::vector<QSqrt2> c;
  for (const Rational& v : p.coefficients()) c.emplace_back(v);
  return QPoly(std::move(c));
}

QMatPoly lift(const MatPoly& m) { return QMatPoly(lift(m(0, 0)), lift(m(0, 1)), lift(m(1, 0)), lift(m(1, 1))); }

QDiffOp lift(const DiffOp& D) {
  std::vector<QMatPoly> c;
  for (const MatPoly& f : D.coeffs()) c.push_back(lift(f));
  return QDiffOp(std::move(c));
}

bool KprReport::passed() const {
  if (!inverse_identity || !printed_similarity) return false;
  for (const auto& v : operators) {
    if (!v.symmetric_printed) return false;
  }
  return true;
}

namespace {

QPoly qpoly(std::initializer_list<QSqrt2> c) { return QPoly(std::vector<QSqrt2>(c)); }

bool nonzero_at_both_ends(const QPoly& p) { return !is_zero(p(QSqrt2(1))) && !is_zero(p(QSqrt2(-1))); }

}  // namespace

KprReport kpr_crosscheck() {
  const Params params(1, 3);
  const Weight weight(params);
  const QSqrt2 s = QSqrt2::sqrt2();

  KprReport r;
  r.L = QMat(0, s, -1, 0);
  const auto inv = r.L.inverse();
  r.inverse_identity = inv && r.L * *inv == QMat::identity() && *inv * r.L == QMat::identity();

  const QMatPoly R = lift(weight.R());
  r.conjugated_R = r.L * R * r.L.transpose();
  r.printed_R = QMatPoly(qpoly({3, 0, 4}), qpoly({0, 3 * s}), qpoly({0, 3 * s}), qpoly({2, 0, 1}));
  r.printed_similarity = r.conjugated_R == r.printed_R;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const QPoly& a = r.conjugated_R(i, j);
      const QPoly& b = r.printed_R(i, j);
      for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k) {
        if (a.coeff(k) == b.coeff(k)) continue;
        r.findings.push_back({"kpr-weight", "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                ") x^" + std::to_string(k) + ": L W_{1,3} L^T has " +
                                                to_string(a.coeff(k)) + ", printed W_1 has " +
                                                to_string(b.coeff(k))});
      }
    }
  }
  r.congruence_obstructed =
      nonzero_at_both_ends(r.printed_R(0, 0) * r.printed_R(1, 1) - r.printed_R(0, 1) * r.printed_R(1, 0)) && !nonzero_at_both_ends(lift(weight.det_R()));
  if (r.congruence_obstructed) {
    r.findings.push_back({"kpr-weight", "det of the printed W_1 polynomial part is nonzero at x = +-1 while det R_{1,3} "
                                        "vanishes there; no constant congruence maps W_{1,3} to the printed W_1"});
  }

  const NamedBasis b = named_basis(params);
  const std::vector<std::pair<std::string, DiffOp>> raw{
      {"L (D1 + D2 - 3I) L^-1", b.D1 + b.D2 - Rational(3) * b.I},
      {"L D2 L^-1", b.D2},
      {"-sqrt2 L (2 D3 + D4) L^-1", Rational(2) * b.D3 + b.D4},
  };
  const WeightForm<QSqrt2> conjugated{weight.alpha(), r.conjugated_R};
  const WeightForm<QSqrt2> printed{weight.alpha(), r.printed_R};
  for (std::size_t k = 0; k < raw.size(); ++k) {
    KprOperatorVerdict v;
    v.name = raw[k].first;
    v.op = conjugate(r.L, lift(raw[k].second));
    if (k == 2) v.op *= -s;
    v.symmetric_conjugated = symmetry_check(v.op, conjugated).symmetric;
    const auto verdict = symmetry_check(v.op, printed);
    v.symmetric_printed = verdict.symmetric;
    v.failed_printed = verdict.failed;
    r.operators.push_back(std::move(v));
  }
  return r;
}

}  // namespace mvop
