#include "mvop/families.hpp"

#include <sstream>
#include <stdexcept>

#include "mvop/gegenbauer.hpp"

namespace mvop {

namespace {

Rational pow2(int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= 2;
  return r;
}

Poly at(const std::vector<Poly>& seq, int m) { return m < 0 ? Poly{} : seq[static_cast<std::size_t>(m)]; }

MatPoly assemble_P(int w, const Params& params, const std::vector<Poly>& low, const std::vector<Poly>& high) {
  const Rational& p = params.p();
  const Rational& n = params.n();
  const Rational inv_n1 = 1 / (n + 1);
  const Rational inv_p = 1 / (p + w);
  const Rational inv_q = 1 / (n - p + w);
  const Poly diag = inv_n1 * at(low, w);
  return {diag + inv_p * at(high, w - 2), inv_p * at(high, w - 1), inv_q * at(high, w - 1),
          diag + inv_q * at(high, w - 2)};
}

}  // namespace

Rational leading_scale(int w, const Params& params) {
  if (w == 0) return 1 / (params.n() + 1);
  return pow2(w - 1) * pochhammer((params.n() + 3) / 2, w - 1) / Rational(factorial(w));
}

Rational monic_scale(int w, const Params& params) {
  return Rational(factorial(w)) * (params.n() + 1) / (pow2(w) * pochhammer((params.n() + 1) / 2, w));
}

MatPoly build_P(int w, const Params& params) {
  if (w < 0) throw std::invalid_argument("build_P: negative degree");
  const auto low = gegenbauer_sequence(w, (params.n() + 1) / 2);
  const auto high = gegenbauer_sequence(w - 1, (params.n() + 3) / 2);
  return assemble_P(w, params, low, high);
}

MatPoly build_Q(int w, const Params& params) { return monic_scale(w, params) * build_P(w, params); }

RecursionCoeffs recursion_coeffs(int w, const Params& params) {
  if (w < 0) throw std::invalid_argument("recursion_coeffs: negative index");
  const Rational& p = params.p();
  const Rational& n = params.n();
  const Rational q = n - p;
  RecursionCoeffs rc;
  const Rational common = (n + w) / ((p + w) * (q + w) * (2 * w + n + 1));
  rc.A = ConstMat::diagonal(common * (p + w - 1) * (q + w + 1), common * (p + w + 1) * (q + w - 1));
  rc.B = ConstMat(0, -p / ((p + w) * (p + w + 1)), -q / ((q + w) * (q + w + 1)), 0);
  rc.C = ConstMat::scalar((Rational(w) + 1) / (2 * w + n + 1));
  if (w == 0) {
    rc.A_monic = ConstMat{};
  } else {
    const Rational mc = Rational(w) * (n + w) / ((p + w) * (q + w) * (n + 2 * w - 1) * (n + 2 * w + 1));
    rc.A_monic = ConstMat::diagonal(mc * (p + w - 1) * (q + w + 1), mc * (p + w + 1) * (q + w - 1));
  }
  rc.B_monic = rc.B;
  return rc;
}

MatPoly displayed_monic(int w, const Params& params) {
  const Rational& p = params.p();
  const Rational& n = params.n();
  const Rational q = n - p;
  switch (w) {
    case 0:
      return MatPoly::identity();
    case 1:
      return {Poly::x(), Poly::constant(1 / (p + 1)), Poly::constant(1 / (q + 1)), Poly::x()};
    case 2:
      // The (2,2) constant is reproduced exactly as printed.
      return {Poly({Rational(-p / ((n + 3) * (p + 2))), Rational(0), Rational(1)}),
              Poly({Rational(0), Rational(2 / (p + 2))}), Poly({Rational(0), Rational(2 / (q + 2))}),
              Poly({Rational(-p / ((n + 3) * (q + 2))), Rational(0), Rational(1)})};
    case 3:
      return {Poly({Rational(0), Rational(-3 * (p + 1) / ((n + 5) * (p + 3))), Rational(0), Rational(1)}),
              Poly({Rational(-3 / ((n + 5) * (p + 3))), Rational(0), Rational(3 / (p + 3))}),
              Poly({Rational(-3 / ((n + 5) * (q + 3))), Rational(0), Rational(3 / (q + 3))}),
              Poly({Rational(0), Rational(-3 * (q + 1) / ((n + 5) * (q + 3))), Rational(0), Rational(1)})};
    default:
      throw std::invalid_argument("displayed_monic: only w <= 3 is printed");
  }
}

FamilyCache::FamilyCache(const Params& params, int w_max) : weight_(params) {
  if (w_max < 0) throw std::invalid_argument("FamilyCache: w_max must be >= 0");
  const auto low = gegenbauer_sequence(w_max, (params.n() + 1) / 2);
  const auto high = gegenbauer_sequence(w_max - 1, (params.n() + 3) / 2);
  members_.reserve(static_cast<std::size_t>(w_max) + 1);
  for (int w = 0; w <= w_max; ++w) {
    Member m;
    m.P = assemble_P(w, params, low, high);
    m.Q = monic_scale(w, params) * m.P;
    m.gram = inner_product_reduced(m.Q, m.Q, weight_);
    members_.push_back(std::move(m));
  }
}

ConstMat remark_norm_rational_part(int w, const Params& params) {
  const Rational& p = params.p();
  const Rational& n = params.n();
  const Rational q = n - p;
  const int h = w / 2;
  Rational s = pow2(h + 1) * pochhammer(n / 2, h + 1) / ((n + 1) * Rational(factorial(w)) * (n + 2 * w + 1));
  for (int k = 1; k <= (w - 1) / 2; ++k) s *= n + 2 * k + 1;
  return ConstMat::diagonal(s * p * (q + w + 1) / (p + w), s * q * (p + w + 1) / (q + w));
}

bool NormReport::all_diagonal() const {
  return std::all_of(records.begin(), records.end(), [](const NormRecord& r) { return r.diagonal; });
}
bool NormReport::all_ratios() const {
  return std::all_of(records.begin(), records.end(), [](const NormRecord& r) { return r.ratio_matches; });
}
bool NormReport::all_profiles() const {
  return std::all_of(records.begin(), records.end(), [](const NormRecord& r) { return r.profile_matches; });
}
bool NormReport::all_monic_identities() const {
  return std::all_of(records.begin(), records.end(), [](const NormRecord& r) { return r.monic_identity; });
}

NormReport norm_report(const FamilyCache& family, int w_max) {
  if (w_max < 1) throw std::invalid_argument("norm_report: w_max must be >= 1");
  if (w_max > family.w_max()) throw std::invalid_argument("norm_report: family cache too short");
  const Params& params = family.params();
  const Rational& p = params.p();
  const Rational q = params.q();

  NormReport report;
  const ConstMat r0 = remark_norm_rational_part(0, params);
  const ConstMat& g0 = family[0].gram;
  std::vector<int> profile_failures;
  std::vector<int> p_norm_matches;
  for (int w = 0; w <= w_max; ++w) {
    NormRecord rec;
    rec.w = w;
    rec.gram = family[w].gram;
    rec.diagonal = rec.gram.is_diagonal();
    const ConstMat rw = remark_norm_rational_part(w, params);
    if (rec.diagonal && !is_zero(rec.gram(1, 1))) {
      rec.ratio_matches = rec.gram(0, 0) / rec.gram(1, 1) ==
                          p * (q + w + 1) * (q + w) / (q * (p + w) * (p + w + 1));
      rec.profile_matches = rec.gram(0, 0) / g0(0, 0) == rw(0, 0) / r0(0, 0) &&
                            rec.gram(1, 1) / g0(1, 1) == rw(1, 1) / r0(1, 1);
    }
    if (w >= 1) {
      const auto prev_inv = family[w - 1].gram.inverse();
      rec.monic_identity = prev_inv && recursion_coeffs(w, params).A_monic == rec.gram * *prev_inv;
    }
    const ConstMat gP = inner_product_reduced(family[w].P, family[w].P, family.weight());
    for (int i = 0; i < 2; ++i) {
      rec.q_cofactor[static_cast<std::size_t>(i)] = rw(i, i) / rec.gram(i, i);
      rec.p_cofactor[static_cast<std::size_t>(i)] = rw(i, i) / gP(i, i);
    }
    if (!rec.profile_matches) profile_failures.push_back(w);
    if (rec.p_cofactor[0] == 1 && rec.p_cofactor[1] == 1) p_norm_matches.push_back(w);
    report.records.push_back(std::move(rec));
  }

  auto list = [](const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
  };
  report.findings.push_back(
      {"norm-absolute-constant",
       "formula(0) = sqrt(pi) * " + to_string(report.records[0].q_cofactor[0]) +
           " * <Q_0,Q_0>; the absolute constant involves pi and Gamma values and is not certified"});
  if (!profile_failures.empty()) {
    report.findings.push_back({"norm-profile",
                               "<Q_w,Q_w>/<Q_0,Q_0> differs from formula(w)/formula(0) at w = " +
                                   list(profile_failures)});
  }
  if (!p_norm_matches.empty()) {
    report.findings.push_back({"norm-profile",
                               "formula(w) equals sqrt(pi) * <P_w,P_w> (unreduced) exactly at w = " +
                                   list(p_norm_matches)});
  }
  return report;
}

NormReport norm_report(int w_max, const Params& params) { return norm_report(FamilyCache(params, w_max), w_max); }

FamilyChecks family_checks(const FamilyCache& family, int w_max) {
  if (w_max < 0) throw std::invalid_argument("family_checks: w_max must be >= 0");
  if (w_max + 1 > family.w_max()) throw std::invalid_argument("family_checks: cache must reach w_max + 1");
  const Params& params = family.params();
  FamilyChecks out;
  const MatPoly x = scalar_matpoly(Poly::x());

  auto record = [&](std::string name, const std::vector<int>& bad) {
    std::ostringstream os;
    if (!bad.empty()) {
      os << "fails at w =";
      for (int w : bad) os << ' ' << w;
    }
    out.checks.push_back({std::move(name), bad.empty(), os.str()});
  };

  std::vector<int> bad_degree;
  std::vector<int> bad_lead;
  std::vector<int> bad_rec_p;
  std::vector<int> bad_rec_q;
  std::vector<int> bad_diag;
  for (int w = 0; w <= w_max; ++w) {
    const auto& m = family[w];
    if (m.Q.degree() != w || m.Q.leading_coefficient() != ConstMat::identity()) bad_degree.push_back(w);
    const ConstMat lead = m.P.leading_coefficient();
    if (!lead.is_scalar() || lead != ConstMat::scalar(leading_scale(w, params))) bad_lead.push_back(w);

    const auto rc = recursion_coeffs(w, params);
    const MatPoly prevP = w > 0 ? family[w - 1].P : MatPoly{};
    const MatPoly prevQ = w > 0 ? family[w - 1].Q : MatPoly{};
    if (x * m.P != rc.A * prevP + rc.B * m.P + rc.C * family[w + 1].P) bad_rec_p.push_back(w);
    if (x * m.Q != rc.A_monic * prevQ + rc.B_monic * m.Q + family[w + 1].Q) bad_rec_q.push_back(w);
    if (!inner_product_reduced(m.P, m.P, family.weight()).is_diagonal()) bad_diag.push_back(w);
  }
  record("monic degree and identity leading coefficient", bad_degree);
  record("scalar nonsingular leading coefficient of P_w", bad_lead);
  record("three-term recursion (P family)", bad_rec_p);
  record("three-term recursion (monic family)", bad_rec_q);
  record("diagonal <P_w,P_w>", bad_diag);

  std::vector<int> bad_orth;
  for (int w = 0; w <= w_max; ++w) {
    for (int v = w + 1; v <= w_max; ++v) {
      if (!inner_product_reduced(family[w].P, family[v].P, family.weight()).is_zero()) {
        bad_orth.push_back(w);
        break;
      }
    }
  }
  record("orthogonality <P_w,P_v> = 0 for w != v", bad_orth);

  if (w_max >= 3) {
    std::vector<int> bad_display;
    for (int w : {1, 3}) {
      if (family[w].Q != displayed_monic(w, params)) bad_display.push_back(w);
    }
    record("printed Q_1 and Q_3", bad_display);

    const MatPoly& built = family[2].Q;
    const MatPoly printed = displayed_monic(2, params);
    const bool off_diag_ok =
        built(0, 0) == printed(0, 0) && built(0, 1) == printed(0, 1) && built(1, 0) == printed(1, 0);
    out.checks.push_back({"printed Q_2 entries (1,1), (1,2), (2,1)", off_diag_ok, ""});
    const Rational built_const = built(1, 1).coeff(0);
    const Rational printed_const = printed(1, 1).coeff(0);
    const bool certified = inner_product_reduced(built, family[0].Q, family.weight()).is_zero() &&
                           inner_product_reduced(built, family[1].Q, family.weight()).is_zero();
    out.checks.push_back({"Q_2 (2,2) constant certified by orthogonality", certified,
                          "constant term " + to_string(built_const)});
    if (built(1, 1).degree() != 2 || built(1, 1).coeff(1) != printed(1, 1).coeff(1) ||
        built(1, 1).coeff(2) != printed(1, 1).coeff(2)) {
      out.checks.back().passed = false;
    }
    if (built_const != printed_const) {
      const Rational q = params.q();
      const Rational mirrored = -q / ((params.n() + 3) * (q + 2));
      out.findings.push_back(
          {"erratum: Q_2 (2,2)",
           "printed constant -p/((n+3)(n-p+2)) = " + to_string(printed_const) + ", orthogonality gives " +
               to_string(built_const) +
               (built_const == mirrored ? " = -(n-p)/((n+3)(n-p+2))" : std::string{})});
    }
  }
  return out;
}

}  // namespace mvop
