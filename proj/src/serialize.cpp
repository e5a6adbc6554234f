#include "mvop/serialize.hpp"

namespace mvop {

namespace {

template <class P>
Json poly_json(const P& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

template <class M>
Json mat_json(const M& m) {
  return Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}), Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

template <class D>
Json op_json(const D& op) {
  Json coeffs = Json::array();
  for (const auto& f : op.coeffs()) coeffs.push_back(to_json(f));
  return Json{{"order", op.order()}, {"coeffs", std::move(coeffs)}};
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const QSqrt2& v) { return Json{{"rational", to_string(v.rational_part())}, {"sqrt2", to_string(v.sqrt2_part())}}; }
Json to_json(const Poly& p) { return poly_json(p); }
Json to_json(const QPoly& p) { return poly_json(p); }
Json to_json(const ConstMat& m) { return mat_json(m); }
Json to_json(const QMat& m) { return mat_json(m); }
Json to_json(const MatPoly& m) { return mat_json(m); }
Json to_json(const QMatPoly& m) { return mat_json(m); }
Json to_json(const DiffOp& D) { return op_json(D); }
Json to_json(const QDiffOp& D) { return op_json(D); }

Json to_json(const Params& params) { return Json{{"p", to_string(params.p())}, {"n", to_string(params.n())}}; }

Json to_json(const Weight& W) {
  return Json{{"p", to_string(W.params().p())},
              {"n", to_string(W.params().n())},
              {"alpha", to_string(W.alpha())},
              {"R", to_json(W.R())}};
}

Json to_json(const Check& c) {
  Json out{{"name", c.name}, {"passed", c.passed}};
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

Json to_json(const Finding& f) { return Json{{"topic", f.topic}, {"detail", f.detail}}; }

Json to_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const Check& c : checks) out.push_back(to_json(c));
  return out;
}

Json to_json(const std::vector<Finding>& findings) {
  Json out = Json::array();
  for (const Finding& f : findings) out.push_back(to_json(f));
  return out;
}

Json family_record(const FamilyCache& family, int w) {
  const auto& m = family[w];
  const RecursionCoeffs rc = recursion_coeffs(w, family.params());
  return Json{{"w", w},
              {"Q", to_json(m.Q)},
              {"gram", Json::array({to_json(m.gram(0, 0)), to_json(m.gram(1, 1))})},
              {"recursion",
               {{"A", to_json(rc.A)},
                {"B", to_json(rc.B)},
                {"C", to_json(rc.C)},
                {"A_tilde", to_json(rc.A_monic)},
                {"B_tilde", to_json(rc.B_monic)}}}};
}

Json to_json(const FiltrationReport& report) {
  Json strata = Json::array();
  for (const StratumRecord& s : report.strata) {
    Json basis = Json::array();
    for (const DiffOp& D : s.basis) basis.push_back(to_json(D));
    strata.push_back(Json{{"order", s.order},
                          {"dim", s.dim},
                          {"new_dim", s.new_dim},
                          {"stabilized", s.stabilized},
                          {"basis", std::move(basis)}});
  }
  Json evidence = Json::array();
  for (const EvidenceRecord& e : report.evidence) {
    evidence.push_back(Json{{"p", to_string(e.p)},
                            {"n", to_string(e.n)},
                            {"order", e.order},
                            {"new_dim", e.new_dim},
                            {"no_odd_order_member", e.consistent}});
  }
  Json order4 = Json::array();
  const std::vector<std::string> names = generator_names();
  for (const GeneratorExpansion& ex : report.order4) {
    Json coeffs = Json::object();
    for (std::size_t g = 0; g < ex.coefficients.size(); ++g) {
      if (sgn(ex.coefficients[g]) != 0) coeffs[names[g]] = to_string(ex.coefficients[g]);
    }
    order4.push_back(Json{{"solvable", ex.solvable}, {"generators", std::move(coeffs)}});
  }
  return Json{{"params", to_json(report.params)},
              {"strata", std::move(strata)},
              {"evidence", std::move(evidence)},
              {"checks", to_json(report.checks)},
              {"higher_order", to_json(report.higher_order)},
              {"order4_expansions", std::move(order4)},
              {"findings", to_json(report.findings)}};
}

Json to_json(const KprReport& report) {
  Json ops = Json::array();
  for (const KprOperatorVerdict& v : report.operators) {
    Json o{{"name", v.name},
           {"operator", to_json(v.op)},
           {"symmetric_conjugated_weight", v.symmetric_conjugated},
           {"symmetric_printed_weight", v.symmetric_printed}};
    if (!v.failed_printed.empty()) o["printed_weight_failure"] = v.failed_printed;
    ops.push_back(std::move(o));
  }
  return Json{{"L", to_json(report.L)},
              {"inverse_identity", report.inverse_identity},
              {"conjugated_R", to_json(report.conjugated_R)},
              {"printed_R", to_json(report.printed_R)},
              {"printed_similarity", report.printed_similarity},
              {"congruence_obstructed", report.congruence_obstructed},
              {"operators", std::move(ops)},
              {"findings", to_json(report.findings)},
              {"passed", report.passed()}};
}

}  // namespace mvop
