#ifndef MVOP_SERIALIZE_HPP
#define MVOP_SERIALIZE_HPP

#include <json.hpp>

#include "mvop/diffop.hpp"
#include "mvop/dwsolve.hpp"
#include "mvop/families.hpp"
#include "mvop/kpr.hpp"
#include "mvop/report.hpp"
#include "mvop/weight.hpp"

namespace mvop {

using Json = nlohmann::ordered_json;

/// Rationals are always "num/den" strings.
Json to_json(const Rational& q);
Json to_json(const QSqrt2& v);
/// Ascending coefficient list.
Json to_json(const Poly& p);
Json to_json(const QPoly& p);
/// [[a11, a12], [a21, a22]].
Json to_json(const ConstMat& m);
Json to_json(const QMat& m);
/// [[P11, P12], [P21, P22]] with coefficient lists as entries.
Json to_json(const MatPoly& m);
Json to_json(const QMatPoly& m);
/// {order, coeffs: [F_0, ..., F_s]}.
Json to_json(const DiffOp& D);
Json to_json(const QDiffOp& D);

Json to_json(const Params& params);
/// {p, n, alpha, R}.
Json to_json(const Weight& W);
Json to_json(const Check& c);
Json to_json(const Finding& f);
Json to_json(const std::vector<Check>& checks);
Json to_json(const std::vector<Finding>& findings);

/// {w, Q, gram: [g11, g22], recursion: {A, B, C, A_tilde, B_tilde}}.
Json family_record(const FamilyCache& family, int w);

/// {params, strata: [{order, dim, new_dim, basis}], evidence, ...}.
Json to_json(const FiltrationReport& report);
Json to_json(const KprReport& report);

}  // namespace mvop

#endif  // MVOP_SERIALIZE_HPP
