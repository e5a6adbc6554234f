#ifndef MVOP_FAMILIES_HPP
#define MVOP_FAMILIES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mvop/matpoly.hpp"
#include "mvop/report.hpp"
#include "mvop/weight.hpp"

namespace mvop {

/// Leading coefficient of P_w as a scalar: 2^{w-1}((n+3)/2)_{w-1}/w! for
/// w >= 1 and 1/(n+1) for w = 0.
Rational leading_scale(int w, const Params& params);

/// Factor taking P_w to the monic Q_w: w!(n+1) / (2^w ((n+1)/2)_w).
Rational monic_scale(int w, const Params& params);

/// P_w assembled from Gegenbauer polynomials with lambda = (n+1)/2 and
/// (n+3)/2; negative-index terms vanish.
MatPoly build_P(int w, const Params& params);

/// Monic Q_w = monic_scale(w) * P_w.
MatPoly build_Q(int w, const Params& params);

/// Closed-form recursion matrices:
///   x P_w = A_w P_{w-1} + B_w P_w + C_w P_{w+1}
///   x Q_w = A~_w Q_{w-1} + B~_w Q_w + Q_{w+1}
struct RecursionCoeffs {
  ConstMat A;
  ConstMat B;
  ConstMat C;
  ConstMat A_monic;
  ConstMat B_monic;
};

RecursionCoeffs recursion_coeffs(int w, const Params& params);

/// The low-degree monic polynomials as they are printed in the literature
/// (w = 1, 2, 3). The w = 2 display carries a suspect (2,2) constant term.
MatPoly displayed_monic(int w, const Params& params);

/// P_w, Q_w and <Q_w, Q_w> (reduced) for w = 0 .. w_max. Immutable once built.
class FamilyCache {
 public:
  struct Member {
    MatPoly P;
    MatPoly Q;
    ConstMat gram;
  };

  FamilyCache(const Params& params, int w_max);

  const Params& params() const { return weight_.params(); }
  const Weight& weight() const { return weight_; }
  int w_max() const { return static_cast<int>(members_.size()) - 1; }
  const Member& operator[](int w) const { return members_.at(static_cast<std::size_t>(w)); }

 private:
  Weight weight_;
  std::vector<Member> members_;
};

/// Rational part r_w of the closed-form norm in the remark closing the
/// recursion discussion, normalized so that formula(w) = sqrt(pi) * mu_0 * r_w
/// where mu_0 = int (1-x^2)^{n/2-1} dx. Diagonal.
ConstMat remark_norm_rational_part(int w, const Params& params);

struct NormRecord {
  int w = 0;
  ConstMat gram;             // <Q_w, Q_w> reduced
  bool diagonal = false;
  bool ratio_matches = false;     // gram_11 / gram_22 against the remark's diagonal
  bool profile_matches = false;   // gram_w / gram_0 against formula(w) / formula(0)
  bool monic_identity = true;     // A~_w = gram_w gram_{w-1}^{-1} (w >= 1)
  /// r_w / <Q_w,Q_w> and r_w / <P_w,P_w> entrywise (diagonal entries).
  std::array<Rational, 2> q_cofactor;
  std::array<Rational, 2> p_cofactor;
};

struct NormReport {
  std::vector<NormRecord> records;
  std::vector<Finding> findings;
  bool all_diagonal() const;
  bool all_ratios() const;
  bool all_profiles() const;
  bool all_monic_identities() const;
};

/// Checks the norm remark's exactly-checkable content for w = 0 .. w_max:
/// diagonality, the diagonal ratio, the w-profile relative to w = 0, and
/// the monic identity A~_w = gram_w gram_{w-1}^{-1}. Mismatches are
/// reported as findings, never thrown.
NormReport norm_report(const FamilyCache& family, int w_max);
NormReport norm_report(int w_max, const Params& params);

/// Identity claims about the family up to w_max: degrees, leading
/// coefficients, monic scaling, both recursions, orthogonality with
/// diagonal Gram matrices, and the printed Q_1..Q_3. The eigen-equation
/// lives with the operators (see diffop.hpp). Needs a cache built to at
/// least w_max + 1.
struct FamilyChecks {
  std::vector<Check> checks;
  std::vector<Finding> findings;
  bool passed() const { return all_passed(checks); }
};

FamilyChecks family_checks(const FamilyCache& family, int w_max);

}  // namespace mvop

#endif  // MVOP_FAMILIES_HPP
