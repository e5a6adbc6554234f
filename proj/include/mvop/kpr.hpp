#ifndef MVOP_KPR_HPP
#define MVOP_KPR_HPP

#include <string>
#include <vector>

#include "mvop/diffop.hpp"
#include "mvop/quadratic_field.hpp"
#include "mvop/report.hpp"

namespace mvop {

using QPoly = BasicPoly<QSqrt2>;
using QMatPoly = BasicMatPoly<QSqrt2>;
using QMat = Mat2<QSqrt2>;
using QDiffOp = BasicDiffOp<QSqrt2>;

QPoly lift(const Poly& p);
QMatPoly lift(const MatPoly& m);
QDiffOp lift(const DiffOp& D);

struct KprOperatorVerdict {
  std::string name;
  QDiffOp op;
  /// Symmetric with respect to (1-x^2)^{1/2} L R L^T.
  bool symmetric_conjugated = false;
  /// Symmetric with respect to the printed W_1.
  bool symmetric_printed = false;
  std::string failed_printed;
};

struct KprReport {
  QMat L;
  bool inverse_identity = false;
  /// Polynomial parts of L W_{1,3} L^T and of the printed W_1.
  QMatPoly conjugated_R;
  QMatPoly printed_R;
  bool printed_similarity = false;
  /// det of the printed polynomial part is nonzero at x = +-1 while
  /// det(M R_{1,3} M^T) = det(M)^2 det R_{1,3} vanishes there for every
  /// constant M, so no congruence can produce the printed weight.
  bool congruence_obstructed = false;
  std::vector<KprOperatorVerdict> operators;
  std::vector<Finding> findings;

  /// W_1 = L W_{1,3} L^T, L L^{-1} = I and the three operators symmetric
  /// with respect to W_1, all as printed.
  bool passed() const;
};

/// At (p, n) = (1, 3) with L = [[0, sqrt2], [-1, 0]] over Q(sqrt2): compares
/// L W_{1,3} L^T with the printed W_1 and checks L(D1+D2-3I)L^{-1}, L D2 L^{-1}
/// and -sqrt2 L(2D3+D4)L^{-1} for symmetry.
KprReport kpr_crosscheck();

}  // namespace mvop

#endif  // MVOP_KPR_HPP
