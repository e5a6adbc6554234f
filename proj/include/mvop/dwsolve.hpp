#ifndef MVOP_DWSOLVE_HPP
#define MVOP_DWSOLVE_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "mvop/diffop.hpp"
#include "mvop/exact_linalg.hpp"
#include "mvop/families.hpp"
#include "mvop/report.hpp"
#include "mvop/weight.hpp"

namespace mvop {

/// Canonical indexing of the unknown coefficients of an operator of order
/// <= s with deg F_i <= i: the variable (i, row, col, power) is the x^power
/// coefficient of F_i(row, col), ordered lexicographically.
class UnknownLayout {
 public:
  struct Variable {
    int i;
    int row;
    int col;
    int power;
  };

  explicit UnknownLayout(int order);

  int order() const { return order_; }
  /// 4 * sum_{i=0}^{s} (i+1).
  std::size_t size() const { return vars_.size(); }
  std::size_t index(int i, int row, int col, int power) const;
  const Variable& variable(std::size_t k) const { return vars_.at(k); }

  /// Coordinates of a degree-bounded operator of order <= s. Throws
  /// std::invalid_argument otherwise.
  RowVector flatten(const DiffOp& D) const;
  DiffOp assemble(const RowVector& coords) const;

 private:
  int order_;
  std::vector<Variable> vars_;
};

struct SolveOptions {
  /// Largest w imposed as a constraint; -1 selects 2s + 4.
  int w_constraint = -1;
  /// Largest w checked after solving; -1 selects 3s + 6.
  int w_verify = -1;
  std::size_t max_bits = kDefaultMaxBits;
};

/// Operators of order <= s in D(W).
struct OpSpace {
  int order = 0;
  int dimension = 0;
  /// Dimension modulo the members of order < s.
  int new_dimension = 0;
  /// Reduced echelon basis over the canonical variable order.
  std::vector<DiffOp> basis;
  int w_constraint = 0;
  int w_verify = 0;
  int enlargements = 0;
  bool stabilized = true;
};

/// Imposes Q_w D = Lambda_w(D) Q_w for w <= w_constraint, takes the exact
/// nullspace and verifies each basis element up to w_verify. On a failed
/// verification the constraint range grows by 4; after two enlargements
/// without success the result is marked not stabilized.
OpSpace solve_order(int s, const Params& params, const SolveOptions& options = {});

/// Q_w D = (sum_i [w]_i F_i^i) Q_w for all w <= w_max. False for operators
/// violating deg F_i <= i.
bool membership_check(const DiffOp& D, const Params& params, int w_max);

/// D_s spanned by the operators in `ops` (all of order <= s).
bool spans_equal(const OpSpace& space, const std::vector<DiffOp>& ops, std::size_t max_bits = kDefaultMaxBits);

struct StratumRecord {
  int order = 0;
  int dim = 0;
  int new_dim = 0;
  bool stabilized = true;
  std::vector<DiffOp> basis;
};

/// A member of D_4 written in the 21 generators I, D_i, D_i D_j.
struct GeneratorExpansion {
  DiffOp member;
  bool solvable = false;
  /// Coefficients in generator_names() order; empty when not solvable.
  std::vector<Rational> coefficients{};
};

/// "I", "D1".."D4", then "D1D1", "D1D2", ..., "D4D4" (D_i acts first).
std::vector<std::string> generator_names();
std::vector<DiffOp> generators(const Params& params);

/// One conjecture evidence record; never a claim.
struct EvidenceRecord {
  Rational p;
  Rational n;
  int order = 0;
  int new_dim = 0;
  /// Odd order with new_dim = 0.
  bool consistent = true;
};

struct FiltrationReport {
  Params params;
  int s_max = 0;
  std::vector<StratumRecord> strata{};
  /// Order <= 2 claims (dim D_0 = 1, no order one, dim D_2 = 5, span of the
  /// named basis and of the classification family). Skipped at n = 2p.
  std::vector<Check> checks{};
  /// Order >= 3 dimension expectations (0 new at orders 3 and 5, 4 at order 4).
  std::vector<Check> higher_order{};
  std::vector<GeneratorExpansion> order4{};
  std::vector<EvidenceRecord> evidence{};
  std::vector<Finding> findings{};

  bool passed() const { return all_passed(checks); }
  std::vector<int> new_dims() const;
};

/// Solves s = 0 .. s_max concurrently. Throws std::invalid_argument for
/// s_max outside [0, 6].
FiltrationReport filtration_report(int s_max, const Params& params, std::size_t max_bits = kDefaultMaxBits);

}  // namespace mvop

#endif  // MVOP_DWSOLVE_HPP
