#ifndef MVOP_EXACT_LINALG_HPP
#define MVOP_EXACT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mvop/rational.hpp"

namespace mvop {

using RowVector = std::vector<Rational>;
using RowMatrix = std::vector<RowVector>;

constexpr std::size_t kDefaultMaxBits = 1'000'000;

/// MVOP_MAX_BITS from the environment, kDefaultMaxBits when unset.
/// Throws std::invalid_argument on a malformed value.
std::size_t max_bits_from_env();

struct Echelon {
  /// Nonzero rows of the reduced row echelon form.
  RowMatrix rows;
  /// Pivot column of each row, increasing.
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
  std::size_t rank() const { return rows.size(); }
};

/// Reduced row echelon form. Rows are cleared to integers and eliminated
/// fraction-free (Bareiss), pivoting on the first nonzero entry of the
/// leftmost remaining column; the final back substitution is rational.
/// Throws std::overflow_error if an intermediate integer exceeds max_bits.
/// Every row must have `cols` entries.
Echelon row_reduce(const RowMatrix& rows, std::size_t cols, std::size_t max_bits = kDefaultMaxBits);

std::size_t rank(const RowMatrix& rows, std::size_t cols, std::size_t max_bits = kDefaultMaxBits);

/// Basis of {x : A x = 0}, itself in reduced row echelon form.
RowMatrix nullspace(const RowMatrix& A, std::size_t cols, std::size_t max_bits = kDefaultMaxBits);

/// Some x with sum_j x_j columns[j] = target (free variables set to 0),
/// or nullopt when target is outside the span.
std::optional<RowVector> solve_combination(const RowMatrix& columns, const RowVector& target,
                                           std::size_t max_bits = kDefaultMaxBits);

}  // namespace mvop

#endif  // MVOP_EXACT_LINALG_HPP
