#include "mvop/exact_linalg.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mvop {

namespace {

using IntRow = std::vector<Integer>;

void guard(const Integer& v, std::size_t max_bits) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > max_bits) {
    throw std::overflow_error("exact elimination exceeded " + std::to_string(max_bits) + " bits");
  }
}

IntRow clear_denominators(const RowVector& row) {
  Integer l = 1;
  for (const Rational& v : row) {
    if (sgn(v) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  IntRow out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (sgn(row[j]) == 0) continue;
    out[j] = row[j].get_num() * (l / row[j].get_den());
  }
  return out;
}

}  // namespace

std::size_t max_bits_from_env() {
  const char* raw = std::getenv("MVOP_MAX_BITS");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxBits;
  const std::string_view text(raw);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw std::invalid_argument("MVOP_MAX_BITS must be a positive integer");
  }
  return value;
}

Echelon row_reduce(const RowMatrix& rows, std::size_t cols, std::size_t max_bits) {
  std::vector<IntRow> m;
  m.reserve(rows.size());
  for (const RowVector& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("row_reduce: ragged matrix");
    IntRow r = clear_denominators(row);
    bool nonzero = false;
    for (const Integer& v : r) nonzero = nonzero || sgn(v) != 0;
    if (nonzero) m.push_back(std::move(r));
  }

  Echelon e;
  e.cols = cols;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    const IntRow& top = m[r];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      IntRow& row = m[i];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = top[c] * row[j] - row[c] * top[j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        guard(v, max_bits);
        row[j] = std::move(v);
      }
      row[c] = 0;
    }
    prev = top[c];
    e.pivots.push_back(c);
    ++r;
  }

  e.rows.resize(r);
  for (std::size_t k = r; k-- > 0;) {
    RowVector& out = e.rows[k];
    out.assign(cols, Rational(0));
    const std::size_t pc = e.pivots[k];
    const Rational lead(m[k][pc]);
    for (std::size_t j = pc; j < cols; ++j) {
      if (sgn(m[k][j]) != 0) out[j] = Rational(m[k][j]) / lead;
    }
    for (std::size_t below = k + 1; below < r; ++below) {
      const std::size_t bc = e.pivots[below];
      if (sgn(out[bc]) == 0) continue;
      const Rational factor = out[bc];
      for (std::size_t j = bc; j < cols; ++j) {
        if (sgn(e.rows[below][j]) != 0) out[j] -= factor * e.rows[below][j];
      }
    }
  }
  return e;
}

std::size_t rank(const RowMatrix& rows, std::size_t cols, std::size_t max_bits) {
  return row_reduce(rows, cols, max_bits).rank();
}

RowMatrix nullspace(const RowMatrix& A, std::size_t cols, std::size_t max_bits) {
  const Echelon e = row_reduce(A, cols, max_bits);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  RowMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RowVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < e.rank(); ++k) v[e.pivots[k]] = -e.rows[k][f];
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  return row_reduce(basis, cols, max_bits).rows;
}

std::optional<RowVector> solve_combination(const RowMatrix& columns, const RowVector& target,
                                           std::size_t max_bits) {
  const std::size_t k = columns.size();
  for (const RowVector& col : columns) {
    if (col.size() != target.size()) throw std::invalid_argument("solve_combination: length mismatch");
  }
  RowMatrix aug(target.size(), RowVector(k + 1));
  for (std::size_t t = 0; t < target.size(); ++t) {
    for (std::size_t j = 0; j < k; ++j) aug[t][j] = columns[j][t];
    aug[t][k] = target[t];
  }
  const Echelon e = row_reduce(aug, k + 1, max_bits);
  RowVector x(k, Rational(0));
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == k) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][k];
  }
  return x;
}

}  // namespace mvop
