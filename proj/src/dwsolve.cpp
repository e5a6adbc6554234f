#include "mvop/dwsolve.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace mvop {

UnknownLayout::UnknownLayout(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("UnknownLayout: negative order");
  for (int i = 0; i <= order; ++i) {
    for (int row = 0; row < 2; ++row) {
      for (int col = 0; col < 2; ++col) {
        for (int power = 0; power <= i; ++power) vars_.push_back({i, row, col, power});
      }
    }
  }
}

std::size_t UnknownLayout::index(int i, int row, int col, int power) const {
  if (i < 0 || i > order_ || power < 0 || power > i || row < 0 || row > 1 || col < 0 || col > 1) {
    throw std::out_of_range("UnknownLayout::index");
  }
  return static_cast<std::size_t>(2 * i * (i + 1) + (row * 2 + col) * (i + 1) + power);
}

RowVector UnknownLayout::flatten(const DiffOp& D) const {
  if (D.order() > order_ || !D.degree_bounded()) {
    throw std::invalid_argument("UnknownLayout::flatten: operator outside the layout");
  }
  RowVector out(size(), Rational(0));
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    const Variable& v = vars_[k];
    out[k] = D.coeff(v.i)(v.row, v.col).coeff(v.power);
  }
  return out;
}

DiffOp UnknownLayout::assemble(const RowVector& coords) const {
  if (coords.size() != size()) throw std::invalid_argument("UnknownLayout::assemble: wrong length");
  std::vector<std::array<std::vector<Rational>, 4>> entries(static_cast<std::size_t>(order_ + 1));
  for (int i = 0; i <= order_; ++i) {
    for (auto& e : entries[static_cast<std::size_t>(i)]) e.assign(static_cast<std::size_t>(i + 1), Rational(0));
  }
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    const Variable& v = vars_[k];
    entries[static_cast<std::size_t>(v.i)][static_cast<std::size_t>(v.row * 2 + v.col)]
           [static_cast<std::size_t>(v.power)] = coords[k];
  }
  std::vector<MatPoly> coeffs;
  for (auto& e : entries) coeffs.emplace_back(Poly(e[0]), Poly(e[1]), Poly(e[2]), Poly(e[3]));
  return DiffOp(std::move(coeffs));
}

namespace {

/// Rows of Q_w D - Lambda_w(D) Q_w = 0, one per (entry, power).
void append_constraints(RowMatrix& rows, const UnknownLayout& layout, const FamilyCache& family, int w) {
  const MatPoly& Q = family[w].Q;
  const int s = layout.order();
  std::vector<MatPoly> dQ;
  for (int i = 0; i <= s; ++i) dQ.push_back(derivative(Q, i));
  const std::size_t width = static_cast<std::size_t>(w + 1);
  RowMatrix block(4 * width, RowVector(layout.size(), Rational(0)));
  auto eq = [&](int a, int b, int m) -> std::size_t {
    return static_cast<std::size_t>(a * 2 + b) * width + static_cast<std::size_t>(m);
  };
  for (std::size_t k = 0; k < layout.size(); ++k) {
    const auto& v = layout.variable(k);
    const MatPoly& D = dQ[static_cast<std::size_t>(v.i)];
    for (int a = 0; a < 2; ++a) {
      const Poly& e = D(a, v.row);
      for (int m = 0; m <= e.degree(); ++m) block[eq(a, v.col, m + v.power)][k] += e.coeff(m);
    }
    if (v.power == v.i) {
      const Rational f(falling_factorial(w, v.i));
      if (sgn(f) == 0) continue;
      for (int b = 0; b < 2; ++b) {
        const Poly& e = Q(v.col, b);
        for (int m = 0; m <= e.degree(); ++m) block[eq(v.row, b, m)][k] -= f * e.coeff(m);
      }
    }
  }
  for (RowVector& r : block) {
    if (std::any_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) != 0; })) rows.push_back(std::move(r));
  }
}

constexpr int kEnlargeStep = 4;
constexpr int kMaxEnlargements = 2;

}  // namespace

OpSpace solve_order(int s, const Params& params, const SolveOptions& options) {
  if (s < 0) throw std::invalid_argument("solve_order: negative order");
  int w_c = options.w_constraint < 0 ? 2 * s + 4 : options.w_constraint;
  int w_v = options.w_verify < 0 ? 3 * s + 6 : options.w_verify;
  if (w_v <= w_c) throw std::invalid_argument("solve_order: w_verify must exceed w_constraint");

  const UnknownLayout layout(s);
  const FamilyCache family(params, std::max(w_v, w_c + kEnlargeStep * kMaxEnlargements + 1));
  RowMatrix rows;
  for (int w = 0; w <= w_c; ++w) append_constraints(rows, layout, family, w);

  OpSpace out;
  out.order = s;
  for (int attempt = 0;; ++attempt) {
    const RowMatrix null = nullspace(rows, layout.size(), options.max_bits);
    out.basis.clear();
    for (const RowVector& v : null) out.basis.push_back(layout.assemble(v));
    const int verify_to = std::max(w_v, w_c + 1);
    const bool verified = std::all_of(out.basis.begin(), out.basis.end(),
                                      [&](const DiffOp& D) { return eigen_equation_holds(D, family, verify_to); });
    out.w_constraint = w_c;
    out.w_verify = verify_to;
    if (verified) break;
    if (attempt == kMaxEnlargements) {
      out.stabilized = false;
      break;
    }
    for (int w = w_c + 1; w <= w_c + kEnlargeStep; ++w) append_constraints(rows, layout, family, w);
    w_c += kEnlargeStep;
    ++out.enlargements;
  }

  out.dimension = static_cast<int>(out.basis.size());
  RowMatrix top;
  for (const DiffOp& D : out.basis) {
    const RowVector v = layout.flatten(D);
    RowVector t;
    for (std::size_t k = 0; k < layout.size(); ++k) {
      if (layout.variable(k).i == s) t.push_back(v[k]);
    }
    top.push_back(std::move(t));
  }
  out.new_dimension = top.empty() ? 0 : static_cast<int>(rank(top, top.front().size(), options.max_bits));
  return out;
}

bool membership_check(const DiffOp& D, const Params& params, int w_max) {
  if (!D.degree_bounded()) return false;
  const FamilyCache family(params, w_max);
  return eigen_equation_holds(D, family, w_max);
}

bool spans_equal(const OpSpace& space, const std::vector<DiffOp>& ops, std::size_t max_bits) {
  const UnknownLayout layout(space.order);
  RowMatrix basis;
  RowMatrix others;
  for (const DiffOp& D : space.basis) basis.push_back(layout.flatten(D));
  for (const DiffOp& D : ops) {
    if (D.order() > space.order || !D.degree_bounded()) return false;
    others.push_back(layout.flatten(D));
  }
  const std::size_t dim = basis.size();
  if (rank(others, layout.size(), max_bits) != dim) return false;
  RowMatrix both = basis;
  both.insert(both.end(), others.begin(), others.end());
  return rank(both, layout.size(), max_bits) == dim;
}

std::vector<std::string> generator_names() {
  std::vector<std::string> names{"I", "D1", "D2", "D3", "D4"};
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) names.push_back("D" + std::to_string(i) + "D" + std::to_string(j));
  }
  return names;
}

std::vector<DiffOp> generators(const Params& params) {
  const NamedBasis b = named_basis(params);
  const std::vector<DiffOp> d{b.D1, b.D2, b.D3, b.D4};
  std::vector<DiffOp> out{b.I};
  out.insert(out.end(), d.begin(), d.end());
  for (const DiffOp& x : d) {
    for (const DiffOp& y : d) out.push_back(compose(x, y));
  }
  return out;
}

std::vector<int> FiltrationReport::new_dims() const {
  std::vector<int> out;
  for (const StratumRecord& s : strata) out.push_back(s.new_dim);
  return out;
}

FiltrationReport filtration_report(int s_max, const Params& params, std::size_t max_bits) {
  if (s_max < 0 || s_max > 6) throw std::invalid_argument("filtration_report: s_max must lie in [0, 6]");
  SolveOptions options;
  options.max_bits = max_bits;
  std::vector<std::future<OpSpace>> jobs;
  for (int s = 0; s <= s_max; ++s) {
    jobs.push_back(std::async(std::launch::async, [s, &params, options] { return solve_order(s, params, options); }));
  }
  std::vector<OpSpace> spaces;
  for (auto& j : jobs) spaces.push_back(j.get());

  FiltrationReport report{.params = params, .s_max = s_max};
  for (const OpSpace& sp : spaces) {
    report.strata.push_back({sp.order, sp.dimension, sp.new_dimension, sp.stabilized, sp.basis});
    report.evidence.push_back({params.p(), params.n(), sp.order, sp.new_dimension,
                               sp.order % 2 == 0 || sp.new_dimension == 0});
  }

  report.checks.push_back({"nullspace stabilized", std::all_of(spaces.begin(), spaces.end(),
                                                                [](const OpSpace& s) { return s.stabilized; }),
                           ""});

  if (params.reducible()) {
    std::string dims;
    for (const OpSpace& sp : spaces) dims += (dims.empty() ? "" : ", ") + std::to_string(sp.dimension);
    report.findings.push_back({"reducible", "n = 2p: the weight splits into scalar weights; order <= 2 "
                                            "classification not asserted; dims (" + dims + ")"});
  } else {
    const NamedBasis b = named_basis(params);
    report.checks.push_back(
        {"D_0 = span{I}", spaces[0].dimension == 1 && spaces[0].basis.front() == b.I, ""});
    if (s_max >= 1) report.checks.push_back({"no operators of order one", spaces[1].new_dimension == 0, ""});
    if (s_max >= 2) {
      const OpSpace& d2 = spaces[2];
      report.checks.push_back({"dim D_2 = 5", d2.dimension == 5, "dim " + std::to_string(d2.dimension)});
      report.checks.push_back({"D_2 = span{I, D1, D2, D3, D4}", spans_equal(d2, {b.I, b.D1, b.D2, b.D3, b.D4}, max_bits), ""});
      std::vector<DiffOp> family;
      for (int k = 0; k < 5; ++k) {
        std::array<Rational, 5> a{};
        a[static_cast<std::size_t>(k)] = 1;
        family.push_back(order_two_family(params, a[0], a[1], a[2], a[3], a[4]));
      }
      report.checks.push_back({"D_2 = span of the order-two family", spans_equal(d2, family, max_bits), ""});
    }
  }

  const std::array<int, 3> expected{0, 4, 0};
  for (int s = 3; s <= std::min(s_max, 5); ++s) {
    const int want = expected[static_cast<std::size_t>(s - 3)];
    const int got = spaces[static_cast<std::size_t>(s)].new_dimension;
    report.higher_order.push_back({"new dimension at order " + std::to_string(s) + " = " + std::to_string(want),
                                   got == want, "found " + std::to_string(got)});
  }

  if (s_max >= 4) {
    const UnknownLayout layout(4);
    const std::vector<DiffOp> gens = generators(params);
    RowMatrix cols;
    for (const DiffOp& g : gens) cols.push_back(layout.flatten(g));
    bool all_solvable = true;
    for (const DiffOp& m : spaces[4].basis) {
      GeneratorExpansion ex{.member = m};
      if (auto x = solve_combination(cols, layout.flatten(m), max_bits)) {
        DiffOp rebuilt;
        for (std::size_t g = 0; g < gens.size(); ++g) rebuilt += (*x)[g] * gens[g];
        ex.solvable = rebuilt == m;
        if (ex.solvable) ex.coefficients = std::move(*x);
      }
      all_solvable = all_solvable && ex.solvable;
      report.order4.push_back(std::move(ex));
    }
    report.higher_order.push_back({"D_4 lies in the span of I, D_i, D_i D_j", all_solvable, ""});
  }
  return report;
}

}  // namespace mvop
