#include "fortlib/lp.hpp"

#include "fortlib/errors.hpp"

namespace fortlib {

namespace {

// Primal simplex with Bland's rule on: max 1'y s.t. A'y <= 1, y >= 0,
// which is the dual of the covering LP. The slack basis is feasible at
// y = 0, so no phase-1 is needed, and Bland guarantees termination.
//
// Tableau: one constraint row per covering variable; columns are the R
// dual variables, then n slacks, then the right-hand side. At the optimum
// the reduced costs of the slack columns are the covering weights.
struct DualTableau {
  int n;                              // covering variables == constraint rows
  int r;                              // covering rows == dual variables
  std::vector<std::vector<Rational>> t;  // n rows, r + n + 1 columns
  std::vector<Rational> obj;          // reduced-cost row, r + n + 1 entries
  std::vector<int> basis;             // basis[i] = variable index in row i

  DualTableau(const CoveringLp& lp)
      : n(lp.n_vars), r(static_cast<int>(lp.rows.size())) {
    t.assign(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(r + n + 1)));
    obj.assign(static_cast<size_t>(r + n + 1), Rational(0));
    for (int j = 0; j < r; ++j) {
      lp.rows[static_cast<size_t>(j)].for_each(
          [&](int v) { t[static_cast<size_t>(v)][static_cast<size_t>(j)] = 1; });
      obj[static_cast<size_t>(j)] = -1;
    }
    basis.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      t[static_cast<size_t>(i)][static_cast<size_t>(r + i)] = 1;
      t[static_cast<size_t>(i)].back() = 1;
      basis[static_cast<size_t>(i)] = r + i;
    }
  }

  void pivot(int row, int col) {
    auto& pr = t[static_cast<size_t>(row)];
    Rational inv = Rational(1) / pr[static_cast<size_t>(col)];
    for (auto& x : pr) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row) continue;
      Rational factor = t[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (factor.is_zero()) continue;
      for (size_t j = 0; j < pr.size(); ++j)
        t[static_cast<size_t>(i)][j] -= factor * pr[j];
    }
    Rational factor = obj[static_cast<size_t>(col)];
    if (!factor.is_zero())
      for (size_t j = 0; j < pr.size(); ++j) obj[j] -= factor * pr[j];
    basis[static_cast<size_t>(row)] = col;
  }

  LpStatus run() {
    while (true) {
      int entering = -1;
      for (int j = 0; j < r + n; ++j)
        if (obj[static_cast<size_t>(j)].sign() < 0) {
          entering = j;
          break;
        }
      if (entering < 0) return LpStatus::optimal;
      int leaving = -1;
      Rational best_ratio;
      for (int i = 0; i < n; ++i) {
        const Rational& coeff = t[static_cast<size_t>(i)][static_cast<size_t>(entering)];
        if (coeff.sign() <= 0) continue;
        Rational ratio = t[static_cast<size_t>(i)].back() / coeff;
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio &&
             basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leaving)]))
          leaving = i, best_ratio = ratio;
      }
      if (leaving < 0) return LpStatus::unbounded;
      pivot(leaving, entering);
    }
  }
};

void verify_solution(const CoveringLp& lp, const LpSolution& sol) {
  Rational weight_sum;
  for (const auto& w : sol.weights) {
    if (w.sign() < 0) throw internal_consistency_error("negative weight in LP solution");
    weight_sum += w;
  }
  if (weight_sum != sol.value)
    throw internal_consistency_error("LP weights do not sum to the objective value");
  for (const auto& row : lp.rows) {
    Rational row_sum;
    row.for_each([&](int v) { row_sum += sol.weights[static_cast<size_t>(v)]; });
    if (row_sum < Rational(1))
      throw internal_consistency_error("LP solution violates a covering row");
  }
  Rational dual_sum;
  for (const auto& y : sol.dual) {
    if (y.sign() < 0) throw internal_consistency_error("negative dual multiplier");
    dual_sum += y;
  }
  if (dual_sum != sol.value)
    throw internal_consistency_error("dual certificate does not match the objective value");
  std::vector<Rational> column(static_cast<size_t>(lp.n_vars));
  for (size_t j = 0; j < lp.rows.size(); ++j)
    lp.rows[j].for_each([&](int v) { column[static_cast<size_t>(v)] += sol.dual[j]; });
  for (const auto& c : column)
    if (c > Rational(1))
      throw internal_consistency_error("dual certificate violates a column bound");
}

}  // namespace

LpSolution solve_covering_lp(const CoveringLp& lp) {
  if (lp.n_vars < 0) throw invalid_input("covering LP needs n_vars >= 0");
  for (const auto& row : lp.rows) {
    if (row.universe() != lp.n_vars)
      throw invalid_input("covering row universe does not match n_vars");
    if (row.empty()) throw invalid_input("covering rows must be non-empty");
  }
  LpSolution sol;
  sol.weights.assign(static_cast<size_t>(lp.n_vars), Rational(0));
  sol.dual.assign(lp.rows.size(), Rational(0));
  if (lp.rows.empty()) return sol;  // nothing to cover

  DualTableau tab(lp);
  sol.status = tab.run();
  if (sol.status != LpStatus::optimal)
    throw internal_consistency_error("covering LP cannot be infeasible or unbounded");
  sol.value = tab.obj.back();
  for (int i = 0; i < tab.n; ++i)
    if (tab.basis[static_cast<size_t>(i)] < tab.r)
      sol.dual[static_cast<size_t>(tab.basis[static_cast<size_t>(i)])] =
          tab.t[static_cast<size_t>(i)].back();
  for (int v = 0; v < tab.n; ++v)
    sol.weights[static_cast<size_t>(v)] = tab.obj[static_cast<size_t>(tab.r + v)];
  verify_solution(lp, sol);
  return sol;
}

Rational fractional_zf(const Graph& g, const FortCensus& census) {
  if (!census.complete)
    throw invalid_input("fractional_zf needs a complete minimal-fort census");
  return solve_covering_lp({g.order(), census.minimal_forts}).value;
}

}  // namespace fortlib
