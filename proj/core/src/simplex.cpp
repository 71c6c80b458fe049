#include "deltatour/simplex.hpp"

#include <stdexcept>

namespace deltatour {

namespace {

struct Tableau {
  int rows, cols;  // cols excludes the rhs column
  std::vector<std::vector<Rational>> t;  // rows x (cols + 1)
  std::vector<int> basis;                // basic variable per row
  std::vector<Rational> obj;             // reduced cost row, size cols + 1

  void pivot(int r, int e) {
    Rational p = t[r][e];
    for (auto& v : t[r]) v /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || t[i][e].is_zero()) continue;
      Rational f = t[i][e];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
    }
    if (!obj[e].is_zero()) {
      Rational f = obj[e];
      for (int j = 0; j <= cols; ++j) obj[j] -= f * t[r][j];
    }
    basis[r] = e;
  }

  // Reduced-cost row for objective c over the current basis.
  void load_objective(const std::vector<Rational>& c) {
    obj.assign(cols + 1, Rational(0));
    for (int j = 0; j < static_cast<int>(c.size()); ++j) obj[j] = c[j];
    for (int i = 0; i < rows; ++i) {
      int b = basis[i];
      if (b < static_cast<int>(c.size()) && !c[b].is_zero()) {
        Rational f = c[b];
        for (int j = 0; j <= cols; ++j) obj[j] -= f * t[i][j];
      }
    }
  }

  // Bland's rule: smallest eligible entering column, leaving row breaking
  // ratio ties by smallest basic variable.
  void optimize(int allowed_cols) {
    while (true) {
      int e = -1;
      for (int j = 0; j < allowed_cols; ++j)
        if (obj[j] < Rational(0)) {
          e = j;
          break;
        }
      if (e < 0) return;
      int r = -1;
      Rational best(0);
      for (int i = 0; i < rows; ++i) {
        if (t[i][e] <= Rational(0)) continue;
        Rational ratio = t[i][cols] / t[i][e];
        if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r < 0) throw std::logic_error("simplex: unbounded");
      pivot(r, e);
    }
  }
};

}  // namespace

LpOptimum solve_lp_min(const LpProblem& lp) {
  int n = lp.num_vars;
  int m = static_cast<int>(lp.rows.size());
  for (const auto& row : lp.rows)
    if (row.rhs < Rational(0)) throw std::invalid_argument("simplex: negative rhs");

  if (m == 0) return {Rational(0), std::vector<Rational>(n, Rational(0))};

  // columns: x (n) | surplus (m) | artificial (m)
  Tableau tab;
  tab.rows = m;
  tab.cols = n + 2 * m;
  tab.t.assign(m, std::vector<Rational>(tab.cols + 1, Rational(0)));
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    for (auto& [j, a] : lp.rows[i].coeffs) tab.t[i][j] += a;
    tab.t[i][n + i] = Rational(-1);
    tab.t[i][n + m + i] = Rational(1);
    tab.t[i][tab.cols] = lp.rows[i].rhs;
    tab.basis[i] = n + m + i;
  }

  // Phase 1: drive the artificials to zero.
  std::vector<Rational> phase1(tab.cols, Rational(0));
  for (int i = 0; i < m; ++i) phase1[n + m + i] = Rational(1);
  tab.load_objective(phase1);
  tab.optimize(tab.cols);
  if (!(-tab.obj[tab.cols]).is_zero()) throw std::invalid_argument("simplex: infeasible");

  // Kick artificials still sitting (at zero) in the basis when possible;
  // rows that stay artificial are linearly dependent and inert.
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n + m) continue;
    for (int j = 0; j < n + m; ++j)
      if (!tab.t[i][j].is_zero()) {
        tab.pivot(i, j);
        break;
      }
  }

  // Phase 2 over the real objective; artificial columns may not re-enter.
  std::vector<Rational> phase2(tab.cols, Rational(0));
  for (int j = 0; j < n; ++j) phase2[j] = lp.objective[j];
  tab.load_objective(phase2);
  tab.optimize(n + m);

  LpOptimum out;
  out.x.assign(n, Rational(0));
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] < n) out.x[tab.basis[i]] = tab.t[i][tab.cols];
  out.value = -tab.obj[tab.cols];
  return out;
}

}  // namespace deltatour
