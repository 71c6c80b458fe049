#pragma once

#include <utility>
#include <vector>

#include "deltatour/rational.hpp"

namespace deltatour {

// min c^T x  subject to  sum_j coeffs_ij x_j >= rhs_i (rhs_i >= 0), x >= 0.
struct LpGeConstraint {
  std::vector<std::pair<int, Rational>> coeffs;
  Rational rhs;
};

struct LpProblem {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LpGeConstraint> rows;
};

struct LpOptimum {
  Rational value;
  std::vector<Rational> x;
};

// Dense two-phase tableau simplex with Bland's rule; every entry is an
// exact rational. Throws std::invalid_argument when infeasible and
// std::logic_error when unbounded.
LpOptimum solve_lp_min(const LpProblem& lp);

}  // namespace deltatour
