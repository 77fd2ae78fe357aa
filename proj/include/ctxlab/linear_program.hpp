#pragma once

#include "ctxlab/rational.hpp"

#include <vector>

namespace ctxlab {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  RationalVector coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

// maximize objective . x subject to the constraints; variables are
// non-negative unless flagged free.
struct LinearProgram {
  std::size_t variables = 0;
  RationalVector objective;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> free_variables;

  explicit LinearProgram(std::size_t n) : variables(n), objective(n, Rational(0)), free_variables(n, false) {}

  void add(RationalVector coeffs, Relation relation, Rational rhs) {
    constraints.push_back({std::move(coeffs), relation, std::move(rhs)});
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector x;
};

// Exact two-phase primal simplex with Bland's rule; deterministic.
LpSolution solve(const LinearProgram& lp);

}  // namespace ctxlab
