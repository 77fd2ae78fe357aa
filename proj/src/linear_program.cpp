#include "ctxlab/linear_program.hpp"

#include "ctxlab/error.hpp"

#include <optional>

namespace ctxlab {

namespace {

// Dense tableau over standard-form columns; rows hold [A | b].
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), cells_(rows, RationalVector(cols + 1, Rational(0))), basis_(rows, 0) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  Rational& rhs(std::size_t r) { return cells_[r][cols_]; }
  std::size_t rows() const { return cells_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    auto& row = cells_[r];
    const Rational p = row[c];
    for (auto& x : row) {
      if (x != 0) x /= p;
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i == r || cells_[i][c] == 0) continue;
      const Rational f = cells_[i][c];
      auto& target = cells_[i];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (row[j] != 0) target[j] -= f * row[j];
      }
    }
    basis_[r] = c;
  }

  void erase_row(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<long>(r));
    basis_.erase(basis_.begin() + static_cast<long>(r));
  }

  // Maximizes cost . x over columns with allowed[j]. Returns false when unbounded.
  bool optimize(const RationalVector& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols_ && !entering; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows(); ++i) {
          if (cells_[i][j] != 0 && cost[basis_[i]] != 0) reduced -= cost[basis_[i]] * cells_[i][j];
        }
        if (reduced > 0) entering = j;
      }
      if (!entering) return true;
      const auto e = *entering;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (cells_[i][e] <= 0) continue;
        Rational ratio = cells_[i][cols_] / cells_[i][e];
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, e);
    }
  }

  Rational objective_value(const RationalVector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < cells_.size(); ++i) v += cost[basis_[i]] * cells_[i][cols_];
    return v;
  }

  RationalVector solution() const {
    RationalVector x(cols_, Rational(0));
    for (std::size_t i = 0; i < cells_.size(); ++i) x[basis_[i]] = cells_[i][cols_];
    return x;
  }

 private:
  std::size_t cols_;
  std::vector<RationalVector> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve(const LinearProgram& lp) {
  const std::size_t n = lp.variables;
  for (const auto& c : lp.constraints) {
    if (c.coeffs.size() != n) throw Error(ErrorKind::DimensionMismatch, "constraint width differs from variable count");
  }
  // Column layout: x+ (n), x- (one per free variable), slacks/surpluses, artificials.
  std::vector<std::size_t> negative_col(n, 0);
  std::size_t cols = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.free_variables[j]) negative_col[j] = cols++;
  }
  const std::size_t m = lp.constraints.size();
  std::vector<std::optional<std::size_t>> slack_col(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.constraints[i].relation != Relation::Equal) slack_col[i] = cols++;
  }
  const std::size_t first_artificial = cols;
  std::vector<std::optional<std::size_t>> artificial_col(m);
  std::vector<bool> flipped(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    flipped[i] = c.rhs < 0;
    Relation rel = c.relation;
    if (flipped[i] && rel != Relation::Equal) rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
    if (rel != Relation::LessEqual) artificial_col[i] = cols++;
  }

  Tableau t(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    const Rational sign = flipped[i] ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (c.coeffs[j] == 0) continue;
      t.at(i, j) = sign * c.coeffs[j];
      if (lp.free_variables[j]) t.at(i, negative_col[j]) = -sign * c.coeffs[j];
    }
    t.rhs(i) = sign * c.rhs;
    if (slack_col[i]) t.at(i, *slack_col[i]) = c.relation == Relation::LessEqual ? sign : -sign;
    if (artificial_col[i]) {
      t.at(i, *artificial_col[i]) = 1;
      t.basis()[i] = *artificial_col[i];
    } else {
      t.basis()[i] = *slack_col[i];
    }
  }

  LpSolution result;
  std::vector<bool> allowed(cols, true);
  if (first_artificial < cols) {
    RationalVector phase1(cols, Rational(0));
    for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = -1;
    t.optimize(phase1, allowed);
    if (t.objective_value(phase1) < 0) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = t.rows(); i-- > 0;) {
      if (t.basis()[i] < first_artificial) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_artificial && !col; ++j) {
        if (t.at(i, j) != 0) col = j;
      }
      if (col) {
        t.pivot(i, *col);
      } else {
        t.erase_row(i);
      }
    }
    for (std::size_t j = first_artificial; j < cols; ++j) allowed[j] = false;
  }

  RationalVector cost(cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = lp.objective[j];
    if (lp.free_variables[j]) cost[negative_col[j]] = -lp.objective[j];
  }
  if (!t.optimize(cost, allowed)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  auto full = t.solution();
  result.status = LpStatus::Optimal;
  result.value = t.objective_value(cost);
  result.x.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    result.x[j] = full[j];
    if (lp.free_variables[j]) result.x[j] -= full[negative_col[j]];
  }
  return result;
}

}  // namespace ctxlab
