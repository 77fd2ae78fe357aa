#include "ctxlab/linear_program.hpp"

#include <gtest/gtest.h>

namespace ctxlab {
namespace {

TEST(Simplex, TextbookMaximum) {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
  LinearProgram lp(2);
  lp.objective = {Rational(3), Rational(5)};
  lp.add({Rational(1), Rational(0)}, Relation::LessEqual, Rational(4));
  lp.add({Rational(0), Rational(2)}, Relation::LessEqual, Rational(12));
  lp.add({Rational(3), Rational(2)}, Relation::LessEqual, Rational(18));
  auto s = solve(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.value, 36);
  EXPECT_EQ(s.x, (RationalVector{Rational(2), Rational(6)}));
}

TEST(Simplex, EqualitiesAndFractions) {
  // max x subject to x + y = 1, x - 2y >= -1/2 ... x <= 2/3 forced by 3x <= 2
  LinearProgram lp(2);
  lp.objective = {Rational(1), Rational(0)};
  lp.add({Rational(1), Rational(1)}, Relation::Equal, Rational(1));
  lp.add({Rational(3), Rational(0)}, Relation::LessEqual, Rational(2));
  auto s = solve(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.value, Rational(2, 3));
  EXPECT_EQ(s.x[1], Rational(1, 3));
}

TEST(Simplex, Infeasible) {
  LinearProgram lp(1);
  lp.add({Rational(1)}, Relation::GreaterEqual, Rational(2));
  lp.add({Rational(1)}, Relation::LessEqual, Rational(1));
  EXPECT_EQ(solve(lp).status, LpStatus::Infeasible);
}

TEST(Simplex, Unbounded) {
  LinearProgram lp(2);
  lp.objective = {Rational(1), Rational(1)};
  lp.add({Rational(1), Rational(-1)}, Relation::LessEqual, Rational(1));
  EXPECT_EQ(solve(lp).status, LpStatus::Unbounded);
}

TEST(Simplex, FreeVariable) {
  // max -x with x free and x >= -5 -> x = -5
  LinearProgram lp(1);
  lp.objective = {Rational(-1)};
  lp.free_variables[0] = true;
  lp.add({Rational(1)}, Relation::GreaterEqual, Rational(-5));
  auto s = solve(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.x[0], -5);
}

TEST(Simplex, RedundantEqualities) {
  LinearProgram lp(3);
  lp.objective = {Rational(1), Rational(2), Rational(3)};
  lp.add({Rational(1), Rational(1), Rational(1)}, Relation::Equal, Rational(1));
  lp.add({Rational(2), Rational(2), Rational(2)}, Relation::Equal, Rational(2));
  auto s = solve(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.value, 3);
}

TEST(Simplex, DegenerateCycleExample) {
  // Cycles under the largest-coefficient rule; Bland's rule terminates.
  LinearProgram lp(4);
  lp.objective = {Rational(10), Rational(-57), Rational(-9), Rational(-24)};
  lp.add({Rational(1, 2), Rational(-11, 2), Rational(-5, 2), Rational(9)}, Relation::LessEqual, Rational(0));
  lp.add({Rational(1, 2), Rational(-3, 2), Rational(-1, 2), Rational(1)}, Relation::LessEqual, Rational(0));
  lp.add({Rational(1), Rational(0), Rational(0), Rational(0)}, Relation::LessEqual, Rational(1));
  auto s = solve(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.value, 1);
}

}  // namespace
}  // namespace ctxlab
