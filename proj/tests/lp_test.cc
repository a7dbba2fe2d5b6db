// Copyright 2026 The nashfrag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nashfrag/lp.hpp"

#include <gtest/gtest.h>

#include "nashfrag/builtins.hpp"
#include "nashfrag/support_enumeration.hpp"
#include "nashfrag/zero_sum.hpp"

namespace nashfrag {
namespace {

Matrix make_matrix(std::vector<std::vector<double>> rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

TEST(LpSolve, SingleConstraint) {
  const LpSolution s = lp_solve(make_matrix({{1}}), {1}, {1});
  EXPECT_NEAR(s.x[0], 1.0, 1e-12);
  EXPECT_NEAR(s.objective, 1.0, 1e-12);
}

TEST(LpSolve, EdgeOptimum) {
  const LpSolution s = lp_solve(make_matrix({{1, 1}}), {1}, {1, 1});
  EXPECT_NEAR(s.objective, 1.0, 1e-12);
  // Bland's rule enters x first and stops at the vertex (1, 0).
  EXPECT_NEAR(s.x[0], 1.0, 1e-12);
  EXPECT_NEAR(s.x[1], 0.0, 1e-12);
}

TEST(LpSolve, Infeasible) {
  try {
    lp_solve(make_matrix({{1}}), {-1}, {1});
    FAIL() << "expected LpError";
  } catch (const LpError& e) {
    EXPECT_EQ(e.kind(), LpError::Kind::kInfeasible);
  }
}

TEST(LpSolve, Unbounded) {
  try {
    lp_solve(make_matrix({{1, -1}}), {1}, {1, 0});
    FAIL() << "expected LpError";
  } catch (const LpError& e) {
    EXPECT_EQ(e.kind(), LpError::Kind::kUnbounded);
  }
}

TEST(LpSolve, MixedRelationsTextbook) {
  // max 3x + 2y  s.t.  x + y <= 4,  x + 3y >= 6,  x - y = 0.
  LinearProgram lp{make_matrix({{1, 1}, {1, 3}, {1, -1}}),
                   {4, 6, 0},
                   {Relation::kLessEqual, Relation::kGreaterEqual,
                    Relation::kEqual},
                   {3, 2}};
  const LpSolution s = lp_solve(lp);
  EXPECT_NEAR(s.x[0], 2.0, 1e-12);
  EXPECT_NEAR(s.x[1], 2.0, 1e-12);
  EXPECT_NEAR(s.objective, 10.0, 1e-12);
}

TEST(LpSolve, RedundantEqualityRows) {
  LinearProgram lp{make_matrix({{1, 1}, {2, 2}}),
                   {1, 2},
                   {Relation::kEqual, Relation::kEqual},
                   {1, 2}};
  const LpSolution s = lp_solve(lp);
  EXPECT_NEAR(s.objective, 2.0, 1e-12);
}

TEST(LpSolve, DegenerateCycleProneProgram) {
  // Beale's example cycles under the largest-coefficient rule; Bland's rule
  // terminates. Optimum 1/20 at x = (1/25, 0, 1, 0).
  LinearProgram lp{make_matrix({{0.25, -60, -0.04, 9},
                                {0.5, -90, -0.02, 3},
                                {0, 0, 1, 0}}),
                   {0, 0, 1},
                   {},
                   {0.75, -150, 0.02, -6}};
  const LpSolution s = lp_solve(lp);
  EXPECT_NEAR(s.objective, 0.05, 1e-12);
}

TEST(LpSolve, IterationCap) {
  LpOptions opt;
  opt.max_iterations = 0;
  try {
    lp_solve(make_matrix({{1}}), {1}, {1}, opt);
    FAIL() << "expected LpError";
  } catch (const LpError& e) {
    EXPECT_EQ(e.kind(), LpError::Kind::kIterationLimit);
  }
}

TEST(LpSolve, ShapeErrors) {
  EXPECT_THROW(lp_solve(make_matrix({{1}}), {1, 2}, {1}), InvalidArgument);
  EXPECT_THROW(lp_solve(make_matrix({{1}}), {1}, {1, 2}), InvalidArgument);
}

TEST(ZeroSumValue, MatchingPennies) {
  const ZeroSumSolution s = zero_sum_value(matching_pennies());
  EXPECT_NEAR(s.value, 0.0, 1e-12);
  EXPECT_NEAR(s.row_strategy[0], 0.5, 1e-12);
  EXPECT_NEAR(s.column_strategy[0], 0.5, 1e-12);
}

TEST(ZeroSumValue, MixedTwoByTwo) {
  // Row mix p: 3p = p + 2(1 - p) gives p = 1/2, v = 3/2; column q = 1/4.
  const ZeroSumSolution s = zero_sum_value(zero_sum_game({{3, 1}, {0, 2}}));
  EXPECT_NEAR(s.value, 1.5, 1e-12);
  EXPECT_NEAR(s.row_strategy[0], 0.5, 1e-12);
  EXPECT_NEAR(s.column_strategy[0], 0.25, 1e-12);
  EXPECT_NEAR(s.maximin, s.minimax, 1e-9);
}

TEST(ZeroSumValue, PureSaddle) {
  const ZeroSumSolution s = zero_sum_value(zero_sum_game({{2, 3}, {0, 1}}));
  EXPECT_NEAR(s.value, 2.0, 1e-12);
  EXPECT_NEAR(s.row_strategy[0], 1.0, 1e-12);
  EXPECT_NEAR(s.column_strategy[0], 1.0, 1e-12);
}

TEST(ZeroSumValue, RockPaperScissors) {
  const ZeroSumSolution s = zero_sum_value(rock_paper_scissors());
  EXPECT_NEAR(s.value, 0.0, 1e-12);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_NEAR(s.row_strategy[k], 1.0 / 3, 1e-12);
    EXPECT_NEAR(s.column_strategy[k], 1.0 / 3, 1e-12);
  }
}

TEST(ZeroSumValue, Errors) {
  EXPECT_THROW(zero_sum_value(prisoners_dilemma()), NotZeroSum);
  EXPECT_THROW(zero_sum_value(public_goods()), InvalidArgument);
}

TEST(ZeroSumValue, AntisymmetryUnderPlayerSwap) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t rows = 1 + seed % 5, cols = 1 + (seed / 5) % 5;
    const Game g = random_zero_sum_game(rows, cols, seed);
    // Swapped game: new row player is the old column player, with matrix
    // -A^T.
    std::vector<std::vector<double>> swapped(cols, std::vector<double>(rows));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        swapped[j][i] = -g.payoff_at(0, i * cols + j);
      }
    }
    const double v = zero_sum_value(g).value;
    EXPECT_NEAR(zero_sum_value(zero_sum_game(swapped)).value, -v, 1e-9);
  }
}

TEST(ZeroSumValue, AgreesWithSupportEnumeration) {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const Game g = random_zero_sum_game(2 + seed % 4, 2 + (seed / 4) % 4, seed);
    const ZeroSumSolution s = zero_sum_value(g);
    EXPECT_LE(std::abs(s.maximin - s.minimax), 1e-9);
    const auto equilibria = support_enumeration_2p(g);
    ASSERT_FALSE(equilibria.empty());
    for (const auto& e : equilibria) EXPECT_NEAR(e.payoffs[0], s.value, 1e-7);
  }
}

}  // namespace
}  // namespace nashfrag
