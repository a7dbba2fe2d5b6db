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

#ifndef NASHFRAG_ZERO_SUM_HPP_
#define NASHFRAG_ZERO_SUM_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "nashfrag/error.hpp"
#include "nashfrag/game.hpp"
#include "nashfrag/linalg.hpp"
#include "nashfrag/lp.hpp"

namespace nashfrag {

struct ZeroSumSolution {
  double value = 0.0;
  MixedStrategy row_strategy{{1.0}};
  MixedStrategy column_strategy{{1.0}};
  // Guarantees of the returned strategies, recomputed from the matrix:
  // maximin = min_j (x^T A)_j, minimax = max_i (A y)_i.
  double maximin = 0.0;
  double minimax = 0.0;
};

inline constexpr double kZeroSumTolerance = 1e-12;
inline constexpr double kDualityGapTolerance = 1e-9;

inline bool is_zero_sum(const Game& game, double tol = kZeroSumTolerance) {
  if (game.num_players() != 2) return false;
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    if (std::abs(game.payoff_at(0, k) + game.payoff_at(1, k)) > tol) {
      return false;
    }
  }
  return true;
}

// Value and optimal strategies of a two-player zero-sum game, from the row
// player's maximin LP and the column player's minimax LP solved separately.
//
// With A shifted so every entry is at least 1 (value v' > 0):
//   row:    minimize sum u  s.t.  A^T u >= 1, u >= 0;   v' = 1 / sum u
//   column: maximize sum w  s.t.  A w <= 1,   w >= 0;   v' = 1 / sum w
inline ZeroSumSolution zero_sum_value(const Game& game,
                                      const LpOptions& lp_options = {}) {
  if (game.num_players() != 2) {
    throw InvalidArgument("zero-sum value needs exactly 2 players, got " +
                          std::to_string(game.num_players()));
  }
  if (!is_zero_sum(game)) {
    throw NotZeroSum("payoffs of the two players do not sum to zero");
  }
  const std::size_t m1 = game.num_strategies(0);
  const std::size_t m2 = game.num_strategies(1);
  auto a = [&](std::size_t i, std::size_t j) {
    return game.payoff_at(0, i * m2 + j);
  };
  const auto h1 = game.payoffs(0);
  const double shift = 1.0 - *std::min_element(h1.begin(), h1.end());

  LinearProgram row_lp;
  row_lp.constraints = Matrix(m2, m1);
  row_lp.bounds.assign(m2, 1.0);
  row_lp.relations.assign(m2, Relation::kGreaterEqual);
  row_lp.objective.assign(m1, -1.0);
  for (std::size_t j = 0; j < m2; ++j) {
    for (std::size_t i = 0; i < m1; ++i) {
      row_lp.constraints(j, i) = a(i, j) + shift;
    }
  }
  const LpSolution row = lp_solve(row_lp, lp_options);

  Matrix col_a(m1, m2);
  for (std::size_t i = 0; i < m1; ++i) {
    for (std::size_t j = 0; j < m2; ++j) col_a(i, j) = a(i, j) + shift;
  }
  const LpSolution col = lp_solve(std::move(col_a), std::vector<double>(m1, 1.0),
                                  std::vector<double>(m2, 1.0), lp_options);

  const double row_total = -row.objective;
  const double col_total = col.objective;
  const double v_row = 1.0 / row_total - shift;
  const double v_col = 1.0 / col_total - shift;

  std::vector<double> x(m1), y(m2);
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < m1; ++i) sx += (x[i] = row.x[i]);
  for (std::size_t j = 0; j < m2; ++j) sy += (y[j] = col.x[j]);
  for (double& v : x) v /= sx;
  for (double& v : y) v /= sy;

  ZeroSumSolution out;
  out.row_strategy = MixedStrategy(std::move(x));
  out.column_strategy = MixedStrategy(std::move(y));
  out.maximin = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m2; ++j) {
    double v = 0.0;
    for (std::size_t i = 0; i < m1; ++i) v += out.row_strategy[i] * a(i, j);
    out.maximin = std::min(out.maximin, v);
  }
  out.minimax = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m1; ++i) {
    double v = 0.0;
    for (std::size_t j = 0; j < m2; ++j) v += a(i, j) * out.column_strategy[j];
    out.minimax = std::max(out.minimax, v);
  }
  out.value = v_row;
  if (std::abs(v_row - v_col) > kDualityGapTolerance ||
      std::abs(out.maximin - out.minimax) > kDualityGapTolerance) {
    throw Error("zero-sum duality gap exceeds tolerance: maximin " +
                std::to_string(out.maximin) + ", minimax " +
                std::to_string(out.minimax));
  }
  return out;
}

}  // namespace nashfrag

#endif  // NASHFRAG_ZERO_SUM_HPP_
