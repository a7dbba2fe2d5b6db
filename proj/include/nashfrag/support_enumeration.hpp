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

#ifndef NASHFRAG_SUPPORT_ENUMERATION_HPP_
#define NASHFRAG_SUPPORT_ENUMERATION_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "nashfrag/equilibrium.hpp"
#include "nashfrag/error.hpp"
#include "nashfrag/game.hpp"
#include "nashfrag/linalg.hpp"

namespace nashfrag {

struct SupportEnumerationOptions {
  // Largest strategy count allowed for either player.
  std::size_t max_strategies = 8;
  double negative_tol = 1e-9;
  double residual_tol = 1e-9;
  double dedup_distance = 1e-7;
};

namespace detail {

// Weights over `own` (the responder's support) that make every strategy in
// `opponent` earn the same payoff for the opponent, plus normalization.
// `opp_payoff(o, r)` is the opponent's payoff when it plays o and the
// responder plays r.
template <typename PayoffFn>
std::optional<MixedStrategy> indifference_weights(
    std::size_t m_own, const std::vector<std::size_t>& own,
    const std::vector<std::size_t>& opponent, PayoffFn opp_payoff,
    double negative_tol) {
  const std::size_t unknowns = own.size() + 1;
  Matrix a(opponent.size() + 1, unknowns);
  std::vector<double> b(opponent.size() + 1, 0.0);
  for (std::size_t r = 0; r < opponent.size(); ++r) {
    for (std::size_t c = 0; c < own.size(); ++c) {
      a(r, c) = opp_payoff(opponent[r], own[c]);
    }
    a(r, own.size()) = -1.0;
  }
  for (std::size_t c = 0; c < own.size(); ++c) a(opponent.size(), c) = 1.0;
  b[opponent.size()] = 1.0;
  auto solved = solve_linear_system(std::move(a), std::move(b));
  if (!solved) return std::nullopt;
  std::vector<double> full(m_own, 0.0);
  for (std::size_t c = 0; c < own.size(); ++c) full[own[c]] = (*solved)[c];
  return clean_weights(std::move(full), negative_tol);
}

}  // namespace detail

// All equilibria of a two-player game reachable by support enumeration: every
// pair of non-empty supports (sizes need not match) is tried, the
// indifference-plus-normalization systems are solved, and solutions that pass
// the residual check are kept. One representative per support pair.
inline std::vector<EquilibriumReport> support_enumeration_2p(
    const Game& game, const SupportEnumerationOptions& opt = {}) {
  if (game.num_players() != 2) {
    throw InvalidArgument("support enumeration needs exactly 2 players, got " +
                          std::to_string(game.num_players()));
  }
  const std::size_t m1 = game.num_strategies(0);
  const std::size_t m2 = game.num_strategies(1);
  const std::size_t largest = std::max(m1, m2);
  if (largest > opt.max_strategies) {
    throw BudgetExceeded("support enumeration strategy cap", largest,
                         opt.max_strategies);
  }
  auto h1 = [&](std::size_t r, std::size_t c) {
    return game.payoff_at(0, r * m2 + c);
  };
  auto h2 = [&](std::size_t r, std::size_t c) {
    return game.payoff_at(1, r * m2 + c);
  };

  std::vector<EquilibriumReport> found;
  for (std::size_t mask1 = 1; mask1 < (std::size_t{1} << m1); ++mask1) {
    const auto rows = detail::mask_to_indices(mask1, m1);
    for (std::size_t mask2 = 1; mask2 < (std::size_t{1} << m2); ++mask2) {
      const auto cols = detail::mask_to_indices(mask2, m2);
      // Player 2's mix makes player 1 indifferent over `rows`.
      auto y = detail::indifference_weights(
          m2, cols, rows, [&](std::size_t r, std::size_t c) { return h1(r, c); },
          opt.negative_tol);
      if (!y) continue;
      auto x = detail::indifference_weights(
          m1, rows, cols, [&](std::size_t c, std::size_t r) { return h2(r, c); },
          opt.negative_tol);
      if (!x) continue;
      MixedProfile sigma({*x, *y});
      if (nash_residual(game, sigma) > opt.residual_tol) continue;
      const bool duplicate = std::any_of(
          found.begin(), found.end(), [&](const EquilibriumReport& r) {
            return detail::linf_distance(r.profile, sigma) < opt.dedup_distance;
          });
      if (duplicate) continue;
      found.push_back(
          make_report(game, std::move(sigma), Method::kSupportEnumeration));
    }
  }
  std::sort(found.begin(), found.end(), detail::report_less);
  return found;
}

}  // namespace nashfrag

#endif  // NASHFRAG_SUPPORT_ENUMERATION_HPP_
