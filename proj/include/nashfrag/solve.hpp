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

#ifndef NASHFRAG_SOLVE_HPP_
#define NASHFRAG_SOLVE_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>

#include "nashfrag/equilibrium.hpp"
#include "nashfrag/error.hpp"
#include "nashfrag/game.hpp"
#include "nashfrag/newton_support.hpp"
#include "nashfrag/replicator.hpp"
#include "nashfrag/support_enumeration.hpp"

namespace nashfrag {

struct SolveConfig {
  double tol = 1e-6;
  std::uint64_t seed = 0;
  std::size_t profile_budget = kDefaultProfileBudget;
  SupportEnumerationOptions support;
  NewtonSupportOptions newton;
  ReplicatorOptions replicator;
};

// Tries, in order: pure enumeration; support enumeration (two players) or
// Newton support search (three or more); replicator dynamics. Returns the
// first report whose residual is within config.tol. A stage whose budget the
// game exceeds is skipped. Throws SolveFailed if nothing qualifies; an
// equilibrium always exists, so that only means the budgets were too small.
inline EquilibriumReport solve_nash(const Game& game,
                                    const SolveConfig& config = {}) {
  if (!(config.tol >= 0.0)) {
    throw InvalidArgument("tolerance must be non-negative");
  }
  double best = std::numeric_limits<double>::infinity();
  auto first_within = [&](const std::vector<EquilibriumReport>& reports)
      -> std::optional<EquilibriumReport> {
    for (const auto& r : reports) {
      best = std::min(best, r.residual);
      if (r.residual <= config.tol) return r;
    }
    return std::nullopt;
  };

  if (game.num_profiles() <= config.profile_budget) {
    const auto pure = enumerate_pure_nash(game, config.profile_budget);
    if (!pure.empty()) {
      return make_report(game, embed_pure(game, pure.front()),
                         Method::kPureEnumeration);
    }
  }

  try {
    if (game.num_players() == 2) {
      if (auto r = first_within(support_enumeration_2p(game, config.support))) {
        return *r;
      }
    } else {
      NewtonSupportOptions newton = config.newton;
      newton.seed = config.seed;
      newton.stop_at_first = true;
      newton.residual_tol = std::min(newton.residual_tol, config.tol);
      if (auto r = first_within(newton_support_search(game, newton))) {
        return *r;
      }
    }
  } catch (const BudgetExceeded&) {
    // Fall through to the heuristic stage.
  }

  ReplicatorOptions replicator = config.replicator;
  replicator.seed = config.seed;
  replicator.tol = config.tol;
  auto report = replicator_search(game, replicator);
  best = std::min(best, report.residual);
  if (report.residual <= config.tol) return report;
  throw SolveFailed(best, config.tol);
}

}  // namespace nashfrag

#endif  // NASHFRAG_SOLVE_HPP_
