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

#ifndef NASHFRAG_EQUILIBRIUM_HPP_
#define NASHFRAG_EQUILIBRIUM_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nashfrag/error.hpp"
#include "nashfrag/game.hpp"

namespace nashfrag {

inline constexpr std::size_t kDefaultProfileBudget = 10'000'000;

enum class Method {
  kPureEnumeration,
  kSupportEnumeration,
  kNewtonSupport,
  kReplicator,
  kLpMinimax,
};

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::kPureEnumeration: return "pure-enumeration";
    case Method::kSupportEnumeration: return "support-enumeration";
    case Method::kNewtonSupport: return "newton-support";
    case Method::kReplicator: return "replicator";
    case Method::kLpMinimax: return "lp-minimax";
  }
  return "unknown";
}

struct EquilibriumReport {
  MixedProfile profile;
  std::vector<double> payoffs;
  double residual = 0.0;
  bool is_pure = false;
  Method method = Method::kPureEnumeration;
};

// True iff `strategy` is a best strategy for `player` against every
// combination of the other players' pure strategies, i.e. weakly dominant.
// Comparisons are exact on the stored payoffs.
inline bool is_best_strategy(const Game& game, std::size_t player,
                             std::size_t strategy) {
  check_strategy(game, player, strategy);
  const std::size_t stride = game.stride(player);
  const std::size_t m = game.num_strategies(player);
  for (std::size_t index = 0; index < game.num_profiles(); ++index) {
    if ((index / stride) % m != 0) continue;
    // `index` is the profile with player's choice 0; walk the line.
    const double candidate = game.payoff_at(player, index + strategy * stride);
    for (std::size_t s = 0; s < m; ++s) {
      if (game.payoff_at(player, index + s * stride) > candidate) return false;
    }
  }
  return true;
}

// Largest gain any single player can obtain by switching to a pure strategy
// while the others keep sigma, floored at 0. Because payoffs are multilinear,
// a pure switch realizes the best mixed unilateral deviation as well.
inline double nash_residual(const Game& game, const MixedProfile& sigma) {
  check_profile(game, sigma);
  double residual = 0.0;
  for (std::size_t j = 0; j < game.num_players(); ++j) {
    const double current = mixed_payoff(game, j, sigma);
    for (double v : deviation_payoffs(game, j, sigma)) {
      residual = std::max(residual, v - current);
    }
  }
  return residual;
}

inline bool is_nash(const Game& game, const MixedProfile& sigma, double tol) {
  if (!(tol >= 0.0)) {
    throw InvalidArgument("tolerance must be non-negative");
  }
  return nash_residual(game, sigma) <= tol;
}

// Every pure profile satisfying the equilibrium inequality exactly, in
// profile-index order.
inline std::vector<PureProfile> enumerate_pure_nash(
    const Game& game, std::size_t budget = kDefaultProfileBudget) {
  if (game.num_profiles() > budget) {
    throw BudgetExceeded("pure equilibrium enumeration", game.num_profiles(),
                         budget);
  }
  // stable[k] stays true while no player has a profitable switch at k.
  std::vector<bool> stable(game.num_profiles(), true);
  for (std::size_t j = 0; j < game.num_players(); ++j) {
    const std::size_t stride = game.stride(j);
    const std::size_t m = game.num_strategies(j);
    for (std::size_t base = 0; base < game.num_profiles(); ++base) {
      if ((base / stride) % m != 0) continue;
      double best = game.payoff_at(j, base);
      for (std::size_t s = 1; s < m; ++s) {
        best = std::max(best, game.payoff_at(j, base + s * stride));
      }
      for (std::size_t s = 0; s < m; ++s) {
        if (game.payoff_at(j, base + s * stride) < best) {
          stable[base + s * stride] = false;
        }
      }
    }
  }
  std::vector<PureProfile> out;
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    if (stable[k]) out.push_back(index_to_profile(game, k));
  }
  return out;
}

inline EquilibriumReport make_report(const Game& game, MixedProfile profile,
                                     Method method) {
  EquilibriumReport report;
  report.residual = nash_residual(game, profile);
  report.payoffs = payoff_vector(game, profile);
  report.is_pure = as_pure(profile).has_value();
  report.profile = std::move(profile);
  report.method = method;
  return report;
}

namespace detail {

inline std::vector<std::size_t> mask_to_indices(std::size_t mask,
                                                std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < m; ++k) {
    if (mask & (std::size_t{1} << k)) out.push_back(k);
  }
  return out;
}

// Canonical order of reports: total support size, then supports
// lexicographically, then weights lexicographically.
inline bool report_less(const EquilibriumReport& a,
                        const EquilibriumReport& b) {
  auto key = [](const EquilibriumReport& r) {
    std::size_t size = 0;
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& sigma : r.profile.strategies()) {
      supports.push_back(sigma.support());
      size += supports.back().size();
    }
    return std::make_pair(size, supports);
  };
  const auto ka = key(a);
  const auto kb = key(b);
  if (ka != kb) return ka < kb;
  for (std::size_t i = 0; i < a.profile.size(); ++i) {
    if (a.profile[i].weights() != b.profile[i].weights()) {
      return a.profile[i].weights() < b.profile[i].weights();
    }
  }
  return false;
}

inline double linf_distance(const MixedProfile& a, const MixedProfile& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t s = 0; s < a[i].size(); ++s) {
      d = std::max(d, std::abs(a[i][s] - b[i][s]));
    }
  }
  return d;
}

// Builds a mixed strategy from raw solver weights: clamps small negatives and
// renormalizes. Returns nullopt if a weight is below -neg_tol.
inline std::optional<MixedStrategy> clean_weights(std::vector<double> w,
                                                  double neg_tol) {
  double sum = 0.0;
  for (double& v : w) {
    if (!std::isfinite(v) || v < -neg_tol) return std::nullopt;
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (!(sum > 0.0)) return std::nullopt;
  for (double& v : w) v /= sum;
  double check = 0.0;
  for (double v : w) check += v;
  if (std::abs(check - 1.0) > kSimplexTolerance) return std::nullopt;
  return MixedStrategy(std::move(w));
}

}  // namespace detail

}  // namespace nashfrag

#endif  // NASHFRAG_EQUILIBRIUM_HPP_
