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

#ifndef NASHFRAG_STABILITY_HPP_
#define NASHFRAG_STABILITY_HPP_

// Coalition deviations from an equilibrium.
//
// A Nash equilibrium only rules out profitable moves by one player at a time.
// This module asks what happens once several players may move together: a
// joint deviation by a coalition is profitable when EVERY member strictly
// gains while non-members keep their equilibrium strategies. The smallest
// coalition size admitting such a move (k*) measures how much an equilibrium
// depends on the single-deviator agreement.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nashfrag/combinatorics.hpp"
#include "nashfrag/equilibrium.hpp"
#include "nashfrag/error.hpp"
#include "nashfrag/game.hpp"
#include "nashfrag/random.hpp"

namespace nashfrag {

inline constexpr double kPureDeviationTolerance = 1e-9;
inline constexpr double kMixedDeviationTolerance = 1e-6;
inline constexpr double kEquilibriumTolerance = 1e-6;

// Strictly increasing, non-empty list of 0-based player indices.
class Coalition {
 public:
  explicit Coalition(std::vector<std::size_t> members)
      : members_(std::move(members)) {
    if (members_.empty()) throw InvalidArgument("coalition must be non-empty");
    for (std::size_t k = 1; k < members_.size(); ++k) {
      if (members_[k] <= members_[k - 1]) {
        throw InvalidArgument("coalition members must be strictly increasing");
      }
    }
  }

  std::size_t size() const { return members_.size(); }
  std::size_t operator[](std::size_t k) const { return members_[k]; }
  const std::vector<std::size_t>& members() const { return members_; }
  bool contains(std::size_t player) const {
    return std::binary_search(members_.begin(), members_.end(), player);
  }

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  std::vector<std::size_t> members_;
};

inline void check_coalition(const Game& game, const Coalition& coalition) {
  if (coalition.members().back() >= game.num_players()) {
    throw InvalidArgument("coalition member " +
                          std::to_string(coalition.members().back() + 1) +
                          " out of range 1.." +
                          std::to_string(game.num_players()));
  }
}

// All coalitions of sizes kmin..kmax over n players, by size and then
// lexicographically.
inline std::vector<Coalition> coalitions(std::size_t n, std::size_t kmin,
                                         std::size_t kmax) {
  if (kmin < 1 || kmin > kmax || kmax > n) {
    throw InvalidArgument("coalition sizes must satisfy 1 <= kmin <= kmax <= n"
                          " (got kmin " + std::to_string(kmin) + ", kmax " +
                          std::to_string(kmax) + ", n " + std::to_string(n) +
                          ")");
  }
  std::vector<Coalition> out;
  for (auto& s : detail::subsets_by_size(n, kmin, kmax)) {
    out.emplace_back(std::move(s));
  }
  return out;
}

// Simultaneous pure strategy change by every member of a coalition.
struct PureDeviation {
  Coalition coalition{{0}};
  // strategies[k] is the new strategy of coalition[k].
  std::vector<std::size_t> strategies;
  // gains[k] is coalition[k]'s payoff improvement over the base profile.
  std::vector<double> gains;
};

struct MixedDeviation {
  Coalition coalition{{0}};
  std::vector<MixedStrategy> strategies;
  std::vector<double> gains;
};

inline MixedProfile apply_deviation(const Game& game, const MixedProfile& base,
                                    const PureDeviation& deviation) {
  MixedProfile out = base;
  for (std::size_t k = 0; k < deviation.coalition.size(); ++k) {
    const std::size_t player = deviation.coalition[k];
    out = out.With(player, MixedStrategy::PointMass(game.num_strategies(player),
                                                    deviation.strategies[k]));
  }
  return out;
}

inline MixedProfile apply_deviation(const MixedProfile& base,
                                    const MixedDeviation& deviation) {
  MixedProfile out = base;
  for (std::size_t k = 0; k < deviation.coalition.size(); ++k) {
    out = out.With(deviation.coalition[k], deviation.strategies[k]);
  }
  return out;
}

// Per-member payoff changes when `deviated` replaces `base`.
inline std::vector<double> coalition_gains(const Game& game,
                                           const MixedProfile& base,
                                           const MixedProfile& deviated,
                                           const Coalition& coalition) {
  std::vector<double> gains(coalition.size());
  for (std::size_t k = 0; k < coalition.size(); ++k) {
    const std::size_t player = coalition[k];
    gains[k] =
        mixed_payoff(game, player, deviated) - mixed_payoff(game, player, base);
  }
  return gains;
}

// First joint pure assignment, in lexicographic order over the members'
// strategies (last member fastest), under which every member's expected
// payoff rises by more than `tol`. An empty result is exhaustive.
inline std::optional<PureDeviation> find_pure_coalition_deviation(
    const Game& game, const MixedProfile& base, const Coalition& coalition,
    double tol = kPureDeviationTolerance) {
  check_profile(game, base);
  check_coalition(game, coalition);
  const std::size_t k = coalition.size();
  std::vector<double> base_payoffs(k);
  for (std::size_t r = 0; r < k; ++r) {
    base_payoffs[r] = mixed_payoff(game, coalition[r], base);
  }
  PureDeviation candidate{coalition, std::vector<std::size_t>(k, 0),
                          std::vector<double>(k, 0.0)};
  for (;;) {
    const MixedProfile deviated = apply_deviation(game, base, candidate);
    bool all_gain = true;
    for (std::size_t r = 0; r < k && all_gain; ++r) {
      candidate.gains[r] =
          mixed_payoff(game, coalition[r], deviated) - base_payoffs[r];
      all_gain = candidate.gains[r] > tol;
    }
    if (all_gain) return candidate;
    std::size_t r = k;
    while (r-- > 0) {
      if (++candidate.strategies[r] < game.num_strategies(coalition[r])) break;
      candidate.strategies[r] = 0;
    }
    if (r == static_cast<std::size_t>(-1)) return std::nullopt;
  }
}

// Smallest coalition (sizes 2..kmax, then lexicographic) with a profitable
// joint pure deviation. k* is the witness's coalition size.
inline std::optional<PureDeviation> min_destabilizing_coalition(
    const Game& game, const MixedProfile& base, std::size_t kmax,
    double tol = kPureDeviationTolerance) {
  if (kmax < 1 || kmax > game.num_players()) {
    throw InvalidArgument("kmax must be in 1.." +
                          std::to_string(game.num_players()) + ", got " +
                          std::to_string(kmax));
  }
  check_profile(game, base);
  if (kmax < 2) return std::nullopt;
  for (const Coalition& c : coalitions(game.num_players(), 2, kmax)) {
    if (auto d = find_pure_coalition_deviation(game, base, c, tol)) return d;
  }
  return std::nullopt;
}

enum class Fragility { kC1Dependent, kCoalitionRobust };

inline std::string_view fragility_name(Fragility f) {
  return f == Fragility::kC1Dependent ? "C1-dependent" : "coalition-robust";
}

struct FragilityReport {
  Fragility classification = Fragility::kCoalitionRobust;
  MixedProfile base_profile;
  std::size_t kmax_checked = 0;
  // Set iff C1-dependent.
  std::optional<PureDeviation> witness;

  bool c1_dependent() const {
    return classification == Fragility::kC1Dependent;
  }
  std::size_t k_star() const { return witness ? witness->coalition.size() : 0; }
};

// C1-dependent when some coalition of size 2..kmax has a profitable joint
// pure deviation, otherwise coalition-robust up to kmax (a strong-equilibrium
// certificate at pure-deviation granularity when kmax = n).
inline FragilityReport classify_equilibrium(
    const Game& game, const MixedProfile& equilibrium, std::size_t kmax,
    double equilibrium_tol = kEquilibriumTolerance) {
  const double residual = nash_residual(game, equilibrium);
  if (residual > equilibrium_tol) {
    throw NotEquilibrium(residual, equilibrium_tol);
  }
  FragilityReport report;
  report.base_profile = equilibrium;
  report.kmax_checked = kmax;
  report.witness = min_destabilizing_coalition(game, equilibrium, kmax);
  report.classification =
      report.witness ? Fragility::kC1Dependent : Fragility::kCoalitionRobust;
  return report;
}

struct MixedSearchOptions {
  std::uint64_t seed = 0;
  std::size_t starts = 16;
  std::size_t iterations = 2000;
  double tol = kMixedDeviationTolerance;
};

// Multi-start hill climb over the members' simplices (non-members fixed)
// maximizing the smallest member gain. Moves shift a random fraction of one
// member's mass toward one of its pure strategies; only improving moves are
// kept. Returns the first point where every member gains more than opt.tol.
// Heuristic: an empty result proves nothing.
inline std::optional<MixedDeviation> mixed_deviation_search(
    const Game& game, const MixedProfile& equilibrium,
    const Coalition& coalition, const MixedSearchOptions& opt = {}) {
  check_profile(game, equilibrium);
  check_coalition(game, coalition);
  const std::size_t k = coalition.size();
  std::vector<double> base_payoffs(k);
  for (std::size_t r = 0; r < k; ++r) {
    base_payoffs[r] = mixed_payoff(game, coalition[r], equilibrium);
  }

  auto profile_of = [&](const std::vector<std::vector<double>>& w) {
    MixedProfile out = equilibrium;
    for (std::size_t r = 0; r < k; ++r) {
      out = out.With(coalition[r],
                     detail::clean_weights(w[r], 0.0).value_or(
                         equilibrium[coalition[r]]));
    }
    return out;
  };
  auto min_gain = [&](const MixedProfile& sigma) {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < k; ++r) {
      g = std::min(g, mixed_payoff(game, coalition[r], sigma) - base_payoffs[r]);
    }
    return g;
  };

  SplitMix64 rng(opt.seed);
  for (std::size_t start = 0; start < opt.starts; ++start) {
    std::vector<std::vector<double>> w(k);
    for (std::size_t r = 0; r < k; ++r) {
      w[r].resize(game.num_strategies(coalition[r]));
      double sum = 0.0;
      for (double& v : w[r]) sum += (v = 0.05 + rng.uniform());
      for (double& v : w[r]) v /= sum;
    }
    MixedProfile sigma = profile_of(w);
    double value = min_gain(sigma);
    double step = 0.5;
    for (std::size_t it = 0; it <= opt.iterations; ++it) {
      if (value > opt.tol) {
        MixedDeviation out{coalition, {}, {}};
        for (std::size_t r = 0; r < k; ++r) {
          out.strategies.push_back(sigma[coalition[r]]);
        }
        out.gains = coalition_gains(game, equilibrium, sigma, coalition);
        return out;
      }
      if (it == opt.iterations) break;
      const std::size_t r = static_cast<std::size_t>(rng.below(k));
      const std::size_t target =
          static_cast<std::size_t>(rng.below(w[r].size()));
      const double alpha = step * (1e-3 + rng.uniform());
      auto trial = w;
      for (std::size_t s = 0; s < trial[r].size(); ++s) {
        trial[r][s] = (1.0 - alpha) * trial[r][s] + (s == target ? alpha : 0.0);
      }
      MixedProfile trial_sigma = profile_of(trial);
      const double trial_value = min_gain(trial_sigma);
      if (trial_value > value) {
        w = std::move(trial);
        sigma = std::move(trial_sigma);
        value = trial_value;
        step = std::min(1.0, step * 1.25);
      } else {
        step = std::max(1e-3, step * 0.95);
      }
    }
  }
  return std::nullopt;
}

struct CooperationGainReport {
  std::vector<double> base_payoffs;
  // Pure profiles whose payoff vector weakly dominates the base with at least
  // one strict improvement, in profile-index order.
  std::vector<PureProfile> pareto_improvers;
  // Largest total payoff over all pure profiles minus the base total.
  double best_welfare_gap = 0.0;
  // Per player: largest improvement among the Pareto improvers (0 if none).
  std::vector<double> max_gains;
};

inline CooperationGainReport cooperation_gain(
    const Game& game, const MixedProfile& base,
    std::size_t budget = kDefaultProfileBudget,
    double tol = kPureDeviationTolerance) {
  check_profile(game, base);
  if (game.num_profiles() > budget) {
    throw BudgetExceeded("cooperation gain enumeration", game.num_profiles(),
                         budget);
  }
  const std::size_t n = game.num_players();
  CooperationGainReport report;
  report.base_payoffs = payoff_vector(game, base);
  report.max_gains.assign(n, 0.0);
  double base_total = 0.0;
  for (double v : report.base_payoffs) base_total += v;
  double best_total = -std::numeric_limits<double>::infinity();
  for (std::size_t index = 0; index < game.num_profiles(); ++index) {
    double total = 0.0;
    bool weak = true;
    bool strict = false;
    for (std::size_t i = 0; i < n; ++i) {
      const double h = game.payoff_at(i, index);
      total += h;
      const double gain = h - report.base_payoffs[i];
      if (gain < -tol) weak = false;
      if (gain > tol) strict = true;
    }
    best_total = std::max(best_total, total);
    if (weak && strict) {
      report.pareto_improvers.push_back(index_to_profile(game, index));
      for (std::size_t i = 0; i < n; ++i) {
        report.max_gains[i] = std::max(
            report.max_gains[i], game.payoff_at(i, index) - report.base_payoffs[i]);
      }
    }
  }
  report.best_welfare_gap = best_total - base_total;
  return report;
}

}  // namespace nashfrag

#endif  // NASHFRAG_STABILITY_HPP_
