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

#ifndef NASHFRAG_GAME_HPP_
#define NASHFRAG_GAME_HPP_

// Finite n-player normal-form games, their pure and mixed strategy profiles,
// and the payoff primitives everything else is built on.
//
// All indices in this API are 0-based. The text format, the CLI and the JSON
// reports translate to 1-based player and strategy numbers at their borders.
//
// Pure profiles are enumerated lexicographically with the LAST player's
// strategy varying fastest, so a two-player payoff list reads as the rows of
// player 1's matrix.

#include <cmath>
#include <compare>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nashfrag/error.hpp"

namespace nashfrag {

// Tolerance on the simplex constraint of a mixed strategy.
inline constexpr double kSimplexTolerance = 1e-12;

// One strategy index per player.
class PureProfile {
 public:
  PureProfile() = default;
  explicit PureProfile(std::vector<std::size_t> choices)
      : choices_(std::move(choices)) {}
  PureProfile(std::initializer_list<std::size_t> choices) : choices_(choices) {}

  std::size_t size() const { return choices_.size(); }
  std::size_t operator[](std::size_t player) const { return choices_[player]; }
  const std::vector<std::size_t>& choices() const { return choices_; }
  auto begin() const { return choices_.begin(); }
  auto end() const { return choices_.end(); }

  friend bool operator==(const PureProfile&, const PureProfile&) = default;
  friend auto operator<=>(const PureProfile&, const PureProfile&) = default;

 private:
  std::vector<std::size_t> choices_;
};

// A probability vector over one player's strategies. Construction accepts
// vectors whose sum is within kSimplexTolerance of 1 and renormalizes them;
// anything further off, or any negative or non-finite weight, is rejected.
class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<double> weights)
      : weights_(std::move(weights)) {
    if (weights_.empty()) {
      throw InvalidArgument("mixed strategy needs at least one weight");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < weights_.size(); ++k) {
      const double w = weights_[k];
      if (!std::isfinite(w) || w < 0.0) {
        throw InvalidArgument("mixed strategy weight " + std::to_string(k + 1) +
                              " is not a non-negative finite number");
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > kSimplexTolerance) {
      throw InvalidArgument("mixed strategy weights sum to " +
                            std::to_string(sum) + ", expected 1");
    }
    if (sum != 1.0) {
      for (double& w : weights_) w /= sum;
    }
  }

  static MixedStrategy PointMass(std::size_t num_strategies,
                                 std::size_t strategy) {
    if (strategy >= num_strategies) {
      throw InvalidArgument("point mass on strategy " +
                            std::to_string(strategy + 1) + " of " +
                            std::to_string(num_strategies));
    }
    std::vector<double> w(num_strategies, 0.0);
    w[strategy] = 1.0;
    return MixedStrategy(std::move(w));
  }

  static MixedStrategy Uniform(std::size_t num_strategies) {
    return MixedStrategy(std::vector<double>(
        num_strategies, 1.0 / static_cast<double>(num_strategies)));
  }

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t s) const { return weights_[s]; }
  const std::vector<double>& weights() const { return weights_; }

  // Indices with strictly positive weight.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < weights_.size(); ++s) {
      if (weights_[s] > 0.0) out.push_back(s);
    }
    return out;
  }

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  std::vector<double> weights_;
};

// Independent product of per-player mixed strategies.
class MixedProfile {
 public:
  MixedProfile() = default;
  explicit MixedProfile(std::vector<MixedStrategy> strategies)
      : strategies_(std::move(strategies)) {}

  std::size_t size() const { return strategies_.size(); }
  const MixedStrategy& operator[](std::size_t player) const {
    return strategies_[player];
  }
  const std::vector<MixedStrategy>& strategies() const { return strategies_; }

  // Copy with one player's strategy replaced.
  MixedProfile With(std::size_t player, MixedStrategy strategy) const {
    MixedProfile out = *this;
    out.strategies_.at(player) = std::move(strategy);
    return out;
  }

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;

 private:
  std::vector<MixedStrategy> strategies_;
};

class Game {
 public:
  // `labels` is either empty (no labels for anyone) or has one entry per
  // player, each either empty or holding exactly m_i unique strings. Labels
  // are single tokens: non-empty, no whitespace, no '#', and none of the
  // text format's directive names.
  Game(std::vector<std::size_t> strategy_counts,
       std::vector<std::vector<double>> payoffs,
       std::vector<std::vector<std::string>> labels = {})
      : counts_(std::move(strategy_counts)),
        payoffs_(std::move(payoffs)),
        labels_(std::move(labels)) {
    const std::size_t n = counts_.size();
    if (n < 2) {
      throw InvalidArgument("a game needs at least 2 players, got " +
                            std::to_string(n));
    }
    num_profiles_ = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (counts_[i] < 1) {
        throw InvalidArgument("player " + std::to_string(i + 1) +
                              ": needs at least 1 strategy");
      }
      if (num_profiles_ > std::numeric_limits<std::size_t>::max() / counts_[i]) {
        throw InvalidArgument("number of pure profiles overflows");
      }
      num_profiles_ *= counts_[i];
    }
    strides_.assign(n, 1);
    for (std::size_t i = n - 1; i > 0; --i) {
      strides_[i - 1] = strides_[i] * counts_[i];
    }
    if (payoffs_.size() != n) {
      throw InvalidArgument("expected payoff lists for " + std::to_string(n) +
                            " players, got " + std::to_string(payoffs_.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (payoffs_[i].size() != num_profiles_) {
        throw InvalidArgument(
            "player " + std::to_string(i + 1) + ": expected " +
            std::to_string(num_profiles_) + " payoff values, got " +
            std::to_string(payoffs_[i].size()));
      }
      for (std::size_t k = 0; k < num_profiles_; ++k) {
        if (!std::isfinite(payoffs_[i][k])) {
          throw InvalidArgument("player " + std::to_string(i + 1) +
                                ": payoff at profile index " +
                                std::to_string(k) + " is not finite");
        }
      }
    }
    if (labels_.empty()) labels_.resize(n);
    if (labels_.size() != n) {
      throw InvalidArgument("expected label lists for " + std::to_string(n) +
                            " players, got " + std::to_string(labels_.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (labels_[i].empty()) continue;
      if (labels_[i].size() != counts_[i]) {
        throw InvalidArgument("player " + std::to_string(i + 1) +
                              ": expected " + std::to_string(counts_[i]) +
                              " labels, got " +
                              std::to_string(labels_[i].size()));
      }
      std::set<std::string> seen;
      for (std::size_t s = 0; s < counts_[i]; ++s) {
        const std::string& label = labels_[i][s];
        if (label.empty() ||
            label.find_first_of(" \t\n\r\v\f#") != std::string::npos ||
            label == "players" || label == "strategies" || label == "labels" ||
            label == "payoffs") {
          throw InvalidArgument("player " + std::to_string(i + 1) +
                                ": label of strategy " + std::to_string(s + 1) +
                                " must be a non-empty token without "
                                "whitespace or '#' and not a directive name");
        }
        if (!seen.insert(labels_[i][s]).second) {
          throw InvalidArgument("player " + std::to_string(i + 1) +
                                ": duplicate label '" + labels_[i][s] +
                                "' at strategy " + std::to_string(s + 1));
        }
      }
    }
  }

  std::size_t num_players() const { return counts_.size(); }
  std::size_t num_strategies(std::size_t player) const {
    return counts_.at(player);
  }
  const std::vector<std::size_t>& strategy_counts() const { return counts_; }
  std::size_t num_profiles() const { return num_profiles_; }

  // Distance in profile-index space between profiles that differ by one in
  // `player`'s coordinate.
  std::size_t stride(std::size_t player) const { return strides_.at(player); }

  std::span<const double> payoffs(std::size_t player) const {
    return payoffs_.at(player);
  }
  double payoff_at(std::size_t player, std::size_t profile_index) const {
    return payoffs_[player][profile_index];
  }

  bool has_labels(std::size_t player) const {
    return !labels_.at(player).empty();
  }
  const std::vector<std::string>& labels(std::size_t player) const {
    return labels_.at(player);
  }
  // Label if present, otherwise the 1-based strategy number.
  std::string strategy_name(std::size_t player, std::size_t strategy) const {
    if (has_labels(player)) return labels_[player].at(strategy);
    return std::to_string(strategy + 1);
  }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::vector<std::size_t> counts_;
  std::vector<std::vector<double>> payoffs_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_ = 0;
};

inline Game build_game(std::size_t player_count,
                       std::vector<std::size_t> strategy_counts,
                       std::vector<std::vector<double>> payoff_lists,
                       std::vector<std::vector<std::string>> labels = {}) {
  if (player_count < 2) {
    throw InvalidArgument("a game needs at least 2 players, got " +
                          std::to_string(player_count));
  }
  if (strategy_counts.size() != player_count) {
    throw InvalidArgument("expected " + std::to_string(player_count) +
                          " strategy counts, got " +
                          std::to_string(strategy_counts.size()));
  }
  return Game(std::move(strategy_counts), std::move(payoff_lists),
              std::move(labels));
}

inline void check_player(const Game& game, std::size_t player) {
  if (player >= game.num_players()) {
    throw InvalidArgument("player " + std::to_string(player + 1) +
                          " out of range 1.." +
                          std::to_string(game.num_players()));
  }
}

inline void check_strategy(const Game& game, std::size_t player,
                           std::size_t strategy) {
  check_player(game, player);
  if (strategy >= game.num_strategies(player)) {
    throw InvalidArgument("player " + std::to_string(player + 1) +
                          ": strategy " + std::to_string(strategy + 1) +
                          " out of range 1.." +
                          std::to_string(game.num_strategies(player)));
  }
}

inline void check_profile(const Game& game, const PureProfile& profile) {
  if (profile.size() != game.num_players()) {
    throw InvalidArgument("profile has " + std::to_string(profile.size()) +
                          " entries, game has " +
                          std::to_string(game.num_players()) + " players");
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    check_strategy(game, i, profile[i]);
  }
}

inline void check_profile(const Game& game, const MixedProfile& profile) {
  if (profile.size() != game.num_players()) {
    throw InvalidArgument("mixed profile has " +
                          std::to_string(profile.size()) + " entries, game has " +
                          std::to_string(game.num_players()) + " players");
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i].size() != game.num_strategies(i)) {
      throw InvalidArgument("player " + std::to_string(i + 1) +
                            ": mixed strategy has " +
                            std::to_string(profile[i].size()) +
                            " weights, expected " +
                            std::to_string(game.num_strategies(i)));
    }
  }
}

inline std::size_t profile_index(const Game& game, const PureProfile& profile) {
  check_profile(game, profile);
  std::size_t index = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    index += profile[i] * game.stride(i);
  }
  return index;
}

inline PureProfile index_to_profile(const Game& game, std::size_t index) {
  if (index >= game.num_profiles()) {
    throw InvalidArgument("profile index " + std::to_string(index) +
                          " out of range 0.." +
                          std::to_string(game.num_profiles() - 1));
  }
  std::vector<std::size_t> choices(game.num_players());
  for (std::size_t i = 0; i < choices.size(); ++i) {
    choices[i] = index / game.stride(i);
    index %= game.stride(i);
  }
  return PureProfile(std::move(choices));
}

namespace detail {

// Calls fn(index, choices) for every pure profile in index order.
template <typename Fn>
void for_each_profile(const Game& game, Fn&& fn) {
  const std::size_t n = game.num_players();
  std::vector<std::size_t> choices(n, 0);
  for (std::size_t index = 0; index < game.num_profiles(); ++index) {
    fn(index, static_cast<const std::vector<std::size_t>&>(choices));
    for (std::size_t i = n; i-- > 0;) {
      if (++choices[i] < game.num_strategies(i)) break;
      choices[i] = 0;
    }
  }
}

}  // namespace detail

inline double payoff(const Game& game, std::size_t player,
                     const PureProfile& profile) {
  check_player(game, player);
  return game.payoff_at(player, profile_index(game, profile));
}

// (s_{-j}, s'_j): the profile with player j's choice replaced.
inline PureProfile replace_strategy(const Game& game,
                                    const PureProfile& profile,
                                    std::size_t player, std::size_t strategy) {
  check_profile(game, profile);
  check_strategy(game, player, strategy);
  std::vector<std::size_t> choices = profile.choices();
  choices[player] = strategy;
  return PureProfile(std::move(choices));
}

// sigma(s) = prod_i sigma_i(s_i).
inline double profile_probability(const MixedProfile& mixed,
                                  const PureProfile& profile) {
  if (mixed.size() != profile.size()) {
    throw InvalidArgument("mixed profile and pure profile differ in length");
  }
  double p = 1.0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] >= mixed[i].size()) {
      throw InvalidArgument("player " + std::to_string(i + 1) + ": strategy " +
                            std::to_string(profile[i] + 1) +
                            " outside the mixed strategy's range");
    }
    p *= mixed[i][profile[i]];
  }
  return p;
}

// Expected payoff sum_s sigma(s) H_player(s), summed over every pure profile.
inline double mixed_payoff(const Game& game, std::size_t player,
                           const MixedProfile& mixed) {
  check_player(game, player);
  check_profile(game, mixed);
  double total = 0.0;
  detail::for_each_profile(
      game, [&](std::size_t index, const std::vector<std::size_t>& choices) {
        double p = 1.0;
        for (std::size_t i = 0; i < choices.size(); ++i) {
          p *= mixed[i][choices[i]];
        }
        total += p * game.payoff_at(player, index);
      });
  return total;
}

// Expected payoff of each pure strategy of `player` against the others'
// mixed strategies: entry s is muH_player(sigma_{-player}, s).
inline std::vector<double> deviation_payoffs(const Game& game,
                                             std::size_t player,
                                             const MixedProfile& mixed) {
  check_player(game, player);
  check_profile(game, mixed);
  std::vector<double> out(game.num_strategies(player), 0.0);
  detail::for_each_profile(
      game, [&](std::size_t index, const std::vector<std::size_t>& choices) {
        double p = 1.0;
        for (std::size_t i = 0; i < choices.size(); ++i) {
          if (i != player) p *= mixed[i][choices[i]];
        }
        out[choices[player]] += p * game.payoff_at(player, index);
      });
  return out;
}

inline MixedProfile embed_pure(const Game& game, const PureProfile& profile) {
  check_profile(game, profile);
  std::vector<MixedStrategy> strategies;
  strategies.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    strategies.push_back(
        MixedStrategy::PointMass(game.num_strategies(i), profile[i]));
  }
  return MixedProfile(std::move(strategies));
}

inline MixedProfile uniform_profile(const Game& game) {
  std::vector<MixedStrategy> strategies;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    strategies.push_back(MixedStrategy::Uniform(game.num_strategies(i)));
  }
  return MixedProfile(std::move(strategies));
}

// The pure profile a point-mass mixed profile represents, if it is one.
inline std::optional<PureProfile> as_pure(const MixedProfile& mixed) {
  std::vector<std::size_t> choices;
  for (const MixedStrategy& sigma : mixed.strategies()) {
    const auto support = sigma.support();
    if (support.size() != 1 || sigma[support[0]] != 1.0) return std::nullopt;
    choices.push_back(support[0]);
  }
  return PureProfile(std::move(choices));
}

// Payoff vector (muH_1, ..., muH_n) at a mixed profile.
inline std::vector<double> payoff_vector(const Game& game,
                                         const MixedProfile& mixed) {
  std::vector<double> out(game.num_players());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = mixed_payoff(game, i, mixed);
  }
  return out;
}

inline std::vector<double> payoff_vector(const Game& game,
                                         const PureProfile& profile) {
  const std::size_t k = profile_index(game, profile);
  std::vector<double> out(game.num_players());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = game.payoff_at(i, k);
  return out;
}

}  // namespace nashfrag

#endif  // NASHFRAG_GAME_HPP_
