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

#ifndef NASHFRAG_DYNAMICS_HPP_
#define NASHFRAG_DYNAMICS_HPP_

// Pure-strategy deviation processes.
//
// c1_walk: one player moves at a time (round-robin, ascending), always to a
// best response, ties to the lowest index, staying put when already optimal.
// Absorbing states are exactly the pure Nash equilibria.
//
// c2_walk: each step applies the canonical-first strictly profitable joint
// deviation among coalitions of size 1..kmax (smallest size, then
// lexicographic members, then lexicographic assignment). Absorbing states are
// coalition-robust up to kmax, so a Nash equilibrium need not absorb.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nashfrag/error.hpp"
#include "nashfrag/game.hpp"
#include "nashfrag/random.hpp"
#include "nashfrag/stability.hpp"

namespace nashfrag {

struct Cycle {
  std::size_t entry = 0;
  std::size_t period = 0;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Earliest exact repetition: the first index i with states[i] equal to some
// earlier states[j]; reports entry j and period i - j.
template <typename T>
std::optional<Cycle> detect_cycle(std::span<const T> states) {
  for (std::size_t i = 1; i < states.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (states[j] == states[i]) return Cycle{j, i - j};
    }
  }
  return std::nullopt;
}

template <typename T>
std::optional<Cycle> detect_cycle(const std::vector<T>& states) {
  return detect_cycle(std::span<const T>(states));
}

enum class Regime { kC1, kC2 };

inline std::string_view regime_name(Regime r) {
  return r == Regime::kC1 ? "c1" : "c2";
}

enum class TerminalKind { kAbsorbed, kCycle, kBudgetExhausted };

inline std::string_view terminal_name(TerminalKind k) {
  switch (k) {
    case TerminalKind::kAbsorbed: return "absorbed";
    case TerminalKind::kCycle: return "cycle";
    case TerminalKind::kBudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

struct Trajectory {
  std::vector<PureProfile> states;
  // movers[k] moved from states[k] to states[k + 1].
  std::vector<Coalition> movers;
  TerminalKind terminal = TerminalKind::kBudgetExhausted;
  // Absorbed: index of the absorbing state. Cycle: entry index.
  std::size_t terminal_index = 0;
  // Cycle length in states; 0 unless terminal is kCycle.
  std::size_t period = 0;
  Regime regime = Regime::kC1;
  std::size_t kmax = 1;
  std::uint64_t seed = 0;
  // Player turns (C1) or deviation steps (C2) taken.
  std::size_t turns = 0;
  // C1 only: round-robin sweeps started, ceil(turns / n).
  std::size_t sweeps = 0;
};

// Lowest-index best response of `player`, or nullopt when the current choice
// is already among the maximizers.
inline std::optional<std::size_t> improving_best_response(
    const Game& game, const PureProfile& profile, std::size_t player) {
  const std::size_t base =
      profile_index(game, profile) - profile[player] * game.stride(player);
  const double current = game.payoff_at(player, profile_index(game, profile));
  std::size_t best = 0;
  double best_value = game.payoff_at(player, base);
  for (std::size_t s = 1; s < game.num_strategies(player); ++s) {
    const double v = game.payoff_at(player, base + s * game.stride(player));
    if (v > best_value) {
      best_value = v;
      best = s;
    }
  }
  if (current >= best_value) return std::nullopt;
  return best;
}

inline Trajectory c1_walk(const Game& game, const PureProfile& start,
                          std::size_t max_sweeps) {
  check_profile(game, start);
  const std::size_t n = game.num_players();
  Trajectory t;
  t.regime = Regime::kC1;
  t.kmax = 1;
  t.states.push_back(start);

  // (profile index, next player) -> position in states.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  std::size_t quiet = 0;
  std::size_t player = 0;
  bool done = false;
  while (t.turns < max_sweeps * n) {
    const PureProfile& current = t.states.back();
    const auto key = std::make_pair(profile_index(game, current), player);
    if (auto it = seen.find(key); it != seen.end()) {
      t.terminal = TerminalKind::kCycle;
      t.terminal_index = it->second;
      t.period = t.states.size() - 1 - it->second;
      done = true;
      break;
    }
    seen.emplace(key, t.states.size() - 1);
    ++t.turns;
    if (auto br = improving_best_response(game, current, player)) {
      PureProfile next = replace_strategy(game, current, player, *br);
      t.states.push_back(std::move(next));
      t.movers.push_back(Coalition({player}));
      quiet = 0;
    } else if (++quiet == n) {
      t.terminal = TerminalKind::kAbsorbed;
      t.terminal_index = t.states.size() - 1;
      done = true;
      break;
    }
    player = (player + 1) % n;
  }
  if (!done) t.terminal = TerminalKind::kBudgetExhausted;
  t.sweeps = (t.turns + n - 1) / n;
  return t;
}

struct C2WalkOptions {
  std::size_t kmax = 2;
  std::size_t max_steps = 100;
  std::uint64_t seed = 0;
  // Shuffle coalition order within each size each step (seeded). Off by
  // default, which gives the canonical-first rule.
  bool randomize_order = false;
};

inline Trajectory c2_walk(const Game& game, const PureProfile& start,
                          const C2WalkOptions& opt = {}) {
  check_profile(game, start);
  const std::size_t n = game.num_players();
  if (opt.kmax < 2 || opt.kmax > n) {
    throw InvalidArgument("c2 walk needs 2 <= kmax <= " + std::to_string(n) +
                          ", got " + std::to_string(opt.kmax));
  }
  Trajectory t;
  t.regime = Regime::kC2;
  t.kmax = opt.kmax;
  t.seed = opt.seed;
  t.states.push_back(start);

  SplitMix64 rng(opt.seed);
  const std::vector<Coalition> canonical = coalitions(n, 1, opt.kmax);
  std::map<std::size_t, std::size_t> seen{{profile_index(game, start), 0}};
  bool done = false;
  while (t.turns < opt.max_steps) {
    std::vector<Coalition> order = canonical;
    if (opt.randomize_order) {
      // Fisher-Yates within each block of equal size.
      std::size_t lo = 0;
      while (lo < order.size()) {
        std::size_t hi = lo;
        while (hi < order.size() && order[hi].size() == order[lo].size()) ++hi;
        for (std::size_t i = hi - lo; i > 1; --i) {
          std::swap(order[lo + i - 1], order[lo + rng.below(i)]);
        }
        lo = hi;
      }
    }
    const MixedProfile current = embed_pure(game, t.states.back());
    std::optional<PureDeviation> move;
    for (const Coalition& c : order) {
      if ((move = find_pure_coalition_deviation(game, current, c))) break;
    }
    if (!move) {
      t.terminal = TerminalKind::kAbsorbed;
      t.terminal_index = t.states.size() - 1;
      done = true;
      break;
    }
    std::vector<std::size_t> choices = t.states.back().choices();
    for (std::size_t k = 0; k < move->coalition.size(); ++k) {
      choices[move->coalition[k]] = move->strategies[k];
    }
    PureProfile next(std::move(choices));
    const std::size_t next_index = profile_index(game, next);
    t.states.push_back(std::move(next));
    t.movers.push_back(move->coalition);
    ++t.turns;
    if (auto it = seen.find(next_index); it != seen.end()) {
      t.terminal = TerminalKind::kCycle;
      t.terminal_index = it->second;
      t.period = t.states.size() - 1 - it->second;
      done = true;
      break;
    }
    seen.emplace(next_index, t.states.size() - 1);
  }
  if (!done) t.terminal = TerminalKind::kBudgetExhausted;
  return t;
}

}  // namespace nashfrag

#endif  // NASHFRAG_DYNAMICS_HPP_
