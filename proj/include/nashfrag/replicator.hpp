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

#ifndef NASHFRAG_REPLICATOR_HPP_
#define NASHFRAG_REPLICATOR_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "nashfrag/equilibrium.hpp"
#include "nashfrag/game.hpp"
#include "nashfrag/random.hpp"

namespace nashfrag {

struct ReplicatorOptions {
  std::uint64_t seed = 0;
  std::size_t starts = 8;
  std::size_t max_iterations = 10'000;
  double tol = 1e-6;
};

// Discrete-time replicator dynamics from seeded interior starts:
//
//   sigma_i(s) <- sigma_i(s) * f_i(s) / sum_t sigma_i(t) f_i(t)
//
// where f_i(s) is player i's expected payoff for s, shifted so that every
// payoff of player i is at least 1. All players update simultaneously.
// Convergence is not guaranteed; the returned report carries the true
// residual of the best profile seen.
inline EquilibriumReport replicator_search(const Game& game,
                                           const ReplicatorOptions& opt = {}) {
  const std::size_t n = game.num_players();
  std::vector<double> shift(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto h = game.payoffs(i);
    shift[i] = 1.0 - *std::min_element(h.begin(), h.end());
  }

  SplitMix64 rng(opt.seed);
  MixedProfile best;
  double best_residual = std::numeric_limits<double>::infinity();
  const std::size_t starts = std::max<std::size_t>(opt.starts, 1);
  for (std::size_t start = 0; start < starts; ++start) {
    std::vector<std::vector<double>> w(n);
    for (std::size_t i = 0; i < n; ++i) {
      w[i].resize(game.num_strategies(i));
      double sum = 0.0;
      for (double& v : w[i]) sum += (v = 0.05 + rng.uniform());
      for (double& v : w[i]) v /= sum;
    }
    for (std::size_t it = 0; it <= opt.max_iterations; ++it) {
      std::vector<MixedStrategy> strategies;
      for (std::size_t i = 0; i < n; ++i) {
        strategies.push_back(
            detail::clean_weights(w[i], 0.0).value_or(MixedStrategy::Uniform(
                game.num_strategies(i))));
      }
      MixedProfile sigma(std::move(strategies));
      // Residual checks are the expensive part; sample them.
      if (it % 16 == 0 || it == opt.max_iterations) {
        const double r = nash_residual(game, sigma);
        if (r < best_residual) {
          best_residual = r;
          best = sigma;
        }
        if (r <= opt.tol) break;
      }
      if (it == opt.max_iterations) break;
      for (std::size_t i = 0; i < n; ++i) {
        auto f = deviation_payoffs(game, i, sigma);
        double avg = 0.0;
        for (std::size_t s = 0; s < f.size(); ++s) {
          f[s] += shift[i];
          avg += sigma[i][s] * f[s];
        }
        for (std::size_t s = 0; s < f.size(); ++s) {
          w[i][s] = sigma[i][s] * f[s] / avg;
        }
      }
    }
    if (best_residual <= opt.tol) break;
  }
  return make_report(game, std::move(best), Method::kReplicator);
}

}  // namespace nashfrag

#endif  // NASHFRAG_REPLICATOR_HPP_
