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

#ifndef NASHFRAG_NEWTON_SUPPORT_HPP_
#define NASHFRAG_NEWTON_SUPPORT_HPP_

// Support-guessing equilibrium search for any number of players.
//
// For every combination of per-player supports the polynomial system
//
//   muH_i(sigma_{-i}, s) - v_i = 0     for each player i and s in supp_i
//   sum_{s in supp_i} sigma_i(s) = 1   for each player i
//
// is solved by damped Newton iteration (unknowns: the support weights and one
// value v_i per player). Converged points with non-negative weights are kept
// when their Nash residual, which also covers the off-support inequalities,
// is within tolerance.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "nashfrag/combinatorics.hpp"
#include "nashfrag/equilibrium.hpp"
#include "nashfrag/error.hpp"
#include "nashfrag/game.hpp"
#include "nashfrag/linalg.hpp"
#include "nashfrag/random.hpp"

namespace nashfrag {

struct NewtonSupportOptions {
  std::size_t max_support = 3;
  std::size_t combination_budget = 100'000;
  std::size_t max_iterations = 200;
  std::size_t max_halvings = 30;
  // Seeded interior restarts tried when the uniform start fails.
  std::size_t extra_starts = 2;
  double negative_tol = 1e-9;
  double residual_tol = 1e-6;
  bool stop_at_first = false;
  std::uint64_t seed = 0;
};

namespace detail {

class SupportSystem {
 public:
  SupportSystem(const Game& game, std::vector<std::vector<std::size_t>> supports)
      : game_(game), supports_(std::move(supports)) {
    std::size_t offset = 0;
    for (const auto& supp : supports_) {
      offsets_.push_back(offset);
      offset += supp.size() + 1;
    }
    size_ = offset;
  }

  std::size_t size() const { return size_; }

  // Full per-player weight vectors (off-support zero) from the unknowns.
  std::vector<std::vector<double>> weights(const std::vector<double>& x) const {
    std::vector<std::vector<double>> w(game_.num_players());
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i].assign(game_.num_strategies(i), 0.0);
      for (std::size_t k = 0; k < supports_[i].size(); ++k) {
        w[i][supports_[i][k]] = x[offsets_[i] + k];
      }
    }
    return w;
  }

  std::vector<double> start(const std::vector<std::vector<double>>& w) const {
    std::vector<double> x(size_, 0.0);
    for (std::size_t i = 0; i < supports_.size(); ++i) {
      double sum = 0.0;
      for (std::size_t s : supports_[i]) sum += w[i][s];
      for (std::size_t k = 0; k < supports_[i].size(); ++k) {
        x[offsets_[i] + k] = w[i][supports_[i][k]] / sum;
      }
    }
    // Values start at the mean support payoff.
    const auto full = weights(x);
    for (std::size_t i = 0; i < supports_.size(); ++i) {
      const auto dev = deviations(full, i);
      double mean = 0.0;
      for (std::size_t s : supports_[i]) mean += dev[s];
      x[offsets_[i] + supports_[i].size()] =
          mean / static_cast<double>(supports_[i].size());
    }
    return x;
  }

  std::vector<double> residual(const std::vector<double>& x) const {
    std::vector<double> f(size_, 0.0);
    const auto w = weights(x);
    for (std::size_t i = 0; i < supports_.size(); ++i) {
      const auto dev = deviations(w, i);
      const std::size_t k = supports_[i].size();
      const double v = x[offsets_[i] + k];
      double sum = 0.0;
      for (std::size_t r = 0; r < k; ++r) {
        f[offsets_[i] + r] = dev[supports_[i][r]] - v;
        sum += x[offsets_[i] + r];
      }
      f[offsets_[i] + k] = sum - 1.0;
    }
    return f;
  }

  Matrix jacobian(const std::vector<double>& x) const {
    const std::size_t n = game_.num_players();
    Matrix jac(size_, size_);
    const auto w = weights(x);
    // position[j][t]: column of weight of strategy t for player j, or npos.
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::size_t>> position(n);
    std::vector<std::vector<std::size_t>> row_of(n);
    for (std::size_t j = 0; j < n; ++j) {
      position[j].assign(game_.num_strategies(j), npos);
      for (std::size_t k = 0; k < supports_[j].size(); ++k) {
        position[j][supports_[j][k]] = offsets_[j] + k;
      }
    }
    for_each_profile(game_, [&](std::size_t index,
                                const std::vector<std::size_t>& c) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t row = position[i][c[i]];
        if (row == npos) continue;
        const double h = game_.payoff_at(i, index);
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          const std::size_t col = position[j][c[j]];
          if (col == npos) continue;
          double p = 1.0;
          for (std::size_t k = 0; k < n; ++k) {
            if (k != i && k != j) p *= w[k][c[k]];
          }
          jac(row, col) += p * h;
        }
      }
    });
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = supports_[i].size();
      for (std::size_t r = 0; r < k; ++r) jac(offsets_[i] + r, offsets_[i] + k) = -1.0;
      for (std::size_t c = 0; c < k; ++c) jac(offsets_[i] + k, offsets_[i] + c) = 1.0;
    }
    return jac;
  }

 private:
  std::vector<double> deviations(const std::vector<std::vector<double>>& w,
                                 std::size_t player) const {
    std::vector<double> out(game_.num_strategies(player), 0.0);
    for_each_profile(game_, [&](std::size_t index,
                                const std::vector<std::size_t>& c) {
      double p = 1.0;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k != player) p *= w[k][c[k]];
      }
      out[c[player]] += p * game_.payoff_at(player, index);
    });
    return out;
  }

  const Game& game_;
  std::vector<std::vector<std::size_t>> supports_;
  std::vector<std::size_t> offsets_;
  std::size_t size_ = 0;
};

inline double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

inline std::optional<std::vector<double>> damped_newton(
    const SupportSystem& system, std::vector<double> x,
    const NewtonSupportOptions& opt, double scale) {
  std::vector<double> f = system.residual(x);
  double fnorm = norm2(f);
  for (std::size_t it = 0; it < opt.max_iterations; ++it) {
    if (fnorm <= 1e-13 * scale) return x;
    std::vector<double> rhs(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) rhs[k] = -f[k];
    auto step = solve_linear_system(system.jacobian(x), std::move(rhs));
    if (!step) return std::nullopt;
    double t = 1.0;
    bool improved = false;
    for (std::size_t h = 0; h <= opt.max_halvings; ++h, t *= 0.5) {
      std::vector<double> trial = x;
      for (std::size_t k = 0; k < x.size(); ++k) trial[k] += t * (*step)[k];
      std::vector<double> ft = system.residual(trial);
      const double tn = norm2(ft);
      if (tn < fnorm) {
        x = std::move(trial);
        f = std::move(ft);
        fnorm = tn;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  if (fnorm <= 1e-10 * scale) return x;
  return std::nullopt;
}

}  // namespace detail

// Equilibria found over every combination of supports of size at most
// `max_support`, in canonical order.
inline std::vector<EquilibriumReport> newton_support_search(
    const Game& game, const NewtonSupportOptions& opt = {}) {
  if (opt.max_support < 1) {
    throw InvalidArgument("max_support must be at least 1");
  }
  const std::size_t n = game.num_players();
  std::size_t combos = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t count =
        detail::subset_count(game.num_strategies(i), 1, opt.max_support);
    if (combos > std::numeric_limits<std::size_t>::max() / count) {
      combos = std::numeric_limits<std::size_t>::max();
    } else {
      combos *= count;
    }
  }
  if (combos > opt.combination_budget) {
    throw BudgetExceeded("newton support combinations", combos,
                         opt.combination_budget);
  }
  std::vector<std::vector<std::vector<std::size_t>>> choices(n);
  for (std::size_t i = 0; i < n; ++i) {
    choices[i] =
        detail::subsets_by_size(game.num_strategies(i), 1, opt.max_support);
  }

  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (double h : game.payoffs(i)) scale = std::max(scale, std::abs(h));
  }

  SplitMix64 rng(opt.seed);
  std::vector<EquilibriumReport> found;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<std::vector<std::size_t>> supports(n);
    for (std::size_t i = 0; i < n; ++i) supports[i] = choices[i][pick[i]];
    detail::SupportSystem system(game, supports);

    std::vector<std::vector<std::vector<double>>> starts;
    std::vector<std::vector<double>> uniform(n);
    for (std::size_t i = 0; i < n; ++i) {
      uniform[i].assign(game.num_strategies(i), 1.0);
    }
    starts.push_back(uniform);
    for (std::size_t e = 0; e < opt.extra_starts; ++e) {
      auto w = uniform;
      for (auto& row : w) {
        for (double& v : row) v = 0.05 + rng.uniform();
      }
      starts.push_back(std::move(w));
    }

    for (const auto& w0 : starts) {
      auto x = detail::damped_newton(system, system.start(w0), opt, scale);
      if (!x) continue;
      auto w = system.weights(*x);
      std::vector<MixedStrategy> strategies;
      for (std::size_t i = 0; i < n; ++i) {
        auto cleaned = detail::clean_weights(std::move(w[i]), opt.negative_tol);
        if (!cleaned) break;
        strategies.push_back(std::move(*cleaned));
      }
      if (strategies.size() != n) continue;
      MixedProfile sigma(std::move(strategies));
      if (nash_residual(game, sigma) > opt.residual_tol) continue;
      const bool duplicate = std::any_of(
          found.begin(), found.end(), [&](const EquilibriumReport& r) {
            return detail::linf_distance(r.profile, sigma) < 1e-7;
          });
      if (!duplicate) {
        found.push_back(
            make_report(game, std::move(sigma), Method::kNewtonSupport));
      }
      break;
    }
    if (opt.stop_at_first && !found.empty()) break;

    std::size_t i = n;
    while (i-- > 0) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  std::sort(found.begin(), found.end(), detail::report_less);
  return found;
}

}  // namespace nashfrag

#endif  // NASHFRAG_NEWTON_SUPPORT_HPP_
