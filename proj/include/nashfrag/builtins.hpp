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

#ifndef NASHFRAG_BUILTINS_HPP_
#define NASHFRAG_BUILTINS_HPP_

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nashfrag/error.hpp"
#include "nashfrag/game.hpp"
#include "nashfrag/random.hpp"

namespace nashfrag {

// Strategy order (C, D). Requires T > R > P > S: temptation, reward,
// punishment, sucker.
inline Game prisoners_dilemma(double t = 5, double r = 3, double p = 1,
                              double s = 0) {
  if (!(t > r && r > p && p > s)) {
    throw InvalidArgument("prisoners_dilemma requires T > R > P > S");
  }
  return Game({2, 2}, {{r, s, t, p}, {r, t, s, p}}, {{"C", "D"}, {"C", "D"}});
}

inline Game matching_pennies() {
  return Game({2, 2}, {{1, -1, -1, 1}, {-1, 1, 1, -1}},
              {{"H", "T"}, {"H", "T"}});
}

inline Game rock_paper_scissors() {
  return Game({3, 3},
              {{0, -1, 1, 1, 0, -1, -1, 1, 0}, {0, 1, -1, -1, 0, 1, 1, -1, 0}},
              {{"R", "P", "S"}, {"R", "P", "S"}});
}

// Player 1 prefers B, player 2 prefers S; miscoordination pays 0.
inline Game battle_of_sexes() {
  return Game({2, 2}, {{2, 0, 0, 1}, {1, 0, 0, 2}}, {{"B", "S"}, {"B", "S"}});
}

// n-player linear public goods game, strategies (C, D) = (contribute, keep):
//   payoff_i = rate * (number of contributors) - cost * [i contributes]
// Requires rate < cost < n * rate, so contributing is strictly dominated but
// universal contribution beats universal defection.
inline Game public_goods(std::size_t n = 3, double rate = 0.6,
                         double cost = 1.0) {
  if (n < 2) throw InvalidArgument("public_goods requires n >= 2");
  if (n > 20) throw InvalidArgument("public_goods supports at most 20 players");
  if (!(rate < cost && cost < static_cast<double>(n) * rate)) {
    throw InvalidArgument("public_goods requires rate < cost < n * rate");
  }
  const std::vector<std::size_t> counts(n, 2);
  std::vector<std::vector<double>> payoffs(n);
  const std::size_t profiles = std::size_t{1} << n;
  for (std::size_t index = 0; index < profiles; ++index) {
    // Player i's choice is bit (n - 1 - i); 0 means C.
    std::size_t contributors = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (((index >> (n - 1 - i)) & 1) == 0) ++contributors;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const bool contributes = ((index >> (n - 1 - i)) & 1) == 0;
      payoffs[i].push_back(rate * static_cast<double>(contributors) -
                           (contributes ? cost : 0.0));
    }
  }
  return Game(counts, std::move(payoffs),
              std::vector<std::vector<std::string>>(n, {"C", "D"}));
}

// Two-player zero-sum game from player 1's payoff matrix.
inline Game zero_sum_game(const std::vector<std::vector<double>>& matrix) {
  if (matrix.empty() || matrix[0].empty()) {
    throw InvalidArgument("zero_sum matrix must be non-empty");
  }
  const std::size_t cols = matrix[0].size();
  std::vector<double> h1, h2;
  for (const auto& row : matrix) {
    if (row.size() != cols) {
      throw InvalidArgument("zero_sum matrix rows must have equal length");
    }
    for (double v : row) {
      h1.push_back(v);
      h2.push_back(-v);
    }
  }
  return Game({matrix.size(), cols}, {std::move(h1), std::move(h2)});
}

// Payoffs uniform in [-1, 1) drawn from SplitMix64(seed): player 1's values
// for every profile in index order, then player 2's, and so on. Each value is
// 2 * u - 1 with u the generator's next uniform double.
inline Game random_game(const std::vector<std::size_t>& sizes,
                        std::uint64_t seed) {
  std::size_t profiles = 1;
  for (std::size_t m : sizes) {
    if (m < 1) throw InvalidArgument("random game sizes must be >= 1");
    profiles *= m;
  }
  if (sizes.size() < 2) throw InvalidArgument("random game needs n >= 2");
  SplitMix64 rng(seed);
  std::vector<std::vector<double>> payoffs(sizes.size());
  for (auto& list : payoffs) {
    list.resize(profiles);
    for (double& v : list) v = 2.0 * rng.uniform() - 1.0;
  }
  return Game(sizes, std::move(payoffs));
}

// Random two-player zero-sum game: player 1's entries uniform in [-1, 1).
inline Game random_zero_sum_game(std::size_t rows, std::size_t cols,
                                 std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::vector<double>> matrix(rows, std::vector<double>(cols));
  for (auto& row : matrix) {
    for (double& v : row) v = 2.0 * rng.uniform() - 1.0;
  }
  return zero_sum_game(matrix);
}

using GameParams = std::map<std::string, std::string>;

inline std::vector<std::string> builtin_names() {
  return {"battle_of_sexes", "matching_pennies", "prisoners_dilemma",
          "public_goods",    "random",           "rock_paper_scissors",
          "zero_sum"};
}

namespace detail {

inline void check_param_keys(std::string_view game, const GameParams& params,
                             const std::set<std::string>& allowed) {
  for (const auto& [key, value] : params) {
    if (!allowed.count(key)) {
      throw InvalidArgument("unknown parameter '" + key + "' for builtin '" +
                            std::string(game) + "'");
    }
  }
}

inline double param_double(const GameParams& params, const std::string& key,
                           double fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  const std::string& s = it->second;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw InvalidArgument("parameter " + key + "=" + s +
                          " is not a finite number");
  }
  return v;
}

inline std::uint64_t param_uint(const GameParams& params,
                                const std::string& key,
                                std::uint64_t fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  const std::string& s = it->second;
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("parameter " + key + "=" + s +
                          " is not a non-negative integer");
  }
  return v;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto end = s.find(sep, start);
    out.emplace_back(s.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace detail

// Catalog lookup by name with string parameters:
//   prisoners_dilemma  T R P S          (defaults 5 3 1 0)
//   matching_pennies, rock_paper_scissors, battle_of_sexes
//   public_goods       n rate cost      (defaults 3 0.6 1)
//   zero_sum           matrix="3,1;0,2" (rows separated by ';')
//   random             n sizes seed     (sizes "3x3x3" or "3,3,3"; a single
//                                        size is repeated n times)
inline Game builtin_game(std::string_view name, const GameParams& params = {}) {
  using detail::param_double;
  using detail::param_uint;
  if (name == "prisoners_dilemma") {
    detail::check_param_keys(name, params, {"T", "R", "P", "S"});
    return prisoners_dilemma(param_double(params, "T", 5),
                             param_double(params, "R", 3),
                             param_double(params, "P", 1),
                             param_double(params, "S", 0));
  }
  if (name == "matching_pennies" || name == "rock_paper_scissors" ||
      name == "battle_of_sexes") {
    detail::check_param_keys(name, params, {});
    if (name == "matching_pennies") return matching_pennies();
    if (name == "rock_paper_scissors") return rock_paper_scissors();
    return battle_of_sexes();
  }
  if (name == "public_goods") {
    detail::check_param_keys(name, params, {"n", "rate", "cost"});
    return public_goods(param_uint(params, "n", 3),
                        param_double(params, "rate", 0.6),
                        param_double(params, "cost", 1.0));
  }
  if (name == "zero_sum") {
    detail::check_param_keys(name, params, {"matrix"});
    auto it = params.find("matrix");
    if (it == params.end()) {
      throw InvalidArgument("zero_sum requires matrix=<rows>");
    }
    std::vector<std::vector<double>> matrix;
    for (const auto& row : detail::split(it->second, ';')) {
      std::vector<double> values;
      for (const auto& cell : detail::split(row, ',')) {
        values.push_back(param_double({{"matrix", cell}}, "matrix", 0.0));
      }
      matrix.push_back(std::move(values));
    }
    return zero_sum_game(matrix);
  }
  if (name == "random") {
    detail::check_param_keys(name, params, {"n", "sizes", "seed"});
    const std::uint64_t seed = param_uint(params, "seed", 0);
    std::vector<std::size_t> sizes;
    if (auto it = params.find("sizes"); it != params.end()) {
      const char sep = it->second.find('x') != std::string::npos ? 'x' : ',';
      for (const auto& part : detail::split(it->second, sep)) {
        sizes.push_back(param_uint({{"sizes", part}}, "sizes", 0));
      }
    }
    std::size_t n = sizes.empty() ? 2 : sizes.size();
    if (params.count("n")) n = param_uint(params, "n", 0);
    if (sizes.empty()) sizes.assign(n, 2);
    if (sizes.size() == 1 && n > 1) sizes.assign(n, sizes[0]);
    if (sizes.size() != n) {
      throw InvalidArgument("random: sizes lists " +
                            std::to_string(sizes.size()) +
                            " players but n = " + std::to_string(n));
    }
    if (n > 16) throw InvalidArgument("random: at most 16 players");
    return random_game(sizes, seed);
  }
  throw InvalidArgument("unknown builtin game '" + std::string(name) + "'");
}

}  // namespace nashfrag

#endif  // NASHFRAG_BUILTINS_HPP_
