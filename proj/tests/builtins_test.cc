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

#include "nashfrag/builtins.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "nashfrag/equilibrium.hpp"

namespace nashfrag {
namespace {

TEST(Builtins, PrisonersDilemmaTable) {
  const Game pd = prisoners_dilemma();
  // Player 1 rows in (C, D) order: [[R, S], [T, P]].
  EXPECT_EQ(std::vector<double>(pd.payoffs(0).begin(), pd.payoffs(0).end()),
            (std::vector<double>{3, 0, 5, 1}));
  EXPECT_EQ(pd.labels(0), (std::vector<std::string>{"C", "D"}));
  EXPECT_THROW(prisoners_dilemma(1, 5, 1, 0), InvalidArgument);
  EXPECT_THROW(builtin_game("prisoners_dilemma", {{"T", "1"}, {"R", "5"}}),
               InvalidArgument);
  const Game custom = builtin_game("prisoners_dilemma", {{"T", "10"}});
  EXPECT_EQ(custom.payoff_at(0, 2), 10.0);
}

TEST(Builtins, PublicGoodsFormula) {
  const Game g = public_goods(3, 0.6, 1.0);
  ASSERT_EQ(g.num_profiles(), 8u);
  for (std::size_t k = 0; k < 8; ++k) {
    const PureProfile p = index_to_profile(g, k);
    double contributions = 0;
    for (std::size_t i = 0; i < 3; ++i) contributions += p[i] == 0 ? 1 : 0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double own = p[i] == 0 ? 1.0 : 0.0;
      EXPECT_NEAR(payoff(g, i, p), 0.6 * contributions - own, 1e-15);
    }
  }
  EXPECT_EQ(enumerate_pure_nash(g), (std::vector<PureProfile>{{1, 1, 1}}));
  EXPECT_THROW(public_goods(3, 1.0, 0.6), InvalidArgument);
  EXPECT_THROW(public_goods(3, 0.2, 1.0), InvalidArgument);
  EXPECT_THROW(public_goods(1, 0.6, 1.0), InvalidArgument);
}

TEST(Builtins, PublicGoodsUniqueEquilibriumForOtherSizes) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const Game g = public_goods(n, 0.6, 1.0);
    const auto eq = enumerate_pure_nash(g);
    ASSERT_EQ(eq.size(), 1u);
    EXPECT_EQ(eq[0], PureProfile(std::vector<std::size_t>(n, 1)));
  }
}

TEST(Builtins, ClassicGamesAreWellFormed) {
  EXPECT_EQ(enumerate_pure_nash(matching_pennies()).size(), 0u);
  EXPECT_EQ(enumerate_pure_nash(rock_paper_scissors()).size(), 0u);
  EXPECT_EQ(enumerate_pure_nash(battle_of_sexes()).size(), 2u);
  for (const char* name : {"matching_pennies", "rock_paper_scissors"}) {
    const Game g = builtin_game(name);
    for (std::size_t k = 0; k < g.num_profiles(); ++k) {
      EXPECT_EQ(g.payoff_at(0, k) + g.payoff_at(1, k), 0.0);
    }
  }
}

TEST(Builtins, ZeroSumAndRandomParameters) {
  const Game z = builtin_game("zero_sum", {{"matrix", "3,1;0,2"}});
  EXPECT_EQ(z.strategy_counts(), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(z.payoff_at(1, 0), -3.0);
  EXPECT_THROW(builtin_game("zero_sum", {{"matrix", "1,2;3"}}), InvalidArgument);
  EXPECT_THROW(builtin_game("zero_sum"), InvalidArgument);

  const Game r = builtin_game("random", {{"sizes", "3x2x2"}, {"seed", "4"}});
  EXPECT_EQ(r.strategy_counts(), (std::vector<std::size_t>{3, 2, 2}));
  EXPECT_EQ(r, random_game({3, 2, 2}, 4));
  const Game r2 = builtin_game("random", {{"n", "3"}, {"sizes", "2"}});
  EXPECT_EQ(r2.strategy_counts(), (std::vector<std::size_t>{2, 2, 2}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (double v : r.payoffs(i)) {
      EXPECT_GE(v, -1.0);
      EXPECT_LT(v, 1.0);
    }
  }
  EXPECT_THROW(builtin_game("random", {{"n", "2"}, {"sizes", "2,2,2"}}),
               InvalidArgument);
}

TEST(Builtins, UnknownNamesAndParameters) {
  EXPECT_THROW(builtin_game("chicken"), InvalidArgument);
  EXPECT_THROW(builtin_game("matching_pennies", {{"x", "1"}}), InvalidArgument);
  EXPECT_THROW(builtin_game("public_goods", {{"rate", "abc"}}), InvalidArgument);
  EXPECT_EQ(builtin_names().size(), 7u);
}

}  // namespace
}  // namespace nashfrag
