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

// Loads a game (file argument or the public goods builtin), solves it and
// reports how coalitions of growing size break the equilibrium.

#include <iostream>

#include "nashfrag/nashfrag.hpp"

int main(int argc, char** argv) {
  using namespace nashfrag;
  try {
    const Game game = argc > 1 ? read_game_file(argv[1]).game : public_goods(4);
    const EquilibriumReport eq = solve_nash(game);
    std::cout << "equilibrium via " << method_name(eq.method) << ", residual "
              << eq.residual << "\n";
    for (std::size_t k = 2; k <= game.num_players(); ++k) {
      const FragilityReport f = classify_equilibrium(game, eq.profile, k);
      std::cout << "kmax " << k << ": " << fragility_name(f.classification);
      if (f.witness) {
        std::cout << ", coalition of " << f.k_star() << " gains";
        for (double g : f.witness->gains) std::cout << " " << g;
      }
      std::cout << "\n";
    }
    const CooperationGainReport gain = cooperation_gain(game, eq.profile);
    std::cout << gain.pareto_improvers.size() << " Pareto improvements, welfare gap "
              << gain.best_welfare_gap << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
