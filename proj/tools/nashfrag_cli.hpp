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

#ifndef NASHFRAG_TOOLS_NASHFRAG_CLI_HPP_
#define NASHFRAG_TOOLS_NASHFRAG_CLI_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nashfrag/nashfrag.hpp"

namespace nashfrag::cli {

inline constexpr std::string_view kVersion = "0.1.0";

using Json = nlohmann::json;

// Raised for bad command-line values; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct CommonOptions {
  std::string game_path;
  std::string builtin;
  std::vector<std::string> params;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  bool json = false;
};

struct CommandOptions {
  std::string profile;
  std::string start;
  std::string regime;
  std::size_t kmax = 2;
  std::size_t steps = 100;
  bool kmax_set = false;
  bool mixed = false;
  bool random_order = false;
};

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = s.find(sep, begin);
    out.emplace_back(s.substr(begin, end - begin));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return out;
}

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

// Decimal or a/b fraction.
inline double parse_weight(const std::string& token) {
  auto parse = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw UsageError("bad weight '" + token + "'");
    }
    if (used != s.size() || !std::isfinite(v)) {
      throw UsageError("bad weight '" + token + "'");
    }
    return v;
  };
  const auto slash = token.find('/');
  if (slash == std::string::npos) return parse(token);
  const double den = parse(token.substr(slash + 1));
  if (den == 0.0) throw UsageError("bad weight '" + token + "'");
  return parse(token.substr(0, slash)) / den;
}

// 1-based strategy number or label.
inline std::size_t parse_strategy(const Game& game, std::size_t player,
                                  const std::string& token) {
  if (game.has_labels(player)) {
    const auto& labels = game.labels(player);
    const auto it = std::find(labels.begin(), labels.end(), token);
    if (it != labels.end()) return static_cast<std::size_t>(it - labels.begin());
  }
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size() || token[0] == '-' || v < 1 ||
      v > game.num_strategies(player)) {
    throw UsageError("player " + std::to_string(player + 1) +
                     ": no strategy '" + token + "' (expected 1.." +
                     std::to_string(game.num_strategies(player)) +
                     (game.has_labels(player) ? " or a label" : "") + ")");
  }
  return static_cast<std::size_t>(v - 1);
}

inline PureProfile parse_pure_profile(const Game& game, const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != game.num_players()) {
    throw UsageError("profile '" + text + "' has " + std::to_string(parts.size()) +
                     " entries, expected " + std::to_string(game.num_players()));
  }
  std::vector<std::size_t> choices;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    choices.push_back(parse_strategy(game, i, trim(parts[i])));
  }
  return PureProfile(std::move(choices));
}

// "1,2" is pure; "0.5,0.5;1,0" gives per-player weights.
inline MixedProfile parse_profile(const Game& game, const std::string& text) {
  if (text.find(';') == std::string::npos) {
    return embed_pure(game, parse_pure_profile(game, text));
  }
  const auto groups = split(text, ';');
  if (groups.size() != game.num_players()) {
    throw UsageError("profile '" + text + "' has " +
                     std::to_string(groups.size()) + " players, expected " +
                     std::to_string(game.num_players()));
  }
  std::vector<MixedStrategy> strategies;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto parts = split(groups[i], ',');
    if (parts.size() != game.num_strategies(i)) {
      throw UsageError("player " + std::to_string(i + 1) + ": expected " +
                       std::to_string(game.num_strategies(i)) + " weights, got " +
                       std::to_string(parts.size()));
    }
    std::vector<double> w;
    for (const auto& p : parts) w.push_back(parse_weight(trim(p)));
    try {
      strategies.emplace_back(std::move(w));
    } catch (const InvalidArgument& e) {
      throw UsageError("player " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return MixedProfile(std::move(strategies));
}

inline std::string pure_text(const Game& game, const PureProfile& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += game.strategy_name(i, p[i]);
  }
  return s + ")";
}

inline std::string mixed_text(const Game& game, const MixedProfile& sigma) {
  if (auto pure = as_pure(sigma)) return pure_text(game, *pure);
  std::string s;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) s += " ";
    s += "[";
    for (std::size_t k = 0; k < sigma[i].size(); ++k) {
      if (k) s += " ";
      s += format_number(sigma[i][k]);
    }
    s += "]";
  }
  return s;
}

inline std::string numbers_text(const std::vector<double>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += " ";
    s += format_number(v[k]);
  }
  return s;
}

inline Json pure_json(const Game& game, const PureProfile& p) {
  Json indices = Json::array(), names = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    indices.push_back(p[i] + 1);
    names.push_back(game.strategy_name(i, p[i]));
  }
  return {{"strategies", indices}, {"names", names}};
}

inline Json mixed_json(const Game& game, const MixedProfile& sigma) {
  Json weights = Json::array();
  for (const auto& s : sigma.strategies()) weights.push_back(s.weights());
  Json out = {{"weights", weights}};
  if (auto pure = as_pure(sigma)) out["pure"] = pure_json(game, *pure);
  return out;
}

inline Json coalition_json(const Coalition& c) {
  Json out = Json::array();
  for (std::size_t m : c.members()) out.push_back(m + 1);
  return out;
}

inline std::string coalition_text(const Coalition& c) {
  std::string s = "{";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(c.members()[k] + 1);
  }
  return s + "}";
}

inline Json report_json(const Game& game, const EquilibriumReport& r) {
  return {{"method", method_name(r.method)},
          {"profile", mixed_json(game, r.profile)},
          {"payoffs", r.payoffs},
          {"residual", r.residual},
          {"is_pure", r.is_pure}};
}

inline Game load_game(const CommonOptions& c, Json& inputs) {
  if (c.game_path.empty() == c.builtin.empty()) {
    throw UsageError("exactly one of --game or --builtin is required");
  }
  if (!c.game_path.empty()) {
    if (!c.params.empty()) throw UsageError("--param needs --builtin");
    inputs["game"] = c.game_path;
    return read_game_file(c.game_path).game;
  }
  GameParams params;
  for (const auto& p : c.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--param expects key=value, got '" + p + "'");
    }
    params[p.substr(0, eq)] = p.substr(eq + 1);
  }
  inputs["builtin"] = c.builtin;
  inputs["params"] = Json(params);
  try {
    return builtin_game(c.builtin, params);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

inline MixedProfile base_profile(const Game& game, const CommonOptions& c,
                                 const CommandOptions& o, Json& result,
                                 std::ostream& text) {
  if (!o.profile.empty()) return parse_profile(game, o.profile);
  SolveConfig config;
  config.tol = c.tol;
  config.seed = c.seed;
  const EquilibriumReport r = solve_nash(game, config);
  result["base"] = report_json(game, r);
  text << "base equilibrium: " << mixed_text(game, r.profile) << " via "
       << method_name(r.method) << " (residual " << format_number(r.residual)
       << ")\n";
  return r.profile;
}

// Returns the exit code; `result` and `text` receive the command output.
inline int run_command(const std::string& command, const Game& game,
                       const CommonOptions& c, const CommandOptions& o,
                       Json& inputs, Json& result, std::ostream& text) {
  if (command == "info") {
    Json labels = Json::array();
    for (std::size_t i = 0; i < game.num_players(); ++i) {
      Json names = Json::array();
      for (std::size_t s = 0; s < game.num_strategies(i); ++s) {
        names.push_back(game.strategy_name(i, s));
      }
      labels.push_back(names);
    }
    const bool zero_sum = is_zero_sum(game);
    const std::string doc = serialize_game(game);
    result = {{"players", game.num_players()},
              {"strategies", game.strategy_counts()},
              {"profiles", game.num_profiles()},
              {"zero_sum", zero_sum},
              {"names", labels},
              {"document", doc}};
    text << "players: " << game.num_players() << "\nstrategies:";
    for (std::size_t m : game.strategy_counts()) text << " " << m;
    text << "\nprofiles: " << game.num_profiles()
         << "\nzero-sum: " << (zero_sum ? "yes" : "no") << "\n\n"
         << doc;
    return 0;
  }
  if (command == "solve") {
    SolveConfig config;
    config.tol = c.tol;
    config.seed = c.seed;
    const EquilibriumReport r = solve_nash(game, config);
    result = report_json(game, r);
    text << "equilibrium: " << mixed_text(game, r.profile)
         << "\npayoffs: " << numbers_text(r.payoffs)
         << "\nresidual: " << format_number(r.residual)
         << "\nmethod: " << method_name(r.method) << "\n";
    return 0;
  }
  if (command == "pure-nash") {
    const auto eq = enumerate_pure_nash(game);
    Json list = Json::array();
    text << eq.size() << " pure equilibri" << (eq.size() == 1 ? "um" : "a")
         << "\n";
    for (const auto& p : eq) {
      Json entry = pure_json(game, p);
      entry["payoffs"] = payoff_vector(game, p);
      list.push_back(entry);
      text << pure_text(game, p) << " payoffs " << numbers_text(payoff_vector(game, p))
           << "\n";
    }
    result = {{"count", eq.size()}, {"equilibria", list}};
    return 0;
  }
  if (command == "verify") {
    if (o.profile.empty()) throw UsageError("verify needs --profile");
    const MixedProfile sigma = parse_profile(game, o.profile);
    inputs["profile"] = o.profile;
    const double residual = nash_residual(game, sigma);
    const bool ok = residual <= c.tol;
    std::vector<double> payoffs;
    for (std::size_t i = 0; i < game.num_players(); ++i) {
      payoffs.push_back(mixed_payoff(game, i, sigma));
    }
    result = {{"profile", mixed_json(game, sigma)},
              {"payoffs", payoffs},
              {"residual", residual},
              {"is_nash", ok}};
    text << "profile: " << mixed_text(game, sigma)
         << "\npayoffs: " << numbers_text(payoffs)
         << "\nresidual: " << format_number(residual) << "\n"
         << (ok ? "Nash equilibrium" : "not a Nash equilibrium") << " at tol "
         << format_number(c.tol) << "\n";
    return ok ? 0 : 1;
  }
  if (command == "zerosum-value") {
    const ZeroSumSolution z = zero_sum_value(game);
    result = {{"value", z.value},
              {"row_strategy", z.row_strategy.weights()},
              {"column_strategy", z.column_strategy.weights()},
              {"maximin", z.maximin},
              {"minimax", z.minimax},
              {"gap", std::abs(z.minimax - z.maximin)}};
    text << "value: " << format_number(z.value)
         << "\nrow strategy: " << numbers_text(z.row_strategy.weights())
         << "\ncolumn strategy: " << numbers_text(z.column_strategy.weights())
         << "\nmaximin: " << format_number(z.maximin)
         << "\nminimax: " << format_number(z.minimax) << "\n";
    return 0;
  }
  if (command == "fragility") {
    if (!o.kmax_set) throw UsageError("fragility needs --kmax");
    inputs["kmax"] = o.kmax;
    if (!o.profile.empty()) inputs["profile"] = o.profile;
    if (o.kmax < 2 || o.kmax > game.num_players()) {
      throw UsageError("--kmax must be in 2.." + std::to_string(game.num_players()));
    }
    const MixedProfile base = base_profile(game, c, o, result, text);
    const FragilityReport f = classify_equilibrium(game, base, o.kmax, c.tol);
    result["classification"] = fragility_name(f.classification);
    result["kmax_checked"] = f.kmax_checked;
    result["k_star"] = f.witness ? Json(f.k_star()) : Json(nullptr);
    text << "classification: " << fragility_name(f.classification)
         << " (coalitions up to size " << f.kmax_checked << ")\n";
    if (f.witness) {
      const MixedProfile deviated = apply_deviation(game, base, *f.witness);
      Json strategies = Json::array(), names = Json::array();
      for (std::size_t k = 0; k < f.witness->coalition.size(); ++k) {
        const std::size_t player = f.witness->coalition.members()[k];
        strategies.push_back(f.witness->strategies[k] + 1);
        names.push_back(game.strategy_name(player, f.witness->strategies[k]));
      }
      result["witness"] = {{"coalition", coalition_json(f.witness->coalition)},
                           {"strategies", strategies},
                           {"names", names},
                           {"gains", f.witness->gains},
                           {"profile", mixed_json(game, deviated)}};
      text << "k*: " << f.k_star() << "\nwitness: coalition "
           << coalition_text(f.witness->coalition) << " moves to "
           << mixed_text(game, deviated) << ", gains "
           << numbers_text(f.witness->gains) << "\n";
    } else {
      result["witness"] = nullptr;
    }
    if (o.mixed) {
      inputs["mixed"] = true;
      MixedSearchOptions mopt;
      mopt.seed = c.seed;
      Json found = nullptr;
      for (const Coalition& coalition : coalitions(game.num_players(), 2, o.kmax)) {
        if (auto d = mixed_deviation_search(game, base, coalition, mopt)) {
          Json w = Json::array();
          for (const auto& s : d->strategies) w.push_back(s.weights());
          found = {{"coalition", coalition_json(d->coalition)},
                   {"weights", w},
                   {"gains", d->gains}};
          text << "mixed deviation: coalition " << coalition_text(d->coalition)
               << ", gains " << numbers_text(d->gains) << "\n";
          break;
        }
      }
      if (found.is_null()) text << "mixed deviation: none found (heuristic)\n";
      result["mixed_witness"] = found;
    }
    return 0;
  }
  if (command == "coop-gain") {
    if (!o.profile.empty()) inputs["profile"] = o.profile;
    const MixedProfile base = base_profile(game, c, o, result, text);
    const CooperationGainReport g = cooperation_gain(game, base);
    Json improvers = Json::array();
    for (const auto& p : g.pareto_improvers) {
      Json entry = pure_json(game, p);
      entry["payoffs"] = payoff_vector(game, p);
      improvers.push_back(entry);
    }
    result["base_payoffs"] = g.base_payoffs;
    result["pareto_improvers"] = improvers;
    result["best_welfare_gap"] = g.best_welfare_gap;
    result["max_gains"] = g.max_gains;
    text << "base payoffs: " << numbers_text(g.base_payoffs) << "\n"
         << g.pareto_improvers.size() << " Pareto-improving profile"
         << (g.pareto_improvers.size() == 1 ? "" : "s") << "\n";
    for (const auto& p : g.pareto_improvers) {
      text << "  " << pure_text(game, p) << " payoffs "
           << numbers_text(payoff_vector(game, p)) << "\n";
    }
    text << "welfare gap: " << format_number(g.best_welfare_gap)
         << "\nmax gains: " << numbers_text(g.max_gains) << "\n";
    return 0;
  }
  if (command == "dynamics") {
    if (o.start.empty()) throw UsageError("dynamics needs --start");
    const PureProfile start = parse_pure_profile(game, o.start);
    inputs["regime"] = o.regime;
    inputs["start"] = o.start;
    inputs["steps"] = o.steps;
    Trajectory t;
    if (o.regime == "c1") {
      t = c1_walk(game, start, o.steps);
    } else {
      if (o.kmax < 2 || o.kmax > game.num_players()) {
        throw UsageError("--kmax must be in 2.." + std::to_string(game.num_players()));
      }
      inputs["kmax"] = o.kmax;
      inputs["random_order"] = o.random_order;
      C2WalkOptions copt;
      copt.kmax = o.kmax;
      copt.max_steps = o.steps;
      copt.seed = c.seed;
      copt.randomize_order = o.random_order;
      t = c2_walk(game, start, copt);
    }
    Json states = Json::array(), movers = Json::array();
    for (const auto& s : t.states) states.push_back(pure_json(game, s));
    for (const auto& m : t.movers) movers.push_back(coalition_json(m));
    result = {{"regime", regime_name(t.regime)},
              {"terminal", terminal_name(t.terminal)},
              {"terminal_index", t.terminal_index},
              {"period", t.period},
              {"turns", t.turns},
              {"states", states},
              {"movers", movers}};
    if (t.regime == Regime::kC1) result["sweeps"] = t.sweeps;
    text << "regime: " << regime_name(t.regime) << "\n";
    for (std::size_t k = 0; k < t.states.size(); ++k) {
      text << k << ": " << pure_text(game, t.states[k]);
      if (k < t.movers.size()) text << "  moved by " << coalition_text(t.movers[k]);
      text << "\n";
    }
    text << "terminal: " << terminal_name(t.terminal);
    if (t.terminal == TerminalKind::kAbsorbed) {
      text << " at state " << t.terminal_index;
    } else if (t.terminal == TerminalKind::kCycle) {
      text << " entering at state " << t.terminal_index << ", period " << t.period;
    }
    text << "\nturns: " << t.turns;
    if (t.regime == Regime::kC1) text << ", sweeps: " << t.sweeps;
    text << "\n";
    return 0;
  }
  throw UsageError("unknown command " + command);
}

}  // namespace detail

// Runs one subcommand. Exit codes: 0 success, 1 domain failure (no
// equilibrium at the requested tolerance, not zero-sum, budget exceeded),
// 2 usage, parse or I/O error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Normal-form game analysis: equilibria, coalition fragility, "
               "deviation dynamics."};
  app.name("nashfrag");
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CommonOptions common;
  CommandOptions opts;
  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"info", "Summarize a game and print its canonical document"},
      {"solve", "Find one Nash equilibrium"},
      {"pure-nash", "List every pure Nash equilibrium"},
      {"verify", "Check whether a profile is a Nash equilibrium"},
      {"zerosum-value", "Value and optimal strategies of a 2-player zero-sum game"},
      {"fragility", "Classify an equilibrium against coalition deviations"},
      {"coop-gain", "Pareto improvements over an equilibrium"},
      {"dynamics", "Run round-robin (c1) or coalition (c2) deviation dynamics"},
  };
  for (const Spec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--game", common.game_path, "Game file (.game)");
    sub->add_option("--builtin", common.builtin, "Builtin game name");
    sub->add_option("--param", common.params, "Builtin parameter key=value");
    sub->add_option("--tol", common.tol, "Equilibrium tolerance")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", common.seed, "Random seed")->capture_default_str();
    sub->add_flag("--json", common.json, "Print a JSON report");
    const std::string name = spec.name;
    if (name == "verify" || name == "fragility" || name == "coop-gain") {
      sub->add_option("--profile", opts.profile,
                      "Pure \"1,2\" (indices or labels) or mixed \"0.5,0.5;1,0\"");
    }
    if (name == "fragility" || name == "dynamics") {
      sub->add_option("--kmax", opts.kmax, "Largest coalition size")
          ->each([&](const std::string&) { opts.kmax_set = true; });
    }
    if (name == "fragility") {
      sub->add_flag("--mixed", opts.mixed, "Also search mixed joint deviations");
    }
    if (name == "dynamics") {
      sub->add_option("--regime", opts.regime, "c1 or c2")
          ->required()
          ->check(CLI::IsMember({"c1", "c2"}));
      sub->add_option("--start", opts.start, "Start profile")->required();
      sub->add_option("--steps", opts.steps, "Sweep (c1) or step (c2) budget")
          ->capture_default_str();
      sub->add_flag("--random-order", opts.random_order,
                    "Shuffle coalitions within each size (c2)");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, err, err);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Json inputs = {{"tol", common.tol}, {"seed", common.seed}};
  Json result = Json::object();
  std::ostringstream text;
  int code = 0;
  try {
    const Game game = detail::load_game(common, inputs);
    code = detail::run_command(command, game, common, opts, inputs, result, text);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << (common.game_path.empty() ? "" : common.game_path + ": ")
        << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (common.json) {
    const Json report = {{"tool", "nashfrag"},
                         {"version", kVersion},
                         {"command", command},
                         {"inputs", inputs},
                         {"result", result},
                         {"status", code == 0 ? "ok" : "failed"}};
    out << report.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return code;
}

}  // namespace nashfrag::cli

#endif  // NASHFRAG_TOOLS_NASHFRAG_CLI_HPP_
