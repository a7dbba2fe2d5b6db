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

#ifndef NASHFRAG_NFG_HPP_
#define NASHFRAG_NFG_HPP_

// NFG-lite: a small whitespace-tokenized text format for normal-form games.
//
//   # comment to end of line
//   players 2
//   strategies 2 2
//   labels 1 C D            (optional, at most once per player)
//   labels 2 C D
//   payoffs 1 3 0 5 1       (prod m_j values, last player fastest)
//   payoffs 2 3 5 0 1
//
// `players` and `strategies` come first, in that order. `labels` and
// `payoffs` sections may appear in any order afterwards and their values may
// continue over several lines; every player needs exactly one `payoffs`.
// Player numbers are 1-based.
//
// serialize_game emits the canonical form: the sections above in that order
// (labels only where present), one section per line, single spaces, and
// numbers in the shortest decimal form that reads back to the same double.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "nashfrag/error.hpp"
#include "nashfrag/game.hpp"

namespace nashfrag {

struct GameDocument {
  Game game;
  // Comment text (without the leading '#' and one following space), in
  // document order.
  std::vector<std::string> comments;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline bool is_directive(std::string_view s) {
  return s == "players" || s == "strategies" || s == "labels" ||
         s == "payoffs";
}

inline void tokenize(std::string_view text, std::vector<Token>& tokens,
                     std::vector<std::string>& comments,
                     std::size_t& last_line) {
  std::size_t line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view content = text.substr(pos, end - pos);
    if (!content.empty() && content.back() == '\r') content.remove_suffix(1);
    if (!content.empty()) last_line = line;
    if (const auto hash = content.find('#'); hash != std::string_view::npos) {
      std::string_view c = content.substr(hash + 1);
      if (!c.empty() && c.front() == ' ') c.remove_prefix(1);
      comments.emplace_back(c);
      content = content.substr(0, hash);
    }
    std::size_t i = 0;
    while (i < content.size()) {
      while (i < content.size() && (content[i] == ' ' || content[i] == '\t' ||
                                    content[i] == '\v' || content[i] == '\f')) {
        ++i;
      }
      if (i >= content.size()) break;
      const std::size_t start = i;
      while (i < content.size() && content[i] != ' ' && content[i] != '\t' &&
             content[i] != '\v' && content[i] != '\f') {
        ++i;
      }
      tokens.push_back(
          Token{std::string(content.substr(start, i - start)), line, start + 1});
    }
    if (end == text.size()) break;
    pos = end + 1;
    ++line;
  }
}

inline std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t last_line)
      : tokens_(std::move(tokens)), last_line_(last_line) {}

  Game Parse() {
    if (tokens_.empty()) throw ParseError(1, 1, "empty document");
    const Token& first = tokens_[0];
    if (first.text != "players") {
      throw ParseError(first.line, first.column,
                       "expected 'players' as the first directive, got '" +
                           first.text + "'");
    }
    ++pos_;
    const Token& n_tok = Next("player count");
    const auto n = parse_count(n_tok.text);
    if (!n) Fail(n_tok, "player count must be a non-negative integer, got '" +
                            n_tok.text + "'");
    if (*n < 2) Fail(n_tok, "at least 2 players are required, got " + n_tok.text);
    if (*n > 64) Fail(n_tok, "at most 64 players are supported");

    if (pos_ >= tokens_.size() || tokens_[pos_].text != "strategies") {
      const Token& t = pos_ < tokens_.size() ? tokens_[pos_] : tokens_.back();
      Fail(t, "expected 'strategies' directive after 'players'");
    }
    const Token& strat_tok = tokens_[pos_++];
    std::vector<std::size_t> counts;
    std::size_t profiles = 1;
    while (pos_ < tokens_.size() && !is_directive(tokens_[pos_].text)) {
      const Token& t = tokens_[pos_++];
      const auto m = parse_count(t.text);
      if (!m) Fail(t, "strategy count must be a non-negative integer, got '" +
                          t.text + "'");
      if (*m < 1) {
        Fail(t, "player " + std::to_string(counts.size() + 1) +
                    ": at least 1 strategy is required (m_i >= 1)");
      }
      if (profiles > kMaxProfiles / *m) Fail(t, "too many pure profiles");
      profiles *= *m;
      counts.push_back(*m);
    }
    if (counts.size() != *n) {
      Fail(strat_tok, "expected " + std::to_string(*n) +
                          " strategy counts, got " +
                          std::to_string(counts.size()));
    }

    std::vector<std::vector<std::string>> labels(*n);
    std::vector<bool> has_labels(*n, false);
    std::vector<std::vector<double>> payoffs(*n);
    std::vector<bool> has_payoffs(*n, false);
    while (pos_ < tokens_.size()) {
      const Token& dir = tokens_[pos_++];
      if (dir.text == "players" || dir.text == "strategies") {
        Fail(dir, "duplicate '" + dir.text + "' section");
      }
      if (dir.text != "labels" && dir.text != "payoffs") {
        Fail(dir, "unexpected token '" + dir.text +
                      "', expected a 'labels' or 'payoffs' directive");
      }
      const Token& p_tok = Next("player number");
      const auto p = parse_count(p_tok.text);
      if (!p || *p < 1 || *p > *n) {
        Fail(p_tok, "player number must be in 1.." + std::to_string(*n) +
                        ", got '" + p_tok.text + "'");
      }
      const std::size_t i = *p - 1;
      if (dir.text == "labels") {
        if (has_labels[i]) {
          Fail(dir, "duplicate labels section for player " + p_tok.text);
        }
        has_labels[i] = true;
        std::set<std::string> seen;
        for (std::size_t s = 0; s < counts[i]; ++s) {
          if (pos_ >= tokens_.size() || is_directive(tokens_[pos_].text)) {
            Fail(dir, "player " + p_tok.text + ": expected " +
                          std::to_string(counts[i]) + " labels, got " +
                          std::to_string(s));
          }
          const Token& t = tokens_[pos_++];
          if (!seen.insert(t.text).second) {
            Fail(t, "player " + p_tok.text + ": duplicate label '" + t.text +
                        "'");
          }
          labels[i].push_back(t.text);
        }
      } else {
        if (has_payoffs[i]) {
          Fail(dir, "duplicate payoffs section for player " + p_tok.text);
        }
        has_payoffs[i] = true;
        while (pos_ < tokens_.size() && !is_directive(tokens_[pos_].text)) {
          const Token& t = tokens_[pos_++];
          if (payoffs[i].size() == profiles) {
            Fail(dir, "player " + p_tok.text + ": expected " +
                          std::to_string(profiles) +
                          " payoff values, got more (first extra value at "
                          "line " + std::to_string(t.line) + ", column " +
                          std::to_string(t.column) + ")");
          }
          payoffs[i].push_back(ParseNumber(t, i));
        }
        if (payoffs[i].size() != profiles) {
          Fail(dir, "player " + p_tok.text + ": expected " +
                        std::to_string(profiles) + " payoff values, got " +
                        std::to_string(payoffs[i].size()));
        }
      }
    }
    for (std::size_t i = 0; i < *n; ++i) {
      if (!has_payoffs[i]) {
        throw ParseError(last_line_, 1,
                         "missing payoffs section for player " +
                             std::to_string(i + 1));
      }
    }
    try {
      return Game(std::move(counts), std::move(payoffs), std::move(labels));
    } catch (const InvalidArgument& e) {
      throw ParseError(first.line, first.column, e.what());
    }
  }

 private:
  static constexpr std::size_t kMaxProfiles = std::size_t{1} << 40;

  [[noreturn]] static void Fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.column, msg);
  }

  const Token& Next(const char* what) {
    if (pos_ >= tokens_.size()) {
      throw ParseError(last_line_, 1,
                       std::string("unexpected end of document, expected ") +
                           what);
    }
    const Token& t = tokens_[pos_];
    if (is_directive(t.text)) {
      Fail(t, std::string("expected ") + what + ", got directive '" + t.text +
                  "'");
    }
    ++pos_;
    return t;
  }

  static double ParseNumber(const Token& t, std::size_t player) {
    std::string_view s = t.text;
    if (s.size() > 1 && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range) {
      Fail(t, "player " + std::to_string(player + 1) + ": payoff '" + t.text +
                  "' is not finite");
    }
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      Fail(t, "player " + std::to_string(player + 1) + ": invalid number '" +
                  t.text + "'");
    }
    if (!std::isfinite(v)) {
      Fail(t, "player " + std::to_string(player + 1) + ": payoff '" + t.text +
                  "' is not finite");
    }
    return v;
  }

  std::vector<Token> tokens_;
  std::size_t last_line_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GameDocument parse_document(std::string_view text) {
  std::vector<detail::Token> tokens;
  std::vector<std::string> comments;
  std::size_t last_line = 1;
  detail::tokenize(text, tokens, comments, last_line);
  detail::Parser parser(std::move(tokens), last_line);
  return GameDocument{parser.Parse(), std::move(comments)};
}

inline Game parse_game(std::string_view text) {
  return parse_document(text).game;
}

// Shortest decimal string that parses back to exactly `v`.
inline std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

inline std::string serialize_game(const Game& game) {
  std::string out;
  out += "players " + std::to_string(game.num_players()) + "\n";
  out += "strategies";
  for (std::size_t m : game.strategy_counts()) out += " " + std::to_string(m);
  out += "\n";
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    if (!game.has_labels(i)) continue;
    out += "labels " + std::to_string(i + 1);
    for (const auto& l : game.labels(i)) out += " " + l;
    out += "\n";
  }
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    out += "payoffs " + std::to_string(i + 1);
    for (double v : game.payoffs(i)) out += " " + format_number(v);
    out += "\n";
  }
  return out;
}

inline std::string serialize_document(const GameDocument& doc) {
  std::string out;
  for (const auto& c : doc.comments) out += c.empty() ? "#\n" : "# " + c + "\n";
  return out + serialize_game(doc.game);
}

// Reads and parses a .game file.
inline GameDocument read_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open game file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

}  // namespace nashfrag

#endif  // NASHFRAG_NFG_HPP_
