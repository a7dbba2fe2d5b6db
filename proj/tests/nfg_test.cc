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

#include "nashfrag/nfg.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "nashfrag/builtins.hpp"
#include "nashfrag/random.hpp"

namespace nashfrag {
namespace {

constexpr const char* kCanonicalPd =
    "players 2\n"
    "strategies 2 2\n"
    "labels 1 C D\n"
    "labels 2 C D\n"
    "payoffs 1 3 0 5 1\n"
    "payoffs 2 3 5 0 1\n";

bool bit_identical(const Game& a, const Game& b) {
  if (a.strategy_counts() != b.strategy_counts()) return false;
  for (std::size_t i = 0; i < a.num_players(); ++i) {
    if (a.labels(i) != b.labels(i)) return false;
    for (std::size_t k = 0; k < a.num_profiles(); ++k) {
      if (std::bit_cast<std::uint64_t>(a.payoff_at(i, k)) !=
          std::bit_cast<std::uint64_t>(b.payoff_at(i, k))) {
        return false;
      }
    }
  }
  return true;
}

// Payoffs drawn to stress shortest round-trip formatting.
double awkward_double(SplitMix64& rng) {
  switch (rng.below(8)) {
    case 0: return -0.0;
    case 1: return std::numeric_limits<double>::denorm_min() *
                   static_cast<double>(1 + rng.below(1000));
    case 2: return std::numeric_limits<double>::max() * rng.uniform();
    case 3: return static_cast<double>(static_cast<std::int64_t>(rng.next() >> 12)) -
                   static_cast<double>(std::int64_t{1} << 51);
    case 4: return 0.1 * static_cast<double>(rng.below(100));
    case 5: return std::ldexp(rng.uniform(-1, 1), static_cast<int>(rng.below(600)) - 300);
    default: return rng.uniform(-1, 1);
  }
}

Game random_document_game(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::size_t n = 2 + rng.below(3);
  std::vector<std::size_t> counts(n);
  std::size_t profiles = 1;
  for (auto& m : counts) profiles *= (m = 1 + rng.below(3));
  std::vector<std::vector<double>> payoffs(n, std::vector<double>(profiles));
  for (auto& list : payoffs) {
    for (double& v : list) v = awkward_double(rng);
  }
  std::vector<std::vector<std::string>> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.below(2) == 0) continue;
    for (std::size_t s = 0; s < counts[i]; ++s) {
      labels[i].push_back("s" + std::to_string(i) + "_" + std::to_string(s));
    }
  }
  return Game(counts, payoffs, labels);
}

TEST(ParseGame, CanonicalPrisonersDilemmaMatchesBuiltin) {
  const Game parsed = parse_game(kCanonicalPd);
  EXPECT_EQ(parsed, prisoners_dilemma());
  EXPECT_EQ(serialize_game(prisoners_dilemma()), kCanonicalPd);
}

TEST(ParseGame, MissingPayoffNamesPlayerAndCount) {
  try {
    parse_game("players 2\nstrategies 2 2\npayoffs 1 3 0 5\npayoffs 2 3 5 0 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(e.message().find("player 1"), std::string::npos);
    EXPECT_NE(e.message().find("expected 4"), std::string::npos);
    EXPECT_NE(e.message().find("got 3"), std::string::npos);
  }
}

TEST(ParseGame, ZeroStrategies) {
  try {
    parse_game("players 2\nstrategies 2 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 14u);
    EXPECT_NE(e.message().find("m_i >= 1"), std::string::npos);
  }
}

TEST(ParseGame, MultiLineSectionsAndComments) {
  const GameDocument doc = parse_document(
      "# prisoners dilemma\n"
      "players   2   # two of them\n"
      "\tstrategies 2 2\r\n"
      "payoffs 2\n  3 5\n  0 1\n"
      "payoffs 1\n  3 0\n  5 1\n"
      "labels 2 C D\nlabels 1 C D\n");
  EXPECT_EQ(doc.game, prisoners_dilemma());
  EXPECT_EQ(doc.comments,
            (std::vector<std::string>{"prisoners dilemma", "two of them"}));
  EXPECT_EQ(serialize_game(doc.game), kCanonicalPd);
  EXPECT_EQ(serialize_document(doc),
            std::string("# prisoners dilemma\n# two of them\n") + kCanonicalPd);
}

TEST(ParseGame, AcceptsLeadingPlusAndExponents) {
  const Game g = parse_game("players 2\nstrategies 1 2\npayoffs 1 +1.5 -2e-3\n"
                            "payoffs 2 1E2 0\n");
  EXPECT_EQ(g.payoff_at(0, 0), 1.5);
  EXPECT_EQ(g.payoff_at(0, 1), -2e-3);
  EXPECT_EQ(g.payoff_at(1, 0), 100.0);
}

TEST(ParseGame, MalformedCorpusReportsExpectedLines) {
  std::size_t checked = 0;
  for (const auto& entry :
       std::filesystem::directory_iterator(NASHFRAG_CORPUS_DIR "/malformed")) {
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    const auto marker = text.find("expect-line:");
    ASSERT_NE(marker, std::string::npos) << entry.path();
    const std::size_t expected = std::stoul(text.substr(marker + 12));
    try {
      parse_game(text);
      ADD_FAILURE() << entry.path() << " parsed without error";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), expected) << entry.path() << ": " << e.what();
    }
    ++checked;
  }
  EXPECT_GE(checked, 20u);
}

TEST(SerializeGame, RoundTripIsBitIdentical) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Game g = random_document_game(seed);
    const std::string text = serialize_game(g);
    const Game back = parse_game(text);
    EXPECT_TRUE(bit_identical(g, back)) << text;
    EXPECT_EQ(serialize_game(back), text);
  }
}

TEST(SerializeGame, CanonicalizesWhitespace) {
  const std::string messy =
      "  players 2\n\nstrategies   2 2 \npayoffs 1 3 0\n 5 1\npayoffs 2 3.0 5 0 "
      "1.000\n";
  const Game g = parse_game(messy);
  EXPECT_EQ(serialize_game(g),
            "players 2\nstrategies 2 2\npayoffs 1 3 0 5 1\npayoffs 2 3 5 0 1\n");
  EXPECT_EQ(serialize_game(parse_game(serialize_game(g))), serialize_game(g));
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(-0.0), "-0");
  EXPECT_EQ(format_number(5), "5");
  EXPECT_EQ(format_number(1e-5), "1e-05");
}

TEST(ReadGameFile, MissingFileIsIoError) {
  EXPECT_THROW(read_game_file("/nonexistent/missing.game"), IoError);
}

}  // namespace
}  // namespace nashfrag
