#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "scoreplay/equivalence.hpp"
#include "scoreplay/errors.hpp"
#include "scoreplay/notation.hpp"
#include "scoreplay/positions.hpp"
#include "test_games.hpp"
#include "test_rulesets.hpp"

using namespace scoreplay;

namespace {

HackGraph load(const std::string& name) {
  std::ifstream in(std::string(SCOREPLAY_TEST_DATA) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  return parse_hackenbush(in);
}

HackGraph path_graph(Operator op, int variant = 1) {
  HackGraph g = load("hex.hack");
  g.split_op = op;
  g.variant = variant;
  return g;
}

bool no_right_options_anywhere(const Game& g) {
  if (!g.right().empty()) return false;
  return std::all_of(g.left().begin(), g.left().end(), no_right_options_anywhere);
}

// Direct Hackenbush construction that never splits into components.
Game unsplit_hackenbush(const HackGraph& g, std::uint32_t mask) {
  auto grounded_part = [&](std::uint32_t m) {
    std::uint32_t kept = 0;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (!(m >> e & 1) || (kept >> e & 1)) continue;
        auto touches = [&](int v) {
          if (std::find(g.grounded.begin(), g.grounded.end(), v) != g.grounded.end()) return true;
          for (std::size_t f = 0; f < g.edges.size(); ++f)
            if ((kept >> f & 1) && (g.edges[f].u == v || g.edges[f].v == v)) return true;
          return false;
        };
        if (touches(g.edges[e].u) || touches(g.edges[e].v)) {
          kept |= 1u << e;
          grew = true;
        }
      }
    }
    return kept;
  };
  std::vector<Game> l, r;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!(mask >> e & 1)) continue;
    std::uint32_t rest = grounded_part(mask & ~(1u << e));
    int removed = std::popcount(mask & ~rest);
    if (g.edges[e].color == EdgeColor::BLUE) {
      l.push_back(shift(unsplit_hackenbush(g, rest), removed));
    } else {
      r.push_back(shift(unsplit_hackenbush(g, rest), -removed));
    }
  }
  return Game::make(std::move(l), 0, std::move(r));
}

}  // namespace

TEST(ToadsFrogs, ThreeCells) {
  EXPECT_EQ(print_game(toads_frogs_game("TBF")), "{{.|0|{-1|-1|.}}|0|{{.|1|1}|0|.}}");
}

TEST(ToadsFrogs, FourCells) {
  EXPECT_EQ(print_game(toads_frogs_game("TTBF")),
            "{{0|0|{{{.|0|0}|-1|.}|-1|.}}|0|{{{.|1|{0|0|.}}|1|{{.|2|2}|1|.}}|0|.}}");
}

TEST(ToadsFrogs, Trivial) {
  EXPECT_EQ(toads_frogs_game("T"), Game::atomic(0));
  EXPECT_EQ(toads_frogs_game("T.F"), toads_frogs_game("TBF"));
  EXPECT_EQ(toads_frogs_game("BTF"), G("{.|0|{-1|-1|.}}"));
  EXPECT_EQ(toads_frogs_game("TFB"), G("{{.|1|1}|0|.}"));
}

TEST(ToadsFrogs, Errors) {
  EXPECT_THROW(toads_frogs_game(""), std::invalid_argument);
  EXPECT_THROW(toads_frogs_game("TXF"), ParseError);
  EXPECT_THROW(toads_frogs_game("TTTTBBBBFFFFB"), CapExceeded);
}

TEST(ToadsFrogs, MirroringNegates) {
  const std::string cells = "TFB";
  for (int len = 1; len <= 6; ++len) {
    int total = 1;
    for (int i = 0; i < len; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      std::string board, mirrored;
      for (int i = 0, c = code; i < len; ++i, c /= 3) board += cells[c % 3];
      for (auto it = board.rbegin(); it != board.rend(); ++it) mirrored += *it == 'T' ? 'F' : *it == 'F' ? 'T' : 'B';
      EXPECT_EQ(toads_frogs_game(mirrored), negate(toads_frogs_game(board))) << board;
    }
  }
}

TEST(Hackenbush, SingleBlueEdge) {
  HackGraph g{{{0, 1, EdgeColor::BLUE}}, {0}};
  EXPECT_EQ(hackenbush_game(g), G("{1|0|.}"));
}

TEST(Hackenbush, TwoBlueEdges) {
  HackGraph g{{{0, 1, EdgeColor::BLUE}, {0, 2, EdgeColor::BLUE}}, {0}};
  EXPECT_EQ(hackenbush_game(g), disjunctive_sum(G("{1|0|.}"), G("{1|0|.}")));
  EXPECT_EQ(hackenbush_game(g), G("{{2|1|.}|0|.}"));
}

TEST(Hackenbush, BlueUnderRed) {
  EXPECT_EQ(hackenbush_game(load("blue_red_stalk.hack")), G("{2|0|{0|-1|.}}"));
}

TEST(Hackenbush, EmptyGraph) { EXPECT_EQ(hackenbush_game(HackGraph{}), Game::atomic(0)); }

TEST(Hackenbush, ConjunctiveSplit) {
  EXPECT_EQ(hackenbush_game(path_graph(Operator::CONJUNCTIVE)), G("{{.|1|-1}|0|{{.|0|-1}|-1|-3}}"));
}

TEST(Hackenbush, SelectiveAndSequentialSplits) {
  Game sel = hackenbush_game(path_graph(Operator::SELECTIVE));
  EXPECT_EQ(sel, G("{{.|1|-1,{.|0|-1}}|0|{{.|0|-1}|-1|-3}}"));
  EXPECT_EQ(final_score_left(sel), Score(-1));
  EXPECT_EQ(final_score_right(sel), Score(-1));
  Game seq = hackenbush_game(path_graph(Operator::SEQUENTIAL));
  EXPECT_EQ(seq, G("{{.|1|{.|0|-1}}|0|{{.|0|-1}|-1|-3}}"));
  EXPECT_EQ(final_score_left(seq), Score(0));
  EXPECT_EQ(final_score_right(seq), Score(-1));
}

TEST(Hackenbush, VariantsDiffer) {
  Game v1 = hackenbush_game(path_graph(Operator::CONJUNCTIVE, 1));
  Game v2 = hackenbush_game(path_graph(Operator::CONJUNCTIVE, 2));
  Game v3 = hackenbush_game(path_graph(Operator::CONJUNCTIVE, 3));
  EXPECT_NE(v1, v2);
  EXPECT_NE(v2, v3);
  // Right's deletion of the 6-7 edge drops a blue edge too.
  EXPECT_EQ(v2, G("{{.|1|-1}|0|{{.|0|-1}|-1|-2}}"));
  EXPECT_EQ(v3, G("{{.|1|-1}|0|{{.|0|-1}|-1|-1}}"));
}

TEST(Hackenbush, DisjunctiveSplitMatchesUnsplitConstruction) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    HackGraph g;
    g.grounded = {0};
    int n = 1 + trial % 7;
    for (int i = 0; i < n; ++i) {
      int u = std::uniform_int_distribution<int>(0, i)(rng);
      EdgeColor c = rng() % 2 ? EdgeColor::BLUE : EdgeColor::RED;
      g.edges.push_back({u, i + 1, c});
    }
    if (trial % 3 == 0) g.edges.push_back({0, n, EdgeColor::RED});
    EXPECT_EQ(hackenbush_game(g), unsplit_hackenbush(g, (1u << g.edges.size()) - 1)) << trial;
  }
}

TEST(Hackenbush, AllBlueHasNoRightOptions) {
  HackGraph g{{{0, 1, EdgeColor::BLUE}, {1, 2, EdgeColor::BLUE}, {1, 3, EdgeColor::BLUE}, {0, 3, EdgeColor::BLUE}},
              {0}};
  for (Operator op : {Operator::DISJUNCTIVE, Operator::CONJUNCTIVE, Operator::SELECTIVE, Operator::SEQUENTIAL}) {
    g.split_op = op;
    EXPECT_TRUE(no_right_options_anywhere(hackenbush_game(g)));
  }
}

TEST(Hackenbush, FileErrors) {
  std::istringstream bad("ground 0\nedge 0 1 G\n");
  try {
    parse_hackenbush(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  std::istringstream unknown("vertex 3\n");
  EXPECT_THROW(parse_hackenbush(unknown), ParseError);
  HackGraph floating{{{0, 1, EdgeColor::BLUE}}, {}};
  EXPECT_THROW(hackenbush_game(floating), std::invalid_argument);
}

TEST(Octal, EmptyAndSingleHeap) {
  auto s45 = OctalRuleset::parse("sub{4,5}");
  EXPECT_EQ(octal_to_game({s45}, {}, Operator::DISJUNCTIVE), Game::atomic(0));
  EXPECT_EQ(final_score_left(octal_to_game({s45}, {{4, 0}}, Operator::DISJUNCTIVE)), Score(4));
}

TEST(Octal, ImpartialWithSymmetricPoints) {
  for (const auto& [name, r] : standard_rulesets())
    for (int n = 0; n <= 8; ++n)
      EXPECT_TRUE(is_impartial(octal_to_game({r}, {{n, 0}, {2, 0}}, Operator::DISJUNCTIVE))) << name << " " << n;
}

TEST(Octal, FinalScoresMatchGs) {
  for (const auto& [name, r] : standard_rulesets()) {
    for (Operator op : {Operator::DISJUNCTIVE, Operator::CONJUNCTIVE, Operator::SELECTIVE, Operator::SEQUENTIAL}) {
      GrundySolver solver({r}, op);
      for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m) {
          Game g = octal_to_game({r}, {{n, 0}, {m, 0}}, op);
          EXPECT_EQ(final_score_left(g), solver.gs({{n, 0}, {m, 0}})) << name;
          EXPECT_EQ(final_score_right(g), -solver.gs({{n, 0}, {m, 0}})) << name;
        }
    }
  }
}
