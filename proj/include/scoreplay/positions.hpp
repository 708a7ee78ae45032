#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "scoreplay/game.hpp"
#include "scoreplay/grundy.hpp"
#include "scoreplay/operators.hpp"

namespace scoreplay {

inline constexpr std::size_t kMaxBoardCells = 12;
inline constexpr std::size_t kMaxHackenbushEdges = 12;

// Toads (T) move right for Left, Frogs (F) move left for Right; B or '.'
// is blank. A slide scores nothing, a jump over one opposing piece scores a
// point for the jumper.
Game toads_frogs_game(std::string_view board);

enum class EdgeColor { BLUE, RED };

struct HackEdge {
  int u;
  int v;
  EdgeColor color;
};

// Scoring for the player who deletes an edge, counting every edge removed
// that turn (the deleted one plus any that fall):
//   1: one point per removed edge
//   2: one point per removed edge of the mover's own color
//   3: own-color edges count +1, opponent-color edges count -1
struct HackGraph {
  std::vector<HackEdge> edges;
  std::vector<int> grounded;
  int variant = 1;
  Operator split_op = Operator::DISJUNCTIVE;
};

// Left deletes blue edges, Right deletes red. When the remaining edges fall
// into several pieces, the pieces are combined with `split_op` in order of
// their lowest edge index. Grounded vertices are not joined to each other.
Game hackenbush_game(const HackGraph& graph);

// Lines "ground <v>" and "edge <u> <v> <B|R>"; '#' starts a comment.
// Vertex labels are arbitrary tokens. Throws ParseError with a line number.
HackGraph parse_hackenbush(std::istream& in);

Game octal_to_game(const std::vector<OctalRuleset>& rulesets, const HeapPosition& position, Operator op);

}  // namespace scoreplay
