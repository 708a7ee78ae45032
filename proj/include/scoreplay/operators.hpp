#pragma once

#include <string_view>
#include <vector>

#include "scoreplay/game.hpp"

namespace scoreplay {

enum class Operator { DISJUNCTIVE, CONJUNCTIVE, SELECTIVE, SEQUENTIAL };

// LONG: a compound ends when the mover has no move in any component.
// SHORT: it ends as soon as some component leaves the mover without a move.
// The sequential join ignores the rule.
enum class EndRule { LONG, SHORT };

const char* to_string(Operator op);
// Accepts disj/conj/sel/seq and the full lower-case names.
Operator parse_operator(std::string_view text);
EndRule parse_end_rule(std::string_view text);
bool is_commutative(Operator op);

Game disjunctive_sum(const Game& g, const Game& h, EndRule rule = EndRule::LONG);
Game conjunctive_sum(const Game& g, const Game& h, EndRule rule = EndRule::LONG);
Game selective_sum(const Game& g, const Game& h, EndRule rule = EndRule::LONG);
Game sequential_join(const Game& g, const Game& h);

Game combine(Operator op, const Game& g, const Game& h, EndRule rule = EndRule::LONG);

// Left fold over a nonempty list.
Game n_ary(Operator op, const std::vector<Game>& games, EndRule rule = EndRule::LONG);

struct FinalScores {
  Score left;
  Score right;
};

// Final scores of combine(op, g, h, rule), evaluated over pairs of
// component positions without building the combined tree.
FinalScores combined_final_scores(Operator op, const Game& g, const Game& h, EndRule rule = EndRule::LONG);
Outcome combined_outcome(Operator op, const Game& g, const Game& h, EndRule rule = EndRule::LONG);

}  // namespace scoreplay
