#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "scoreplay/game.hpp"
#include "scoreplay/operators.hpp"

namespace scoreplay {

// Bounds for the finite family of test games X used by every =/>= query.
// Scores range over the integers in [-score_bound, score_bound].
struct SearchBudget {
  int max_depth = 3;
  int max_width = 2;
  Score score_bound = Score(3);
  std::size_t max_candidates = 20000;

  // "depth=3,width=2,score_bound=3,max_candidates=20000"; omitted keys keep
  // their defaults. Throws std::invalid_argument.
  static SearchBudget parse(std::string_view text);
  std::string to_string() const;
  void validate() const;

  friend bool operator==(const SearchBudget&, const SearchBudget&) = default;
};

// Deterministic, duplicate-free test games for a budget, in this order:
//   1. atomics over the score grid;
//   2. games {.|a|b}, then {a|b|.}, for a on the grid and b within
//      score_bound + 2 of zero;
//   3. for d = 1..max_depth, games of depth d whose options are earlier games
//      of smaller depth, at most max_width per side. Option sets are
//      indexed by size, then colexicographically; (left, right) pairs are
//      walked along anti-diagonals of those indices, with the root score
//      varying fastest.
// The stream stops at max_candidates games. Results are cached.
std::shared_ptr<const std::vector<Game>> enumerate_test_games(const SearchBudget& budget);

// Impartial games of depth <= max_depth with every score on the grid: Left
// options come from earlier impartial games and each Left option a at root
// score s is mirrored by the Right option shift(negate(a), 2s).
std::shared_ptr<const std::vector<Game>> enumerate_impartial_games(const SearchBudget& budget);

// Final-score classes. GE/GT/LE/LT compare the final score with zero.
enum class WitnessClass { L_GE, R_GE, L_GT, R_GT, L_LE, R_LE, L_LT, R_LT, OUTCOME };

const char* to_string(WitnessClass c);
bool in_class(WitnessClass c, const FinalScores& fs);
// L_GE <-> L_LT, L_GT <-> L_LE and likewise for R; OUTCOME is fixed.
WitnessClass complement(WitnessClass c);

// Evidence that op(H, x) lies in `violated` while op(G, x) does not (or, for
// OUTCOME, that their outcomes differ).
struct Witness {
  Game x;
  WitnessClass violated;
  FinalScores g_sum;
  FinalScores h_sum;
  Outcome g_outcome;
  Outcome h_outcome;
};

// Recomputes the sums and confirms the violation.
bool replay(const Witness& w, const Game& g, const Game& h, Operator op);

// First X refuting G >= H over the classes L>=, R>=, L>, R>. The enumerated
// games are tried first, then switch games {.|a|b} and {b|a|.} whose |b|
// reaches 2 * (max |score| of G and H + 1) + score_bound + 2. No result means
// no refutation within the budget, not a proof.
std::optional<Witness> geq_refuted(const Game& g, const Game& h, Operator op = Operator::DISJUNCTIVE,
                                   const SearchBudget& budget = {});
// First X refuting G <= H over the classes L<=, R<=, L<, R<.
std::optional<Witness> leq_refuted(const Game& g, const Game& h, Operator op = Operator::DISJUNCTIVE,
                                   const SearchBudget& budget = {});
// First X with outcome(op(G, X)) != outcome(op(H, X)), same search order.
std::optional<Witness> distinguish(const Game& g, const Game& h, Operator op = Operator::DISJUNCTIVE,
                                   const SearchBudget& budget = {});

// A game P with outcome(G + P) != outcome(P): {.|1|b} with b two below minus
// the largest absolute score in G when G has Left options, the negated
// construction when only Right options exist, and atomic 0 for a nonzero
// atomic G. Throws std::invalid_argument for atomic 0.
Game distinguisher_from_zero(const Game& g);

// Rebuilds G bottom-up removing identical sibling options.
Game dedup(const Game& g);

// A reduced game plus whether any step relied on a budgeted
// non-refutation rather than an identity.
struct Reduction {
  Game game;
  bool heuristic = false;
};

// Bottom-up removal of dominated options under the disjunctive sum. A Left
// option B goes when a remaining sibling A has no refutation of A >= B
// (Right: A <= B). Mutually unrefuted pairs keep the canonically smaller.
Reduction remove_dominated(const Game& g, const SearchBudget& budget = {});

// Bottom-up bypass of reversible options: a Left option A with some A^R
// unrefuted as A^R <= G is replaced by the Left options of A^R, and
// symmetrically on the Right. Throws CapExceeded after `max_steps` bypasses.
Reduction bypass_reversible(const Game& g, const SearchBudget& budget = {}, std::size_t max_steps = 10000);

// dedup, then remove_dominated and bypass_reversible until neither changes G.
Reduction reduce(const Game& g, const SearchBudget& budget = {});

// Structural impartiality: Left options empty iff Right options empty, and
// the options pair up as mirror images about the root score, recursively.
bool is_impartial(const Game& g);

// outcome(op(G, candidate)) == outcome(G) for every impartial G in the
// budgeted impartial enumeration.
bool is_identity_for_impartials(const Game& candidate, Operator op = Operator::DISJUNCTIVE,
                                const SearchBudget& budget = {});

// Parameterized game pairs for realizing outcome triples under an operator.
struct OutcomeFamily {
  int g_params;
  int h_params;
  std::function<Game(std::span<const int>)> make_g;
  std::function<Game(std::span<const int>)> make_h;
};

OutcomeFamily outcome_family(Operator op);

struct TripleRealization {
  std::vector<int> g_params;
  std::vector<int> h_params;
  Game g;
  Game h;
};

using OutcomeTriple = std::tuple<Outcome, Outcome, Outcome>;

// Searches integer parameters in [lo, hi] for each (outcome(G), outcome(H),
// outcome(op(G, H))) triple. Parameter vectors are grouped by the outcome of
// their game; for each (outcome(G), outcome(H)) pair up to `max_tries`
// seeded random draws are made. Deterministic.
std::map<OutcomeTriple, TripleRealization> outcome_triple_search(Operator op, int lo, int hi,
                                                                 std::size_t max_tries = 20000);

}  // namespace scoreplay
