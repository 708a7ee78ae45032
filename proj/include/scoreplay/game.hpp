#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "scoreplay/score.hpp"

namespace scoreplay {

class GameNode;

// Handle to an immutable, interned game {left | score | right}.
//
// Construction sorts each option list into canonical order and drops
// structural duplicates. Because nodes are interned, two handles are
// structurally equal exactly when they point at the same node.
class Game {
 public:
  Game();  // atomic 0

  static Game atomic(Score score);
  static Game make(std::vector<Game> left, Score score, std::vector<Game> right);

  const Score& score() const;
  std::span<const Game> left() const;
  std::span<const Game> right() const;
  bool is_atomic() const;

  // Cached at construction.
  const Score& final_left() const;
  const Score& final_right() const;
  int depth() const;
  std::uint64_t size() const;  // saturates at UINT64_MAX
  std::size_t hash() const;

  const GameNode* node() const { return node_.get(); }

  friend bool operator==(const Game& a, const Game& b) { return a.node_ == b.node_; }

 private:
  explicit Game(std::shared_ptr<const GameNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const GameNode> node_;
  friend class GameNode;
  friend struct Interner;
};

// Structural total order used for canonical option lists: score first,
// then Left options lexicographically, then Right options.
int compare(const Game& a, const Game& b);

struct CanonicalLess {
  bool operator()(const Game& a, const Game& b) const { return compare(a, b) < 0; }
};

// Plumbing constructor; identical to Game::make.
Game make_game(std::vector<Game> left, Score score, std::vector<Game> right);

enum class Outcome { L, R, N, P, TIE };

Outcome mirror(Outcome o);
const char* to_string(Outcome o);

Score final_score_left(const Game& g);
Score final_score_right(const Game& g);
Outcome outcome(const Game& g);
Outcome outcome_from_scores(const Score& sl, const Score& sr);

Game negate(const Game& g);
Game shift(const Game& g, const Score& r);

int depth(const Game& g);
// Throws CapExceeded if the node count does not fit in 64 bits.
std::uint64_t size(const Game& g);

// Largest absolute score anywhere in the tree.
Score max_abs_score(const Game& g);

// Number of distinct nodes currently alive in the intern table.
std::size_t interned_count();

}  // namespace scoreplay

template <>
struct std::hash<scoreplay::Game> {
  std::size_t operator()(const scoreplay::Game& g) const noexcept { return g.hash(); }
};
