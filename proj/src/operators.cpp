#include "scoreplay/operators.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace scoreplay {
namespace {

using Pair = std::pair<const GameNode*, const GameNode*>;

struct PairHash {
  std::size_t operator()(const Pair& p) const noexcept {
    std::size_t a = std::hash<const void*>{}(p.first);
    std::size_t b = std::hash<const void*>{}(p.second);
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  }
};

enum class Side { LEFT, RIGHT };

std::span<const Game> opts(const Game& g, Side s) { return s == Side::LEFT ? g.left() : g.right(); }

// Successor component pairs of the compound (g, h) for the player on `side`.
template <class Emit>
void successors(Operator op, EndRule rule, const Game& g, const Game& h, Side side, Emit&& emit) {
  auto go = opts(g, side);
  auto ho = opts(h, side);
  bool short_stop = rule == EndRule::SHORT && (go.empty() || ho.empty());
  switch (op) {
    case Operator::DISJUNCTIVE:
      if (short_stop) return;
      for (const auto& x : go) emit(x, h);
      for (const auto& y : ho) emit(g, y);
      return;
    case Operator::CONJUNCTIVE:
      if (!go.empty() && !ho.empty()) {
        for (const auto& x : go)
          for (const auto& y : ho) emit(x, y);
        return;
      }
      if (short_stop) return;
      for (const auto& x : go) emit(x, h);
      for (const auto& y : ho) emit(g, y);
      return;
    case Operator::SELECTIVE:
      if (short_stop) return;
      for (const auto& x : go) emit(x, h);
      for (const auto& y : ho) emit(g, y);
      for (const auto& x : go)
        for (const auto& y : ho) emit(x, y);
      return;
    case Operator::SEQUENTIAL:
      if (!g.is_atomic()) {
        for (const auto& x : go) emit(x, h);
      } else {
        for (const auto& y : ho) emit(g, y);
      }
      return;
  }
}

class Builder {
 public:
  Builder(Operator op, EndRule rule) : op_(op), rule_(rule) {}

  Game build(const Game& g, const Game& h) {
    Pair key{g.node(), h.node()};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Game> left, right;
    successors(op_, rule_, g, h, Side::LEFT, [&](const Game& a, const Game& b) { left.push_back(build(a, b)); });
    successors(op_, rule_, g, h, Side::RIGHT, [&](const Game& a, const Game& b) { right.push_back(build(a, b)); });
    Game r = Game::make(std::move(left), g.score() + h.score(), std::move(right));
    memo_.emplace(key, r);
    return r;
  }

 private:
  Operator op_;
  EndRule rule_;
  std::unordered_map<Pair, Game, PairHash> memo_;
};

class Evaluator {
 public:
  Evaluator(Operator op, EndRule rule) : op_(op), rule_(rule) {}

  FinalScores eval(const Game& g, const Game& h) {
    Pair key{g.node(), h.node()};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    FinalScores fs{Score(0), Score(0)};
    bool any = false;
    successors(op_, rule_, g, h, Side::LEFT, [&](const Game& a, const Game& b) {
      Score v = eval(a, b).right;
      if (!any || v > fs.left) fs.left = v;
      any = true;
    });
    if (!any) fs.left = g.score() + h.score();
    any = false;
    successors(op_, rule_, g, h, Side::RIGHT, [&](const Game& a, const Game& b) {
      Score v = eval(a, b).left;
      if (!any || v < fs.right) fs.right = v;
      any = true;
    });
    if (!any) fs.right = g.score() + h.score();
    memo_.emplace(key, fs);
    return fs;
  }

 private:
  Operator op_;
  EndRule rule_;
  std::unordered_map<Pair, FinalScores, PairHash> memo_;
};

}  // namespace

const char* to_string(Operator op) {
  switch (op) {
    case Operator::DISJUNCTIVE: return "disj";
    case Operator::CONJUNCTIVE: return "conj";
    case Operator::SELECTIVE: return "sel";
    case Operator::SEQUENTIAL: return "seq";
  }
  return "?";
}

Operator parse_operator(std::string_view text) {
  if (text == "disj" || text == "disjunctive") return Operator::DISJUNCTIVE;
  if (text == "conj" || text == "conjunctive") return Operator::CONJUNCTIVE;
  if (text == "sel" || text == "selective") return Operator::SELECTIVE;
  if (text == "seq" || text == "sequential") return Operator::SEQUENTIAL;
  throw std::invalid_argument("unknown operator: " + std::string(text));
}

EndRule parse_end_rule(std::string_view text) {
  if (text == "long") return EndRule::LONG;
  if (text == "short") return EndRule::SHORT;
  throw std::invalid_argument("unknown end rule: " + std::string(text));
}

bool is_commutative(Operator op) { return op != Operator::SEQUENTIAL; }

Game combine(Operator op, const Game& g, const Game& h, EndRule rule) {
  if (op == Operator::SEQUENTIAL) rule = EndRule::LONG;
  if (rule == EndRule::LONG) {
    // Under the long rule an atomic component only shifts the other.
    if (h.is_atomic()) return shift(g, h.score());
    if (g.is_atomic()) return shift(h, g.score());
  }
  return Builder(op, rule).build(g, h);
}

Game disjunctive_sum(const Game& g, const Game& h, EndRule rule) { return combine(Operator::DISJUNCTIVE, g, h, rule); }
Game conjunctive_sum(const Game& g, const Game& h, EndRule rule) { return combine(Operator::CONJUNCTIVE, g, h, rule); }
Game selective_sum(const Game& g, const Game& h, EndRule rule) { return combine(Operator::SELECTIVE, g, h, rule); }
Game sequential_join(const Game& g, const Game& h) { return combine(Operator::SEQUENTIAL, g, h); }

Game n_ary(Operator op, const std::vector<Game>& games, EndRule rule) {
  if (games.empty()) throw std::invalid_argument("n_ary needs at least one game");
  Game acc = games.front();
  for (std::size_t i = 1; i < games.size(); ++i) acc = combine(op, acc, games[i], rule);
  return acc;
}

FinalScores combined_final_scores(Operator op, const Game& g, const Game& h, EndRule rule) {
  if (op == Operator::SEQUENTIAL) rule = EndRule::LONG;
  return Evaluator(op, rule).eval(g, h);
}

Outcome combined_outcome(Operator op, const Game& g, const Game& h, EndRule rule) {
  FinalScores fs = combined_final_scores(op, g, h, rule);
  return outcome_from_scores(fs.left, fs.right);
}

}  // namespace scoreplay
