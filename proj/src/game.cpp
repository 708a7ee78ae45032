#include "scoreplay/game.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "scoreplay/errors.hpp"

namespace scoreplay {

class GameNode {
 public:
  Score score;
  std::vector<Game> left;
  std::vector<Game> right;
  Score sl;
  Score sr;
  int depth = 0;
  std::uint64_t size = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t structural_hash(const Score& s, const std::vector<Game>& l, const std::vector<Game>& r) {
  std::size_t h = s.hash();
  h = mix(h, l.size());
  for (const auto& g : l) h = mix(h, std::hash<const void*>{}(g.node()));
  h = mix(h, 0x51ed270b27ULL + r.size());
  for (const auto& g : r) h = mix(h, std::hash<const void*>{}(g.node()));
  return h;
}

int compare_lists(std::span<const Game> a, std::span<const Game> b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

void canonicalize(std::vector<Game>& opts) {
  std::sort(opts.begin(), opts.end(), CanonicalLess{});
  opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
}

}  // namespace

// Children are already interned, so node identity of children is a valid
// key component; lookups compare children by pointer.
struct Interner {
  std::mutex mutex;
  std::unordered_multimap<std::size_t, std::weak_ptr<const GameNode>> table;
  std::size_t inserts_since_sweep = 0;

  static Interner& instance() {
    static Interner* in = new Interner();  // intentionally leaked: outlives static Games
    return *in;
  }

  Game intern(Score score, std::vector<Game> left, std::vector<Game> right) {
    canonicalize(left);
    canonicalize(right);
    std::size_t h = structural_hash(score, left, right);

    std::lock_guard<std::mutex> lock(mutex);
    auto range = table.equal_range(h);
    for (auto it = range.first; it != range.second;) {
      auto sp = it->second.lock();
      if (!sp) {
        // Freed nodes often leave same-hash entries behind when memory is reused.
        it = table.erase(it);
        continue;
      }
      if (sp->score == score && sp->left == left && sp->right == right) return Game(std::move(sp));
      ++it;
    }

    auto node = std::make_shared<GameNode>();
    node->score = score;
    node->hash = h;
    if (left.empty()) {
      node->sl = score;
    } else {
      node->sl = left.front().final_right();
      for (const auto& g : left) node->sl = std::max(node->sl, g.final_right());
    }
    if (right.empty()) {
      node->sr = score;
    } else {
      node->sr = right.front().final_left();
      for (const auto& g : right) node->sr = std::min(node->sr, g.final_left());
    }
    std::uint64_t sz = 1;
    int d = 0;
    auto account = [&](const Game& g) {
      d = std::max(d, g.depth() + 1);
      std::uint64_t s = g.size();
      sz = (sz > std::numeric_limits<std::uint64_t>::max() - s) ? std::numeric_limits<std::uint64_t>::max() : sz + s;
    };
    for (const auto& g : left) account(g);
    for (const auto& g : right) account(g);
    node->depth = d;
    node->size = sz;
    node->left = std::move(left);
    node->right = std::move(right);

    if (++inserts_since_sweep > 4096 && inserts_since_sweep > table.size()) sweep();
    std::shared_ptr<const GameNode> cnode = node;
    table.emplace(h, cnode);
    return Game(std::move(cnode));
  }

  void sweep() {
    for (auto it = table.begin(); it != table.end();) {
      if (it->second.expired()) {
        it = table.erase(it);
      } else {
        ++it;
      }
    }
    inserts_since_sweep = 0;
  }

  std::size_t alive() {
    std::lock_guard<std::mutex> lock(mutex);
    std::size_t n = 0;
    for (const auto& [h, w] : table) n += !w.expired();
    return n;
  }
};

Game::Game() : Game(atomic(Score(0))) {}

Game Game::atomic(Score score) { return Interner::instance().intern(score, {}, {}); }

Game Game::make(std::vector<Game> left, Score score, std::vector<Game> right) {
  return Interner::instance().intern(score, std::move(left), std::move(right));
}

const Score& Game::score() const { return node_->score; }
std::span<const Game> Game::left() const { return node_->left; }
std::span<const Game> Game::right() const { return node_->right; }
bool Game::is_atomic() const { return node_->left.empty() && node_->right.empty(); }
const Score& Game::final_left() const { return node_->sl; }
const Score& Game::final_right() const { return node_->sr; }
int Game::depth() const { return node_->depth; }
std::uint64_t Game::size() const { return node_->size; }
std::size_t Game::hash() const { return node_->hash; }

int compare(const Game& a, const Game& b) {
  if (a == b) return 0;
  auto sc = a.score() <=> b.score();
  if (sc != 0) return sc < 0 ? -1 : 1;
  int c = compare_lists(a.left(), b.left());
  if (c != 0) return c;
  return compare_lists(a.right(), b.right());
}

Game make_game(std::vector<Game> left, Score score, std::vector<Game> right) {
  return Game::make(std::move(left), score, std::move(right));
}

Outcome mirror(Outcome o) {
  switch (o) {
    case Outcome::L: return Outcome::R;
    case Outcome::R: return Outcome::L;
    default: return o;
  }
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::L: return "L";
    case Outcome::R: return "R";
    case Outcome::N: return "N";
    case Outcome::P: return "P";
    case Outcome::TIE: return "TIE";
  }
  return "?";
}

Score final_score_left(const Game& g) { return g.final_left(); }
Score final_score_right(const Game& g) { return g.final_right(); }

Outcome outcome_from_scores(const Score& sl, const Score& sr) {
  int a = sl.sign();
  int b = sr.sign();
  if (a == 0 && b == 0) return Outcome::TIE;
  if (a >= 0 && b >= 0) return Outcome::L;
  if (a <= 0 && b <= 0) return Outcome::R;
  return a > 0 ? Outcome::N : Outcome::P;
}

Outcome outcome(const Game& g) { return outcome_from_scores(g.final_left(), g.final_right()); }

namespace {

template <class F>
Game map_memo(const Game& g, std::unordered_map<const GameNode*, Game>& memo, F&& rebuild) {
  auto it = memo.find(g.node());
  if (it != memo.end()) return it->second;
  Game r = rebuild(g);
  memo.emplace(g.node(), r);
  return r;
}

Game negate_rec(const Game& g, std::unordered_map<const GameNode*, Game>& memo) {
  return map_memo(g, memo, [&](const Game& x) {
    std::vector<Game> l, r;
    l.reserve(x.right().size());
    r.reserve(x.left().size());
    for (const auto& o : x.right()) l.push_back(negate_rec(o, memo));
    for (const auto& o : x.left()) r.push_back(negate_rec(o, memo));
    return Game::make(std::move(l), -x.score(), std::move(r));
  });
}

Game shift_rec(const Game& g, const Score& s, std::unordered_map<const GameNode*, Game>& memo) {
  return map_memo(g, memo, [&](const Game& x) {
    std::vector<Game> l, r;
    l.reserve(x.left().size());
    r.reserve(x.right().size());
    for (const auto& o : x.left()) l.push_back(shift_rec(o, s, memo));
    for (const auto& o : x.right()) r.push_back(shift_rec(o, s, memo));
    return Game::make(std::move(l), x.score() + s, std::move(r));
  });
}

}  // namespace

Game negate(const Game& g) {
  std::unordered_map<const GameNode*, Game> memo;
  return negate_rec(g, memo);
}

Game shift(const Game& g, const Score& r) {
  if (r == Score(0)) return g;
  std::unordered_map<const GameNode*, Game> memo;
  return shift_rec(g, r, memo);
}

int depth(const Game& g) { return g.depth(); }

std::uint64_t size(const Game& g) {
  if (g.size() == std::numeric_limits<std::uint64_t>::max()) throw CapExceeded("game tree size exceeds 64-bit count");
  return g.size();
}

Score max_abs_score(const Game& g) {
  std::unordered_set<const GameNode*> seen;
  Score best(0);
  std::vector<Game> stack{g};
  while (!stack.empty()) {
    Game x = stack.back();
    stack.pop_back();
    if (!seen.insert(x.node()).second) continue;
    Score a = x.score().sign() < 0 ? -x.score() : x.score();
    if (a > best) best = a;
    for (const auto& o : x.left()) stack.push_back(o);
    for (const auto& o : x.right()) stack.push_back(o);
  }
  return best;
}

std::size_t interned_count() { return Interner::instance().alive(); }

}  // namespace scoreplay
