#include "scoreplay/equivalence.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "scoreplay/errors.hpp"

namespace scoreplay {
namespace {

std::int64_t floor_of(const Score& s) {
  std::int64_t q = s.numerator() / s.denominator();
  if (s.numerator() < 0 && q * s.denominator() != s.numerator()) --q;
  return q;
}

std::vector<Score> grid(const SearchBudget& b) {
  std::vector<Score> out;
  std::int64_t k = floor_of(b.score_bound);
  for (std::int64_t v = -k; v <= k; ++v) out.push_back(Score(v));
  return out;
}

// Subsets of {0..n-1} with at most w elements: the empty set, then by size,
// colexicographic within a size. Produced on demand.
class SubsetSequence {
 public:
  SubsetSequence(std::size_t n, int w) : n_(n), w_(static_cast<std::size_t>(w)) { cache_.push_back({}); }

  const std::vector<std::size_t>* at(std::size_t k) {
    while (cache_.size() <= k && extend()) {
    }
    return k < cache_.size() ? &cache_[k] : nullptr;
  }

 private:
  std::size_t n_;
  std::size_t w_;
  std::deque<std::vector<std::size_t>> cache_;
  std::vector<std::size_t> cur_;

  bool extend() {
    if (!cur_.empty() && advance()) {
      cache_.push_back(cur_);
      return true;
    }
    std::size_t size = cur_.size() + 1;
    if (size > w_ || size > n_) return false;
    cur_.resize(size);
    for (std::size_t i = 0; i < size; ++i) cur_[i] = i;
    cache_.push_back(cur_);
    return true;
  }

  // Next combination of the same size in colex order.
  bool advance() {
    for (std::size_t i = 0; i < cur_.size(); ++i) {
      std::size_t limit = i + 1 < cur_.size() ? cur_[i + 1] : n_;
      if (cur_[i] + 1 < limit) {
        ++cur_[i];
        for (std::size_t j = 0; j < i; ++j) cur_[j] = j;
        return true;
      }
    }
    return false;
  }
};

class Collector {
 public:
  explicit Collector(std::size_t cap) : cap_(cap) {}
  bool full() const { return out_.size() >= cap_; }
  void add(const Game& g) {
    if (full()) return;
    if (seen_.insert(g.node()).second) out_.push_back(g);
  }
  std::vector<Game>& games() { return out_; }

 private:
  std::size_t cap_;
  std::vector<Game> out_;
  std::unordered_set<const GameNode*> seen_;
};

std::vector<Game> pick(const std::vector<Game>& pool, const std::vector<std::size_t>& idx) {
  std::vector<Game> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(pool[i]);
  return out;
}

int max_depth_of(const std::vector<Game>& pool, const std::vector<std::size_t>& idx) {
  int d = -1;
  for (std::size_t i : idx) d = std::max(d, pool[i].depth());
  return d;
}

std::vector<Game> build_test_games(const SearchBudget& b) {
  Collector c(b.max_candidates);
  auto scores = grid(b);
  for (const auto& s : scores) c.add(Game::atomic(s));
  if (b.max_depth >= 1) {
    std::int64_t ext = floor_of(b.score_bound) + 2;
    for (const auto& a : scores)
      for (std::int64_t v = -ext; v <= ext; ++v) c.add(Game::make({}, a, {Game::atomic(v)}));
    for (std::int64_t v = -ext; v <= ext; ++v)
      for (const auto& a : scores) c.add(Game::make({Game::atomic(v)}, a, {}));
  }
  for (int d = 1; d <= b.max_depth && !c.full(); ++d) {
    std::vector<Game> pool;
    for (const auto& g : c.games())
      if (g.depth() < d) pool.push_back(g);
    SubsetSequence subsets(pool.size(), b.max_width);
    for (std::size_t diag = 0; !c.full(); ++diag) {
      bool any = false;
      for (std::size_t i = 0; i <= diag && !c.full(); ++i) {
        const auto* l = subsets.at(i);
        const auto* r = subsets.at(diag - i);
        if (!l || !r) continue;
        any = true;
        if (std::max(max_depth_of(pool, *l), max_depth_of(pool, *r)) != d - 1) continue;
        for (const auto& s : scores) c.add(Game::make(pick(pool, *l), s, pick(pool, *r)));
      }
      if (!any) break;
    }
  }
  return std::move(c.games());
}

std::vector<Game> build_impartial_games(const SearchBudget& b) {
  Collector c(b.max_candidates);
  auto scores = grid(b);
  Score bound = Score(floor_of(b.score_bound));
  for (const auto& s : scores) c.add(Game::atomic(s));
  for (int d = 1; d <= b.max_depth && !c.full(); ++d) {
    std::vector<Game> pool;
    for (const auto& g : c.games())
      if (g.depth() < d) pool.push_back(g);
    SubsetSequence subsets(pool.size(), b.max_width);
    for (std::size_t k = 1; !c.full(); ++k) {
      const auto* l = subsets.at(k);
      if (!l) break;
      if (max_depth_of(pool, *l) != d - 1) continue;
      auto left = pick(pool, *l);
      for (const auto& s : scores) {
        std::vector<Game> right;
        bool in_range = true;
        for (const auto& a : left) {
          Game m = shift(negate(a), s + s);
          if (max_abs_score(m) > bound) {
            in_range = false;
            break;
          }
          right.push_back(m);
        }
        if (in_range) c.add(Game::make(left, s, std::move(right)));
      }
    }
  }
  return std::move(c.games());
}

using CacheKey = std::tuple<int, int, std::int64_t, std::int64_t, std::size_t, bool>;

std::shared_ptr<const std::vector<Game>> cached(const SearchBudget& b, bool impartial) {
  static std::mutex mutex;
  static std::map<CacheKey, std::shared_ptr<const std::vector<Game>>> cache;
  b.validate();
  CacheKey key{b.max_depth, b.max_width, b.score_bound.numerator(), b.score_bound.denominator(), b.max_candidates,
               impartial};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto games = std::make_shared<const std::vector<Game>>(impartial ? build_impartial_games(b) : build_test_games(b));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, games).first->second;
}

constexpr std::array<WitnessClass, 4> kGeClasses = {WitnessClass::L_GE, WitnessClass::R_GE, WitnessClass::L_GT,
                                                    WitnessClass::R_GT};
constexpr std::array<WitnessClass, 4> kLeClasses = {WitnessClass::L_LE, WitnessClass::R_LE, WitnessClass::L_LT,
                                                    WitnessClass::R_LT};

// Switch games {.|a|b} and {b|a|.} with |b| beyond the enumerated range,
// scaled to the scores of the games being compared.
std::vector<Game> scaled_switches(const SearchBudget& budget, const Game& g, const Game& h) {
  std::int64_t ext = floor_of(budget.score_bound) + 2;
  Score m = std::max(max_abs_score(g), max_abs_score(h));
  std::int64_t far = 2 * (floor_of(m) + 1) + ext;
  std::vector<Game> out;
  for (const auto& a : grid(budget))
    for (std::int64_t v = ext + 1; v <= far; ++v)
      for (std::int64_t b : {-v, v}) {
        out.push_back(Game::make({}, a, {Game::atomic(b)}));
        out.push_back(Game::make({Game::atomic(b)}, a, {}));
      }
  return out;
}

template <class Check>
std::optional<Witness> first_witness(const Game& g, const Game& h, const SearchBudget& budget, Check&& check) {
  for (const auto& x : *enumerate_test_games(budget))
    if (auto w = check(x)) return w;
  for (const auto& x : scaled_switches(budget, g, h))
    if (auto w = check(x)) return w;
  return std::nullopt;
}

std::optional<Witness> refute(const Game& g, const Game& h, Operator op, const SearchBudget& budget,
                              const std::array<WitnessClass, 4>& classes) {
  return first_witness(g, h, budget, [&](const Game& x) -> std::optional<Witness> {
    FinalScores hs = combined_final_scores(op, h, x);
    bool candidate = std::any_of(classes.begin(), classes.end(), [&](WitnessClass c) { return in_class(c, hs); });
    if (!candidate) return std::nullopt;
    FinalScores gs = combined_final_scores(op, g, x);
    for (WitnessClass c : classes) {
      if (in_class(c, hs) && !in_class(c, gs))
        return Witness{x, c, gs, hs, outcome_from_scores(gs.left, gs.right), outcome_from_scores(hs.left, hs.right)};
    }
    return std::nullopt;
  });
}

}  // namespace

SearchBudget SearchBudget::parse(std::string_view text) {
  SearchBudget b;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) throw std::invalid_argument("budget item needs key=value: " + std::string(item));
      std::string_view key = item.substr(0, eq);
      std::string_view value = item.substr(eq + 1);
      auto as_int = [&](auto& out) {
        auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
        if (ec != std::errc() || p != value.data() + value.size())
          throw std::invalid_argument("bad budget value: " + std::string(item));
      };
      if (key == "depth") {
        as_int(b.max_depth);
      } else if (key == "width") {
        as_int(b.max_width);
      } else if (key == "score_bound") {
        try {
          b.score_bound = Score::parse(value);
        } catch (const std::exception&) {
          throw std::invalid_argument("bad budget value: " + std::string(item));
        }
      } else if (key == "max_candidates") {
        as_int(b.max_candidates);
      } else {
        throw std::invalid_argument("unknown budget key: " + std::string(key));
      }
    }
    pos = comma + 1;
  }
  b.validate();
  return b;
}

std::string SearchBudget::to_string() const {
  std::ostringstream os;
  os << "depth=" << max_depth << ",width=" << max_width << ",score_bound=" << score_bound
     << ",max_candidates=" << max_candidates;
  return os.str();
}

void SearchBudget::validate() const {
  if (max_depth < 0 || max_width < 1 || score_bound < Score(0) || max_candidates < 1)
    throw std::invalid_argument("search budget needs depth >= 0, width >= 1, score_bound >= 0, max_candidates >= 1");
}

std::shared_ptr<const std::vector<Game>> enumerate_test_games(const SearchBudget& budget) {
  return cached(budget, false);
}

std::shared_ptr<const std::vector<Game>> enumerate_impartial_games(const SearchBudget& budget) {
  return cached(budget, true);
}

const char* to_string(WitnessClass c) {
  switch (c) {
    case WitnessClass::L_GE: return "L>=";
    case WitnessClass::R_GE: return "R>=";
    case WitnessClass::L_GT: return "L>";
    case WitnessClass::R_GT: return "R>";
    case WitnessClass::L_LE: return "L<=";
    case WitnessClass::R_LE: return "R<=";
    case WitnessClass::L_LT: return "L<";
    case WitnessClass::R_LT: return "R<";
    case WitnessClass::OUTCOME: return "outcome";
  }
  return "?";
}

bool in_class(WitnessClass c, const FinalScores& fs) {
  switch (c) {
    case WitnessClass::L_GE: return fs.left >= Score(0);
    case WitnessClass::R_GE: return fs.right >= Score(0);
    case WitnessClass::L_GT: return fs.left > Score(0);
    case WitnessClass::R_GT: return fs.right > Score(0);
    case WitnessClass::L_LE: return fs.left <= Score(0);
    case WitnessClass::R_LE: return fs.right <= Score(0);
    case WitnessClass::L_LT: return fs.left < Score(0);
    case WitnessClass::R_LT: return fs.right < Score(0);
    case WitnessClass::OUTCOME: return false;
  }
  return false;
}

WitnessClass complement(WitnessClass c) {
  switch (c) {
    case WitnessClass::L_GE: return WitnessClass::L_LT;
    case WitnessClass::R_GE: return WitnessClass::R_LT;
    case WitnessClass::L_GT: return WitnessClass::L_LE;
    case WitnessClass::R_GT: return WitnessClass::R_LE;
    case WitnessClass::L_LE: return WitnessClass::L_GT;
    case WitnessClass::R_LE: return WitnessClass::R_GT;
    case WitnessClass::L_LT: return WitnessClass::L_GE;
    case WitnessClass::R_LT: return WitnessClass::R_GE;
    case WitnessClass::OUTCOME: return WitnessClass::OUTCOME;
  }
  return c;
}

bool replay(const Witness& w, const Game& g, const Game& h, Operator op) {
  FinalScores gs = combined_final_scores(op, g, w.x);
  FinalScores hs = combined_final_scores(op, h, w.x);
  if (w.violated == WitnessClass::OUTCOME)
    return outcome_from_scores(gs.left, gs.right) != outcome_from_scores(hs.left, hs.right);
  return in_class(w.violated, hs) && !in_class(w.violated, gs);
}

std::optional<Witness> geq_refuted(const Game& g, const Game& h, Operator op, const SearchBudget& budget) {
  if (g == h) return std::nullopt;
  return refute(g, h, op, budget, kGeClasses);
}

std::optional<Witness> leq_refuted(const Game& g, const Game& h, Operator op, const SearchBudget& budget) {
  if (g == h) return std::nullopt;
  return refute(g, h, op, budget, kLeClasses);
}

std::optional<Witness> distinguish(const Game& g, const Game& h, Operator op, const SearchBudget& budget) {
  if (g == h) return std::nullopt;
  return first_witness(g, h, budget, [&](const Game& x) -> std::optional<Witness> {
    FinalScores gs = combined_final_scores(op, g, x);
    FinalScores hs = combined_final_scores(op, h, x);
    Outcome go = outcome_from_scores(gs.left, gs.right);
    Outcome ho = outcome_from_scores(hs.left, hs.right);
    if (go != ho) return Witness{x, WitnessClass::OUTCOME, gs, hs, go, ho};
    return std::nullopt;
  });
}

Game distinguisher_from_zero(const Game& g) {
  if (!g.left().empty()) {
    Score b = -max_abs_score(g) - Score(2);
    return Game::make({}, Score(1), {Game::atomic(b)});
  }
  if (!g.right().empty()) return negate(distinguisher_from_zero(negate(g)));
  if (g.score() == Score(0)) throw std::invalid_argument("atomic 0 cannot be distinguished from 0");
  return Game::atomic(Score(0));
}

Game dedup(const Game& g) {
  std::unordered_map<const GameNode*, Game> memo;
  auto rec = [&](auto&& self, const Game& x) -> Game {
    auto it = memo.find(x.node());
    if (it != memo.end()) return it->second;
    std::vector<Game> l, r;
    for (const auto& o : x.left()) l.push_back(self(self, o));
    for (const auto& o : x.right()) r.push_back(self(self, o));
    Game out = Game::make(std::move(l), x.score(), std::move(r));
    memo.emplace(x.node(), out);
    return out;
  };
  return rec(rec, g);
}

namespace {

class Reducer {
 public:
  explicit Reducer(const SearchBudget& b) : budget_(b) {}

  Reduction dominated(const Game& g) {
    bool heuristic = false;
    Game out = walk(g, [&](const Game& node) {
      auto prune = [&](std::span<const Game> opts, bool left_side) {
        std::vector<Game> kept(opts.begin(), opts.end());
        for (std::size_t i = 0; i < kept.size();) {
          const Game b = kept[i];
          bool removed = false;
          for (const auto& a : kept) {
            if (a == b) continue;
            bool a_beats_b = left_side ? !geq_refuted(a, b, Operator::DISJUNCTIVE, budget_)
                                       : !leq_refuted(a, b, Operator::DISJUNCTIVE, budget_);
            if (!a_beats_b) continue;
            bool b_beats_a = left_side ? !geq_refuted(b, a, Operator::DISJUNCTIVE, budget_)
                                       : !leq_refuted(b, a, Operator::DISJUNCTIVE, budget_);
            if (!b_beats_a || compare(a, b) < 0) {
              removed = true;
              break;
            }
          }
          if (removed) {
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
            heuristic = true;
          } else {
            ++i;
          }
        }
        return kept;
      };
      return Game::make(prune(node.left(), true), node.score(), prune(node.right(), false));
    });
    return {out, heuristic};
  }

  Reduction reversible(const Game& g, std::size_t max_steps) {
    bool heuristic = false;
    std::size_t steps = 0;
    Game out = walk(g, [&](const Game& start) {
      Game node = start;
      bool changed = true;
      while (changed) {
        changed = false;
        std::vector<Game> left(node.left().begin(), node.left().end());
        std::vector<Game> right(node.right().begin(), node.right().end());
        for (std::size_t i = 0; i < left.size() && !changed; ++i) {
          for (const auto& ar : left[i].right()) {
            if (!leq_refuted(ar, node, Operator::DISJUNCTIVE, budget_)) {
              left.erase(left.begin() + static_cast<std::ptrdiff_t>(i));
              left.insert(left.end(), ar.left().begin(), ar.left().end());
              changed = true;
              break;
            }
          }
        }
        for (std::size_t i = 0; i < right.size() && !changed; ++i) {
          for (const auto& dl : right[i].left()) {
            if (!geq_refuted(dl, node, Operator::DISJUNCTIVE, budget_)) {
              right.erase(right.begin() + static_cast<std::ptrdiff_t>(i));
              right.insert(right.end(), dl.right().begin(), dl.right().end());
              changed = true;
              break;
            }
          }
        }
        if (changed) {
          if (++steps > max_steps) throw CapExceeded("reversible-option bypass exceeded its step limit");
          heuristic = true;
          node = Game::make(std::move(left), node.score(), std::move(right));
        }
      }
      return node;
    });
    return {out, heuristic};
  }

 private:
  SearchBudget budget_;

  // Rebuilds bottom-up, applying `at_node` to each node after its options.
  template <class F>
  Game walk(const Game& g, F&& at_node) {
    std::unordered_map<const GameNode*, Game> memo;
    auto rec = [&](auto&& self, const Game& x) -> Game {
      auto it = memo.find(x.node());
      if (it != memo.end()) return it->second;
      std::vector<Game> l, r;
      for (const auto& o : x.left()) l.push_back(self(self, o));
      for (const auto& o : x.right()) r.push_back(self(self, o));
      Game out = at_node(Game::make(std::move(l), x.score(), std::move(r)));
      memo.emplace(x.node(), out);
      return out;
    };
    return rec(rec, g);
  }
};

}  // namespace

Reduction remove_dominated(const Game& g, const SearchBudget& budget) { return Reducer(budget).dominated(g); }

Reduction bypass_reversible(const Game& g, const SearchBudget& budget, std::size_t max_steps) {
  return Reducer(budget).reversible(g, max_steps);
}

Reduction reduce(const Game& g, const SearchBudget& budget) {
  Reduction r{dedup(g), false};
  for (int round = 0; round < 64; ++round) {
    Reduction a = remove_dominated(r.game, budget);
    Reduction b = bypass_reversible(a.game, budget);
    bool changed = b.game != r.game;
    r.heuristic = r.heuristic || a.heuristic || b.heuristic;
    r.game = b.game;
    if (!changed) return r;
  }
  throw CapExceeded("reduction did not reach a fixed point");
}

bool is_impartial(const Game& g) {
  std::unordered_map<const GameNode*, bool> memo;
  auto rec = [&](auto&& self, const Game& x) -> bool {
    auto it = memo.find(x.node());
    if (it != memo.end()) return it->second;
    bool ok = x.left().empty() == x.right().empty();
    if (ok && !x.left().empty()) {
      Score twice = x.score() + x.score();
      std::vector<Game> mirrored;
      for (const auto& o : x.left()) mirrored.push_back(shift(negate(o), twice));
      std::sort(mirrored.begin(), mirrored.end(), CanonicalLess{});
      ok = std::equal(mirrored.begin(), mirrored.end(), x.right().begin(), x.right().end());
      for (const auto& o : x.left()) {
        if (!ok) break;
        ok = self(self, o);
      }
    }
    memo.emplace(x.node(), ok);
    return ok;
  };
  return rec(rec, g);
}

bool is_identity_for_impartials(const Game& candidate, Operator op, const SearchBudget& budget) {
  auto games = enumerate_impartial_games(budget);
  return std::all_of(games->begin(), games->end(),
                     [&](const Game& g) { return combined_outcome(op, g, candidate) == outcome(g); });
}

namespace {

Game A(int v) { return Game::atomic(Score(v)); }
Game M(std::vector<Game> l, int s, std::vector<Game> r) { return Game::make(std::move(l), Score(s), std::move(r)); }

std::vector<int> decode(std::uint64_t index, int k, int lo, int hi) {
  std::vector<int> p(static_cast<std::size_t>(k));
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  for (int i = k - 1; i >= 0; --i) {
    p[static_cast<std::size_t>(i)] = lo + static_cast<int>(index % span);
    index /= span;
  }
  return p;
}

// Every parameter vector in [lo, hi]^k, grouped by the outcome of its game.
std::map<Outcome, std::vector<std::uint64_t>> classify(int k, int lo, int hi,
                                                        const std::function<Game(std::span<const int>)>& make) {
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(hi - lo + 1);
  std::map<Outcome, std::vector<std::uint64_t>> out;
  for (std::uint64_t i = 0; i < total; ++i) out[outcome(make(decode(i, k, lo, hi)))].push_back(i);
  return out;
}

}  // namespace

OutcomeFamily outcome_family(Operator op) {
  switch (op) {
    case Operator::DISJUNCTIVE:
      // G = {{{d|c|e}|b|.}|a|.},  H = {.|f|{.|g|h}}
      return {5, 3,
              [](std::span<const int> p) { return M({M({M({A(p[3])}, p[2], {A(p[4])})}, p[1], {})}, p[0], {}); },
              [](std::span<const int> p) { return M({}, p[0], {M({}, p[1], {A(p[2])})}); }};
    case Operator::CONJUNCTIVE:
      // G = {{.|b|{.|c|{e|d|f}}}|a|.},  H = {.|g|{{{k|j|.}|i|.}|h|.}}
      return {6, 5,
              [](std::span<const int> p) {
                return M({M({}, p[1], {M({}, p[2], {M({A(p[4])}, p[3], {A(p[5])})})})}, p[0], {});
              },
              [](std::span<const int> p) { return M({}, p[0], {M({M({M({A(p[4])}, p[3], {})}, p[2], {})}, p[1], {})}); }};
    case Operator::SELECTIVE:
      // G = {{c|b|.}|a|.},  H = {.|d|{.|e|{.|f|g}}}
      return {3, 4, [](std::span<const int> p) { return M({M({A(p[2])}, p[1], {})}, p[0], {}); },
              [](std::span<const int> p) { return M({}, p[0], {M({}, p[1], {M({}, p[2], {A(p[3])})})}); }};
    case Operator::SEQUENTIAL:
      // G = {{c|b|.}|a|.},  H = {e|d|f}
      return {3, 3, [](std::span<const int> p) { return M({M({A(p[2])}, p[1], {})}, p[0], {}); },
              [](std::span<const int> p) { return M({A(p[1])}, p[0], {A(p[2])}); }};
  }
  throw std::invalid_argument("unknown operator");
}

std::map<OutcomeTriple, TripleRealization> outcome_triple_search(Operator op, int lo, int hi,
                                                                 std::size_t max_tries) {
  if (lo > hi) throw std::invalid_argument("empty parameter range");
  OutcomeFamily fam = outcome_family(op);
  auto gclass = classify(fam.g_params, lo, hi, fam.make_g);
  auto hclass = classify(fam.h_params, lo, hi, fam.make_h);
  std::map<OutcomeTriple, TripleRealization> found;
  std::mt19937_64 rng(0x5eed);
  for (const auto& [x, gs] : gclass) {
    for (const auto& [y, hs] : hclass) {
      std::set<Outcome> seen;
      for (std::size_t t = 0; t < max_tries && seen.size() < 5; ++t) {
        auto gp = decode(gs[std::uniform_int_distribution<std::size_t>(0, gs.size() - 1)(rng)], fam.g_params, lo, hi);
        auto hp = decode(hs[std::uniform_int_distribution<std::size_t>(0, hs.size() - 1)(rng)], fam.h_params, lo, hi);
        Game g = fam.make_g(gp);
        Game h = fam.make_h(hp);
        Outcome z = combined_outcome(op, g, h);
        if (seen.insert(z).second) found.try_emplace({x, y, z}, TripleRealization{gp, hp, g, h});
      }
    }
  }
  return found;
}

}  // namespace scoreplay
