#include "scoreplay/grundy.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "scoreplay/errors.hpp"

namespace scoreplay {

OctalRuleset OctalRuleset::parse(std::string_view text) {
  OctalRuleset r;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.rfind("sub{", 0) == 0) {
    if (text.back() != '}') throw ParseError("subtraction set missing '}'", text.size());
    std::string_view body = text.substr(4, text.size() - 5);
    std::vector<int> takes;
    std::size_t at = 4;
    while (!body.empty()) {
      std::size_t comma = body.find(',');
      std::string_view tok = trim(body.substr(0, comma));
      int k = 0;
      if (tok.empty()) throw ParseError("empty subtraction entry", at);
      for (char c : tok) {
        if (c < '0' || c > '9') throw ParseError("subtraction entries must be positive integers", at);
        k = k * 10 + (c - '0');
        if (k > 4096) throw ParseError("subtraction entry too large", at);
      }
      if (k == 0) throw ParseError("subtraction entries must be positive", at);
      takes.push_back(k);
      if (comma == std::string_view::npos) break;
      at += comma + 1;
      body.remove_prefix(comma + 1);
    }
    if (takes.empty()) throw ParseError("empty subtraction set", 4);
    int f = *std::max_element(takes.begin(), takes.end());
    r.digits.assign(f, 0);
    r.points.assign(f, Score(0));
    for (int k : takes) {
      r.digits[k - 1] = 3;
      r.points[k - 1] = Score(k);
    }
    return r;
  }
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("ruleset needs '<digits>:<points>'", text.size());
  std::string_view digits = text.substr(0, colon);
  if (digits.empty()) throw ParseError("ruleset has no digits", 0);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    if (c < '0' || c > '7') throw ParseError("octal digits must be 0-7", i);
    r.digits.push_back(c - '0');
  }
  std::string_view pts = text.substr(colon + 1);
  std::size_t at = colon + 1;
  while (true) {
    std::size_t comma = pts.find(',');
    std::string_view tok = trim(pts.substr(0, comma));
    try {
      r.points.push_back(Score::parse(tok));
    } catch (const ParseError& e) {
      throw ParseError("malformed point value", at + e.position());
    }
    if (comma == std::string_view::npos) break;
    at += comma + 1;
    pts.remove_prefix(comma + 1);
  }
  if (r.points.size() != r.digits.size())
    throw ParseError("ruleset needs one point value per digit", colon);
  return r;
}

std::string OctalRuleset::to_string() const {
  std::string s;
  for (int d : digits) s += char('0' + d);
  s += ':';
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s += ',';
    s += points[i].to_string();
  }
  return s;
}

bool OctalRuleset::takes_only() const {
  return std::none_of(digits.begin(), digits.end(), [](int d) { return d & 4; });
}

OctalRuleset OctalRuleset::negated_points() const {
  OctalRuleset r = *this;
  for (auto& p : r.points) p = -p;
  return r;
}

std::vector<OctalMove> moves(const OctalRuleset& ruleset, int n) {
  std::vector<OctalMove> out;
  int f = static_cast<int>(ruleset.digits.size());
  for (int k = 1; k <= std::min(n, f); ++k) {
    int t = ruleset.digits[k - 1];
    const Score& p = ruleset.points[k - 1];
    int rest = n - k;
    if ((t & 1) && rest == 0) out.push_back({k, {}, p});
    if ((t & 2) && rest > 0) out.push_back({k, {rest}, p});
    if ((t & 4) && rest >= 2)
      for (int a = 1; a <= rest / 2; ++a) out.push_back({k, {a, rest - a}, p});
  }
  return out;
}

std::size_t VectorHeapHash::operator()(const HeapPosition& p) const noexcept {
  std::size_t h = p.size();
  for (const auto& x : p) {
    std::size_t v = (static_cast<std::size_t>(x.size) << 16) ^ static_cast<std::size_t>(x.ruleset);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

GrundySolver::GrundySolver(std::vector<OctalRuleset> rulesets, Operator op, GrundyLimits limits)
    : rulesets_(std::move(rulesets)), op_(op), limits_(limits), move_cache_(rulesets_.size()) {
  if (rulesets_.empty()) throw std::invalid_argument("at least one ruleset is required");
  for (const auto& r : rulesets_) {
    if (r.digits.empty() || r.digits.size() != r.points.size())
      throw std::invalid_argument("ruleset needs matching nonempty digits and points");
    if (op_ == Operator::SEQUENTIAL && !r.takes_only())
      throw std::invalid_argument("sequential play requires taking-only rulesets (digits 0-3): " + r.to_string());
  }
}

HeapPosition GrundySolver::canonical(HeapPosition position) const {
  std::erase_if(position, [](const Heap& h) { return h.size <= 0; });
  for (const auto& h : position)
    if (h.ruleset < 0 || static_cast<std::size_t>(h.ruleset) >= rulesets_.size())
      throw std::out_of_range("heap refers to unknown ruleset " + std::to_string(h.ruleset));
  if (op_ != Operator::SEQUENTIAL) std::sort(position.begin(), position.end());
  return position;
}

const std::vector<OctalMove>& GrundySolver::moves_of(const Heap& h) {
  auto& cache = move_cache_[h.ruleset];
  auto it = cache.find(h.size);
  if (it == cache.end()) it = cache.emplace(h.size, moves(rulesets_[h.ruleset], h.size)).first;
  return it->second;
}

Score GrundySolver::gs(const HeapPosition& position) { return solve(canonical(position)); }

Score GrundySolver::solve(const HeapPosition& position) {
  if (position.empty()) return Score(0);
  auto it = memo_.find(position);
  if (it != memo_.end()) return it->second;
  if (position.size() > limits_.max_heaps)
    throw CapExceeded("position has more than " + std::to_string(limits_.max_heaps) + " heaps");

  std::vector<std::size_t> active;
  std::vector<const std::vector<OctalMove>*> heap_moves(position.size());
  for (std::size_t i = 0; i < position.size(); ++i) {
    const auto& mv = moves_of(position[i]);
    if (mv.empty()) continue;
    heap_moves[i] = &mv;
    active.push_back(i);
  }

  std::optional<Score> best;
  std::size_t turns = 0;
  auto consider = [&](const Score& pts, HeapPosition next) {
    if (++turns > limits_.max_turns)
      throw CapExceeded("more than " + std::to_string(limits_.max_turns) + " turns at one position");
    Score v = pts - solve(canonical(std::move(next)));
    if (!best || v > *best) best = v;
  };

  // Builds the successor where heaps in `chosen` each take the move selected
  // by `pick`; remainders replace the heap in place so list order survives.
  auto apply = [&](const std::vector<std::size_t>& chosen, const std::vector<const OctalMove*>& pick) {
    HeapPosition next;
    next.reserve(position.size() + chosen.size());
    Score pts(0);
    std::size_t c = 0;
    for (std::size_t i = 0; i < position.size(); ++i) {
      if (c < chosen.size() && chosen[c] == i) {
        const OctalMove* m = pick[c++];
        pts += m->points;
        for (int r : m->remainder) next.push_back({r, position[i].ruleset});
      } else {
        next.push_back(position[i]);
      }
    }
    consider(pts, std::move(next));
  };

  // Every combination of one move per heap in `chosen`.
  auto product = [&](const std::vector<std::size_t>& chosen) {
    std::vector<const OctalMove*> pick(chosen.size());
    std::vector<std::size_t> idx(chosen.size(), 0);
    while (true) {
      for (std::size_t j = 0; j < chosen.size(); ++j) pick[j] = &(*heap_moves[chosen[j]])[idx[j]];
      apply(chosen, pick);
      std::size_t j = 0;
      while (j < chosen.size() && ++idx[j] == heap_moves[chosen[j]]->size()) idx[j++] = 0;
      if (j == chosen.size()) break;
    }
  };

  if (!active.empty()) {
    switch (op_) {
      case Operator::DISJUNCTIVE:
        for (std::size_t i : active) product({i});
        break;
      case Operator::SEQUENTIAL:
        product({active.front()});
        break;
      case Operator::CONJUNCTIVE:
        product(active);
        break;
      case Operator::SELECTIVE: {
        if (active.size() >= 63) throw CapExceeded("too many movable heaps for selective play");
        std::uint64_t limit = std::uint64_t(1) << active.size();
        for (std::uint64_t mask = 1; mask < limit; ++mask) {
          std::vector<std::size_t> chosen;
          for (std::size_t j = 0; j < active.size(); ++j)
            if (mask >> j & 1) chosen.push_back(active[j]);
          product(chosen);
        }
        break;
      }
    }
  }
  Score result = best.value_or(Score(0));
  memo_.emplace(position, result);
  return result;
}

Score gs(const std::vector<OctalRuleset>& rulesets, const HeapPosition& position, Operator op) {
  return GrundySolver(rulesets, op).gs(position);
}

std::vector<std::vector<Score>> gs_table(const OctalRuleset& colset, const OctalRuleset& rowset, Operator op,
                                         int n_max, int m_max) {
  if (n_max < 0 || m_max < 0) throw std::invalid_argument("table bounds must be nonnegative");
  GrundySolver solver({colset, rowset}, op);
  std::vector<std::vector<Score>> table(m_max + 1, std::vector<Score>(n_max + 1));
  for (int m = 0; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n) table[m][n] = solver.gs({{n, 0}, {m, 1}});
  return table;
}

std::optional<PeriodReport> find_period(const std::vector<Score>& values, std::size_t max_preperiod,
                                        std::size_t max_period) {
  std::size_t len = values.size();
  if (max_period == 0) throw std::invalid_argument("max_period must be positive");
  if (len <= max_preperiod + 2 * max_period)
    throw std::invalid_argument("insufficient data: need more than max_preperiod + 2*max_period values");
  for (std::size_t p = 1; p <= max_period; ++p) {
    // Scan from the end: the smallest valid N is one past the last mismatch.
    std::size_t n0 = 0;
    for (std::size_t n = len - p; n-- > 0;) {
      if (values[n + p] != values[n]) {
        n0 = n + 1;
        break;
      }
    }
    if (n0 <= max_preperiod) {
      return PeriodReport{n0, p, std::vector<Score>(values.begin() + n0, values.begin() + n0 + p), len - 1};
    }
  }
  return std::nullopt;
}

namespace {

class OctalGameBuilder {
 public:
  OctalGameBuilder(const std::vector<OctalRuleset>& rulesets, Operator op) : rulesets_(rulesets), op_(op) {}

  Game position(const HeapPosition& heaps) {
    std::vector<Game> parts;
    for (const auto& h : heaps)
      if (h.size > 0) parts.push_back(heap(h));
    if (parts.empty()) return Game::atomic(Score(0));
    return n_ary(op_, parts);
  }

  Game heap(const Heap& h) {
    auto key = std::make_pair(h.ruleset, h.size);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Game> left, right;
    for (const auto& m : moves(rulesets_.at(h.ruleset), h.size)) {
      HeapPosition rest;
      for (int r : m.remainder) rest.push_back({r, h.ruleset});
      Game g = position(rest);
      left.push_back(shift(g, m.points));
      right.push_back(shift(g, -m.points));
    }
    Game g = Game::make(std::move(left), Score(0), std::move(right));
    memo_.emplace(key, g);
    return g;
  }

 private:
  const std::vector<OctalRuleset>& rulesets_;
  Operator op_;
  std::map<std::pair<int, int>, Game> memo_;
};

}  // namespace

Game octal_game(const std::vector<OctalRuleset>& rulesets, const HeapPosition& position, Operator op,
                OctalGameLimits limits) {
  std::size_t beans = 0;
  for (const auto& h : position) {
    if (h.size > 0) beans += h.size;
    if (h.ruleset < 0 || static_cast<std::size_t>(h.ruleset) >= rulesets.size())
      throw std::out_of_range("heap refers to unknown ruleset " + std::to_string(h.ruleset));
  }
  if (beans > limits.max_beans)
    throw CapExceeded("explicit octal game limited to " + std::to_string(limits.max_beans) + " beans");
  if (op == Operator::SEQUENTIAL)
    for (const auto& r : rulesets)
      if (!r.takes_only()) throw std::invalid_argument("sequential play requires taking-only rulesets");
  return OctalGameBuilder(rulesets, op).position(position);
}

Score gs_oracle(const std::vector<OctalRuleset>& rulesets, const HeapPosition& position, Operator op,
                OctalGameLimits limits) {
  return final_score_left(octal_game(rulesets, position, op, limits));
}

}  // namespace scoreplay
