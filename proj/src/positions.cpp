#include "scoreplay/positions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "scoreplay/errors.hpp"

namespace scoreplay {
namespace {

class ToadsFrogs {
 public:
  Game build(const std::string& board) {
    auto it = memo_.find(board);
    if (it != memo_.end()) return it->second;
    std::vector<Game> left, right;
    const int n = static_cast<int>(board.size());
    for (int i = 0; i < n; ++i) {
      if (board[i] == 'T') {
        if (i + 1 < n && board[i + 1] == 'B') {
          left.push_back(build(swapped(board, i, i + 1)));
        } else if (i + 2 < n && board[i + 1] == 'F' && board[i + 2] == 'B') {
          left.push_back(shift(build(swapped(board, i, i + 2)), 1));
        }
      } else if (board[i] == 'F') {
        if (i >= 1 && board[i - 1] == 'B') {
          right.push_back(build(swapped(board, i, i - 1)));
        } else if (i >= 2 && board[i - 1] == 'T' && board[i - 2] == 'B') {
          right.push_back(shift(build(swapped(board, i, i - 2)), -1));
        }
      }
    }
    Game g = Game::make(std::move(left), 0, std::move(right));
    memo_.emplace(board, g);
    return g;
  }

 private:
  std::unordered_map<std::string, Game> memo_;

  static std::string swapped(std::string b, int i, int j) {
    std::swap(b[i], b[j]);
    return b;
  }
};

using Mask = std::uint32_t;

class Hackenbush {
 public:
  explicit Hackenbush(const HackGraph& g) : graph_(g) {
    for (int v : g.grounded) grounded_.push_back(v);
    std::sort(grounded_.begin(), grounded_.end());
  }

  Mask grounded_part(Mask mask) const {
    // Edges reachable from a grounded vertex through edges in `mask`.
    Mask kept = 0;
    std::vector<int> frontier(grounded_.begin(), grounded_.end());
    std::vector<int> seen(frontier);
    while (!frontier.empty()) {
      int v = frontier.back();
      frontier.pop_back();
      for (std::size_t e = 0; e < graph_.edges.size(); ++e) {
        if (!(mask >> e & 1) || (kept >> e & 1)) continue;
        const auto& ed = graph_.edges[e];
        if (ed.u != v && ed.v != v) continue;
        kept |= Mask(1) << e;
        int w = ed.u == v ? ed.v : ed.u;
        if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
          seen.push_back(w);
          frontier.push_back(w);
        }
      }
    }
    return kept;
  }

  Game position(Mask mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    std::vector<Mask> parts = components(mask);
    Game g;
    if (parts.size() > 1) {
      std::vector<Game> games;
      for (Mask p : parts) games.push_back(position(p));
      g = n_ary(graph_.split_op, games);
    } else {
      std::vector<Game> left, right;
      for (std::size_t e = 0; e < graph_.edges.size(); ++e) {
        if (!(mask >> e & 1)) continue;
        Mask rest = grounded_part(mask & ~(Mask(1) << e));
        Mask removed = mask & ~rest;
        EdgeColor mover = graph_.edges[e].color;
        Score pts = points(removed, mover);
        if (mover == EdgeColor::BLUE) {
          left.push_back(shift(position(rest), pts));
        } else {
          right.push_back(shift(position(rest), -pts));
        }
      }
      g = Game::make(std::move(left), 0, std::move(right));
    }
    memo_.emplace(mask, g);
    return g;
  }

 private:
  const HackGraph& graph_;
  std::vector<int> grounded_;
  std::unordered_map<Mask, Game> memo_;

  Score points(Mask removed, EdgeColor mover) const {
    std::int64_t own = 0, other = 0;
    for (std::size_t e = 0; e < graph_.edges.size(); ++e) {
      if (!(removed >> e & 1)) continue;
      (graph_.edges[e].color == mover ? own : other) += 1;
    }
    switch (graph_.variant) {
      case 1: return Score(own + other);
      case 2: return Score(own);
      default: return Score(own - other);
    }
  }

  // Connected pieces of the edge set, ordered by lowest edge index.
  std::vector<Mask> components(Mask mask) const {
    std::vector<Mask> out;
    Mask left = mask;
    while (left) {
      int first = std::countr_zero(left);
      Mask comp = Mask(1) << first;
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t e = 0; e < graph_.edges.size(); ++e) {
          if (!(left >> e & 1) || (comp >> e & 1)) continue;
          for (std::size_t f = 0; f < graph_.edges.size(); ++f) {
            if (!(comp >> f & 1)) continue;
            const auto& a = graph_.edges[e];
            const auto& b = graph_.edges[f];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
              if (shares_only_ground(a, b)) continue;
              comp |= Mask(1) << e;
              grew = true;
              break;
            }
          }
        }
      }
      out.push_back(comp);
      left &= ~comp;
    }
    return out;
  }

  bool shares_only_ground(const HackEdge& a, const HackEdge& b) const {
    auto is_ground = [&](int v) { return std::binary_search(grounded_.begin(), grounded_.end(), v); };
    for (int x : {a.u, a.v})
      for (int y : {b.u, b.v})
        if (x == y && !is_ground(x)) return false;
    return true;
  }
};

}  // namespace

Game toads_frogs_game(std::string_view board) {
  if (board.empty()) throw std::invalid_argument("Toads and Frogs board is empty");
  if (board.size() > kMaxBoardCells)
    throw CapExceeded("Toads and Frogs boards are limited to " + std::to_string(kMaxBoardCells) + " cells");
  std::string b(board);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == '.') b[i] = 'B';
    if (b[i] != 'T' && b[i] != 'F' && b[i] != 'B') throw ParseError("board cells must be T, F, B or '.'", i);
  }
  return ToadsFrogs().build(b);
}

Game hackenbush_game(const HackGraph& graph) {
  if (graph.edges.size() > kMaxHackenbushEdges)
    throw CapExceeded("Hackenbush graphs are limited to " + std::to_string(kMaxHackenbushEdges) + " edges");
  if (graph.variant < 1 || graph.variant > 3) throw std::invalid_argument("Hackenbush variant must be 1, 2 or 3");
  if (!graph.edges.empty() && graph.grounded.empty())
    throw std::invalid_argument("Hackenbush graph with edges needs a grounded vertex");
  Hackenbush h(graph);
  Mask all = graph.edges.empty() ? 0 : static_cast<Mask>((std::uint64_t(1) << graph.edges.size()) - 1);
  return h.position(h.grounded_part(all));
}

HackGraph parse_hackenbush(std::istream& in) {
  HackGraph g;
  std::map<std::string, int> ids;
  auto id = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<int>(ids.size()));
    return it->second;
  };
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    std::string a, b, c, extra;
    if (kind == "ground") {
      if (!(ls >> a) || (ls >> extra)) throw ParseError("expected 'ground <v>'", lineno, "line");
      int v = id(a);
      if (std::find(g.grounded.begin(), g.grounded.end(), v) == g.grounded.end()) g.grounded.push_back(v);
    } else if (kind == "edge") {
      if (!(ls >> a >> b >> c) || (ls >> extra)) throw ParseError("expected 'edge <u> <v> <B|R>'", lineno, "line");
      EdgeColor color;
      if (c == "B") {
        color = EdgeColor::BLUE;
      } else if (c == "R") {
        color = EdgeColor::RED;
      } else {
        throw ParseError("edge color must be B or R", lineno, "line");
      }
      g.edges.push_back({id(a), id(b), color});
    } else {
      throw ParseError("unknown directive '" + kind + "'", lineno, "line");
    }
  }
  return g;
}

Game octal_to_game(const std::vector<OctalRuleset>& rulesets, const HeapPosition& position, Operator op) {
  return octal_game(rulesets, position, op);
}

}  // namespace scoreplay
