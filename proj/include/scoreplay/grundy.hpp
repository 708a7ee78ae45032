#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scoreplay/game.hpp"
#include "scoreplay/operators.hpp"

namespace scoreplay {

// Heap ruleset (t_1..t_f, p_1..p_f). Taking k beans with digit t_k:
//   bit 1: allowed when the heap is emptied (n == k)
//   bit 2: allowed when one nonempty heap remains (n > k)
//   bit 4: allowed when the rest splits into two nonempty heaps (n - k >= 2)
// and earns p_k points.
struct OctalRuleset {
  std::vector<int> digits;
  std::vector<Score> points;

  // "3311:1,2,3,4" or "sub{4,5}" (digit 3 at each listed take, p_k = k).
  static OctalRuleset parse(std::string_view text);
  std::string to_string() const;
  bool takes_only() const;  // no digit uses bit 4
  OctalRuleset negated_points() const;
};

struct OctalMove {
  int take;
  std::vector<int> remainder;  // 0, 1 or 2 heap sizes, ascending
  Score points;

  friend bool operator==(const OctalMove&, const OctalMove&) = default;
};

std::vector<OctalMove> moves(const OctalRuleset& ruleset, int n);

struct Heap {
  int size;
  int ruleset;  // index into the solver's ruleset list

  friend bool operator==(const Heap&, const Heap&) = default;
  friend auto operator<=>(const Heap&, const Heap&) = default;
};

// Heaps in play order. Order matters only for the sequential join; other
// operators treat the list as a multiset.
using HeapPosition = std::vector<Heap>;

struct GrundyLimits {
  std::size_t max_heaps = 48;
  std::size_t max_turns = 2'000'000;  // turns generated at one position
};

struct VectorHeapHash {
  std::size_t operator()(const HeapPosition& p) const noexcept;
};

// Memoized G_s evaluator for one operator over a fixed list of rulesets.
// Not thread-safe; use one instance per thread.
class GrundySolver {
 public:
  GrundySolver(std::vector<OctalRuleset> rulesets, Operator op, GrundyLimits limits = {});

  Score gs(const HeapPosition& position);
  Score gs_single(int n, int ruleset = 0) { return gs({{n, ruleset}}); }

  const std::vector<OctalRuleset>& rulesets() const { return rulesets_; }
  Operator op() const { return op_; }
  std::size_t memo_size() const { return memo_.size(); }

  // Normalizes a position: drops empty heaps and, unless sequential, sorts.
  HeapPosition canonical(HeapPosition position) const;

 private:
  std::vector<OctalRuleset> rulesets_;
  Operator op_;
  GrundyLimits limits_;
  std::vector<std::unordered_map<int, std::vector<OctalMove>>> move_cache_;  // [ruleset][n]
  std::unordered_map<HeapPosition, Score, VectorHeapHash> memo_;

  const std::vector<OctalMove>& moves_of(const Heap& h);
  Score solve(const HeapPosition& position);
};

Score gs(const std::vector<OctalRuleset>& rulesets, const HeapPosition& position, Operator op);

// table[m][n] = G_s of {n under colset, m under rowset}; row 0 and column 0
// are single-heap values.
std::vector<std::vector<Score>> gs_table(const OctalRuleset& colset, const OctalRuleset& rowset, Operator op,
                                         int n_max, int m_max);

struct PeriodReport {
  std::size_t preperiod;
  std::size_t period;
  std::vector<Score> block;
  std::size_t checked_up_to;
};

// Smallest period, then smallest preperiod, holding through the end of the
// data. Requires values.size() > max_preperiod + 2 * max_period.
std::optional<PeriodReport> find_period(const std::vector<Score>& values, std::size_t max_preperiod,
                                        std::size_t max_period);

struct OctalGameLimits {
  std::size_t max_beans = 24;
};

// Explicit game of a heap position: Left adds and Right subtracts the points
// of each move, and heaps are combined with `op`.
Game octal_game(const std::vector<OctalRuleset>& rulesets, const HeapPosition& position, Operator op,
                OctalGameLimits limits = {});

// final_score_left of octal_game; must agree with gs.
Score gs_oracle(const std::vector<OctalRuleset>& rulesets, const HeapPosition& position, Operator op,
                OctalGameLimits limits = {});

}  // namespace scoreplay
