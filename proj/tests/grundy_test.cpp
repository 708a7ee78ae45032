#include <gtest/gtest.h>

#include <algorithm>

#include "reference_tables.hpp"
#include "scoreplay/errors.hpp"
#include "scoreplay/grundy.hpp"
#include "scoreplay/notation.hpp"
#include "test_rulesets.hpp"

using namespace scoreplay;

namespace {

const OctalRuleset R123 = OctalRuleset::parse("123:1,2,3");
const OctalRuleset R3111 = OctalRuleset::parse("3111:1,2,3,4");
const OctalRuleset R3311 = OctalRuleset::parse("3311:1,2,3,4");
const OctalRuleset R333 = OctalRuleset::parse("333:1,2,3");
const OctalRuleset R30033 = OctalRuleset::parse("30033:1,0,0,4,5");
const OctalRuleset S45 = OctalRuleset::parse("sub{4,5}");
const OctalRuleset R3333 = OctalRuleset::parse("3333:2,2,2,2");

std::vector<Score> single_values(const OctalRuleset& r, int n_max, Operator op = Operator::DISJUNCTIVE) {
  GrundySolver s({r}, op);
  std::vector<Score> v;
  for (int n = 0; n <= n_max; ++n) v.push_back(s.gs_single(n));
  return v;
}

void expect_table(const std::vector<std::vector<Score>>& got, const reference::Table& want) {
  ASSERT_EQ(got.size(), 13u);
  for (int m = 0; m < 13; ++m)
    for (int n = 0; n < 13; ++n) EXPECT_EQ(got[m][n], Score(want[m][n])) << "row " << m << " col " << n;
}

}  // namespace

TEST(OctalRuleset, ParsesDigitsAndPoints) {
  auto r = OctalRuleset::parse("3311:1,2,3,4");
  EXPECT_EQ(r.digits, (std::vector<int>{3, 3, 1, 1}));
  EXPECT_EQ(r.points.back(), Score(4));
  EXPECT_EQ(r.to_string(), "3311:1,2,3,4");
  EXPECT_TRUE(r.takes_only());
  EXPECT_EQ(OctalRuleset::parse("26:1/2,1.5").points[1], Score(3, 2));
}

TEST(OctalRuleset, SubtractionShorthand) {
  auto r = OctalRuleset::parse("sub{4,5}");
  EXPECT_EQ(r.to_string(), "00033:0,0,0,4,5");
}

TEST(OctalRuleset, RejectsMalformed) {
  EXPECT_THROW(OctalRuleset::parse("128:1,2,3"), ParseError);
  EXPECT_THROW(OctalRuleset::parse("12:1"), ParseError);
  EXPECT_THROW(OctalRuleset::parse("12"), ParseError);
  EXPECT_THROW(OctalRuleset::parse("sub{}"), ParseError);
  EXPECT_THROW(OctalRuleset::parse("sub{0}"), ParseError);
}

TEST(Moves, NoMovesAtTwoUnder123) { EXPECT_TRUE(moves(R123, 2).empty()); }

TEST(Moves, SubtractionTakes) {
  auto m = moves(S45, 9);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0], (OctalMove{4, {5}, Score(4)}));
  EXPECT_EQ(m[1], (OctalMove{5, {4}, Score(5)}));
}

TEST(Moves, SplittingDigit) {
  auto r = OctalRuleset::parse("26:1,2");
  auto m = moves(r, 5);
  std::vector<OctalMove> take2;
  std::copy_if(m.begin(), m.end(), std::back_inserter(take2), [](const OctalMove& x) { return x.take == 2; });
  ASSERT_EQ(take2.size(), 2u);
  EXPECT_EQ(take2[0].remainder, (std::vector<int>{3}));
  EXPECT_EQ(take2[1].remainder, (std::vector<int>{1, 2}));
}

TEST(Gs, SubtractionFourFive) {
  std::vector<int> want = {0, 0, 0, 0, 4, 5, 5, 5, 5, 1, 0, 0, 0, 3, 4, 5};
  auto got = single_values(S45, 15);
  for (int n = 0; n <= 15; ++n) EXPECT_EQ(got[n], Score(want[n])) << n;
}

TEST(Gs, WorkedValues) {
  EXPECT_EQ(gs({S45}, {{13, 0}}, Operator::DISJUNCTIVE), Score(3));
  EXPECT_EQ(gs({R123}, {{4, 0}, {3, 0}}, Operator::DISJUNCTIVE), Score(1));
  EXPECT_EQ(gs({R123, R30033}, {{1, 0}, {4, 1}}, Operator::SEQUENTIAL), Score(-3));
  EXPECT_EQ(gs({R123}, {}, Operator::CONJUNCTIVE), Score(0));
}

TEST(Gs, SequentialRejectsBreaking) {
  EXPECT_THROW(GrundySolver({OctalRuleset::parse("4:1")}, Operator::SEQUENTIAL), std::invalid_argument);
}

TEST(Gs, SequentialRespectsOrder) {
  GrundySolver s({R123, R30033}, Operator::SEQUENTIAL);
  EXPECT_NE(s.gs({{1, 0}, {4, 1}}), s.gs({{4, 1}, {1, 0}}));
}

TEST(GsTable, DisjunctiveSameRuleset) { expect_table(gs_table(R123, R123, Operator::DISJUNCTIVE, 12, 12), reference::kDerivedDisjSame); }
TEST(GsTable, DisjunctiveMixed) { expect_table(gs_table(R123, R3111, Operator::DISJUNCTIVE, 12, 12), reference::kDerivedDisjMixed); }
TEST(GsTable, Selective) { expect_table(gs_table(R3311, R333, Operator::SELECTIVE, 12, 12), reference::kDerivedSelective); }
TEST(GsTable, Sequential) { expect_table(gs_table(R123, R30033, Operator::SEQUENTIAL, 12, 12), reference::kDerivedSequential); }

TEST(GsTable, MarginsAreSingleHeapSequences) {
  for (Operator op : {Operator::DISJUNCTIVE, Operator::CONJUNCTIVE, Operator::SELECTIVE, Operator::SEQUENTIAL}) {
    auto t = gs_table(R3311, R333, op, 12, 12);
    auto cols = single_values(R3311, 12, op);
    auto rows = single_values(R333, 12, op);
    for (int i = 0; i <= 12; ++i) {
      EXPECT_EQ(t[0][i], cols[i]);
      EXPECT_EQ(t[i][0], rows[i]);
    }
  }
}

TEST(GsTable, SymmetricForCommutativeOperators) {
  for (const auto& [name, r] : standard_rulesets()) {
    for (Operator op : {Operator::DISJUNCTIVE, Operator::CONJUNCTIVE, Operator::SELECTIVE}) {
      auto t = gs_table(r, r, op, 12, 12);
      for (int m = 0; m <= 12; ++m)
        for (int n = 0; n < m; ++n) EXPECT_EQ(t[m][n], t[n][m]) << name << " " << to_string(op);
    }
  }
}

TEST(Period, TwoPointRuleset) {
  auto v = single_values(R3333, 200);
  auto rep = find_period(v, 50, 50);
  ASSERT_TRUE(rep);
  EXPECT_EQ(rep->period, 5u);
  EXPECT_EQ(rep->preperiod, 0u);
  EXPECT_EQ(rep->block, (std::vector<Score>{0, 2, 2, 2, 2}));
  EXPECT_EQ(rep->checked_up_to, 200u);
}

TEST(Period, AllZero) {
  std::vector<Score> v(20, Score(0));
  auto rep = find_period(v, 5, 5);
  ASSERT_TRUE(rep);
  EXPECT_EQ(rep->period, 1u);
  EXPECT_EQ(rep->preperiod, 0u);
}

TEST(Period, SubtractionFourFiveHasPeriodTen) {
  auto v = single_values(S45, 200);
  auto rep = find_period(v, 100, 40);
  ASSERT_TRUE(rep);
  EXPECT_EQ(rep->period, 10u);
  // Values settle into 0,1,2,3,4,5,4,3,2,1 once the preperiod ends.
  EXPECT_GT(rep->preperiod, 0u);
}

TEST(Period, PrefersSmallestPeriodThenPreperiod) {
  std::vector<Score> v = {7, 7, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2};
  auto rep = find_period(v, 4, 4);
  ASSERT_TRUE(rep);
  EXPECT_EQ(rep->period, 2u);
  EXPECT_EQ(rep->preperiod, 2u);
}

TEST(Period, NoneWithinBounds) {
  std::vector<Score> v;
  for (int i = 0; i < 30; ++i) v.push_back(Score(i));
  EXPECT_FALSE(find_period(v, 5, 5));
}

TEST(Period, InsufficientData) {
  std::vector<Score> v(10, Score(0));
  EXPECT_THROW(find_period(v, 4, 3), std::invalid_argument);
}

TEST(Oracle, SmallPositionsAllOperators) {
  auto rs = standard_rulesets();
  for (const auto& [name, r] : rs) {
    for (Operator op : {Operator::DISJUNCTIVE, Operator::CONJUNCTIVE, Operator::SELECTIVE, Operator::SEQUENTIAL}) {
      GrundySolver solver({r}, op);
      for (const auto& parts : heap_partitions(7)) {
        HeapPosition pos;
        for (int p : parts) pos.push_back({p, 0});
        EXPECT_EQ(solver.gs(pos), gs_oracle({r}, pos, op)) << name << " " << to_string(op);
      }
    }
  }
}

TEST(Oracle, KnownValues) {
  EXPECT_EQ(gs_oracle({R123}, {}, Operator::DISJUNCTIVE), Score(0));
  EXPECT_EQ(gs_oracle({S45}, {{9, 0}}, Operator::DISJUNCTIVE), Score(1));
  EXPECT_EQ(gs_oracle({R123}, {{2, 0}, {3, 0}}, Operator::CONJUNCTIVE), Score(3));
}

TEST(Oracle, BeanCap) {
  EXPECT_THROW(gs_oracle({R123}, {{30, 0}}, Operator::DISJUNCTIVE), CapExceeded);
}

TEST(Additivity, Conjunctive) {
  for (const auto& [name, r] : standard_rulesets()) {
    GrundySolver s({r}, Operator::CONJUNCTIVE);
    for (int n = 0; n <= 12; ++n)
      for (int m = 0; m <= 12; ++m) EXPECT_EQ(s.gs({{n, 0}, {m, 0}}), s.gs_single(n) + s.gs_single(m)) << name;
  }
}

TEST(Additivity, SelectiveUnderNonnegativity) {
  for (const auto* r : {&R123, &R333, &R30033, &S45, &R3333}) {
    GrundySolver s({*r}, Operator::SELECTIVE);
    for (int n = 0; n <= 12; ++n) ASSERT_GE(s.gs_single(n), Score(0));
    for (int n = 0; n <= 12; ++n)
      for (int m = 0; m <= 12; ++m)
        EXPECT_EQ(s.gs({{n, 0}, {m, 0}}), s.gs_single(n) + s.gs_single(m)) << r->to_string();
  }
}

TEST(Additivity, SelectiveFailsWithNegativeValues) {
  GrundySolver s({R3311}, Operator::SELECTIVE);
  EXPECT_EQ(s.gs_single(5), Score(-1));
  EXPECT_EQ(s.gs_single(1), Score(1));
  EXPECT_EQ(s.gs({{1, 0}, {5, 0}}), Score(2));
}

TEST(SubtractionLemma, PeriodicValues) {
  for (const char* text : {"sub{4,5}", "sub{1,3,5}", "sub{2,7}"}) {
    auto r = OctalRuleset::parse(text);
    int k = static_cast<int>(r.digits.size());
    GrundySolver solver({r}, Operator::DISJUNCTIVE);
    for (int s = 1; s <= k; ++s) {
      if (r.digits[s - 1] == 0) continue;
      for (int i = 0; i <= 8; ++i) {
        EXPECT_EQ(solver.gs_single(s + 2 * i * k), Score(s)) << text << " s=" << s << " i=" << i;
        EXPECT_EQ(solver.gs_single(s + (2 * i + 1) * k), Score(k - s)) << text << " s=" << s << " i=" << i;
      }
    }
  }
}

TEST(NegatedPoints, DualToMinimizingRecursion) {
  // With every p_k negated, G_s equals minus the value of the recursion in
  // which the mover minimizes p_k - value(next).
  for (const auto& [name, r] : standard_rulesets()) {
    GrundySolver neg({r.negated_points()}, Operator::DISJUNCTIVE);
    std::vector<Score> minimizing(25, Score(0));
    for (int n = 1; n < 25; ++n) {
      auto mv = moves(r, n);
      if (mv.empty()) continue;
      std::optional<Score> best;
      for (const auto& m : mv) {
        Score v = m.points - (m.remainder.empty() ? Score(0) : minimizing[m.remainder[0]]);
        if (!best || v < *best) best = v;
      }
      minimizing[n] = *best;
      EXPECT_EQ(neg.gs_single(n), -minimizing[n]) << name << " n=" << n;
    }
  }
}

TEST(NegatedPoints, PlainNegationDoesNotHoldInGeneral) {
  GrundySolver pos({R3311}, Operator::DISJUNCTIVE);
  GrundySolver neg({R3311.negated_points()}, Operator::DISJUNCTIVE);
  bool differs = false;
  for (int n = 1; n <= 12; ++n) differs |= neg.gs_single(n) != -pos.gs_single(n);
  EXPECT_TRUE(differs);
}
