#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scoreplay/grundy.hpp"

// The six rulesets used throughout the G_s property checks.
inline std::vector<std::pair<std::string, scoreplay::OctalRuleset>> standard_rulesets() {
  using scoreplay::OctalRuleset;
  return {
      {"123:1,2,3", OctalRuleset::parse("123:1,2,3")},
      {"3311:1,2,3,4", OctalRuleset::parse("3311:1,2,3,4")},
      {"333:1,2,3", OctalRuleset::parse("333:1,2,3")},
      {"30033:1,0,0,4,5", OctalRuleset::parse("30033:1,0,0,4,5")},
      {"sub{4,5}", OctalRuleset::parse("sub{4,5}")},
      {"3333:2,2,2,2", OctalRuleset::parse("3333:2,2,2,2")},
  };
}

// All multisets of positive heap sizes with total at most `max_total`, as
// nondecreasing lists.
inline std::vector<std::vector<int>> heap_partitions(int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    out.push_back(cur);
    for (int k = min_part; k <= remaining; ++k) {
      cur.push_back(k);
      self(self, remaining - k, k);
      cur.pop_back();
    }
  };
  rec(rec, max_total, 1);
  return out;
}
