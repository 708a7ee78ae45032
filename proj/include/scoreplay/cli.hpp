#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "scoreplay/grundy.hpp"

namespace scoreplay {

// Runs one command line (without the program name). Returns the exit code:
// 0 on success, 1 on evaluation errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Splits "123:1,2,3,sub{4,5}" into rulesets. A comma-separated token that
// contains ':' or starts with "sub{" begins a new ruleset.
std::vector<OctalRuleset> parse_ruleset_list(const std::string& text);

}  // namespace scoreplay
