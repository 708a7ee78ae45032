#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "scoreplay/game.hpp"

namespace scoreplay {

// Grammar:
//   game     := rational | '{' opts '|' rational '|' opts '}'
//   opts     := '.' | game (',' game)*
//   rational := ['-'] digits ['/' digits | '.' digits]
// Whitespace is allowed between tokens. Throws ParseError.
Game parse_game(std::string_view text);

// Canonical text: no whitespace, atomics as bare rationals, options in
// canonical order.
std::string print_game(const Game& g);

std::ostream& operator<<(std::ostream& os, const Game& g);

}  // namespace scoreplay
