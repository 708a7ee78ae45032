#include "scoreplay/notation.hpp"

#include <cctype>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "scoreplay/errors.hpp"

namespace scoreplay {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Game parse() {
    Game g = game();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return g;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Score rational() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '/') {
        ++pos_;
      } else if (c == '.' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) &&
                 pos_ > start && std::isdigit(static_cast<unsigned char>(text_[pos_ - 1]))) {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == start) throw ParseError("expected a number", start);
    try {
      return Score::parse(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError("malformed number", start + e.position());
    }
  }

  std::vector<Game> options() {
    std::vector<Game> out;
    if (peek() == '.') {
      ++pos_;
      return out;
    }
    out.push_back(game());
    while (peek() == ',') {
      ++pos_;
      out.push_back(game());
    }
    return out;
  }

  Game game() {
    if (peek() != '{') return Game::atomic(rational());
    ++pos_;
    auto left = options();
    expect('|');
    Score s = rational();
    expect('|');
    auto right = options();
    expect('}');
    return Game::make(std::move(left), s, std::move(right));
  }
};

void print_rec(const Game& g, std::string& out, std::unordered_map<const GameNode*, std::string>& memo) {
  auto it = memo.find(g.node());
  if (it != memo.end()) {
    out += it->second;
    return;
  }
  std::string s;
  if (g.is_atomic()) {
    s = g.score().to_string();
  } else {
    auto side = [&](std::span<const Game> opts) {
      if (opts.empty()) {
        s += '.';
        return;
      }
      for (std::size_t i = 0; i < opts.size(); ++i) {
        if (i) s += ',';
        print_rec(opts[i], s, memo);
      }
    };
    s += '{';
    side(g.left());
    s += '|';
    s += g.score().to_string();
    s += '|';
    side(g.right());
    s += '}';
  }
  out += s;
  memo.emplace(g.node(), std::move(s));
}

}  // namespace

Game parse_game(std::string_view text) { return Parser(text).parse(); }

std::string print_game(const Game& g) {
  std::string out;
  std::unordered_map<const GameNode*, std::string> memo;
  print_rec(g, out, memo);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Game& g) { return os << print_game(g); }

}  // namespace scoreplay
