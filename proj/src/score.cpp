#include "scoreplay/score.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "scoreplay/errors.hpp"

namespace scoreplay {
namespace {

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Score::Score(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("score denominator is zero");
  Wide n = numerator;
  Wide d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (!fits(n) || !fits(d)) throw OverflowError("score out of range");
  num_ = static_cast<std::int64_t>(n);
  den_ = static_cast<std::int64_t>(d);
}

Score Score::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) throw OverflowError("score negation overflows");
  Score r = *this;
  r.num_ = -num_;
  return r;
}

Score& Score::operator+=(const Score& other) {
  if (den_ == 1 && other.den_ == 1) {
    std::int64_t sum;
    if (__builtin_add_overflow(num_, other.num_, &sum)) throw OverflowError("score addition overflows");
    num_ = sum;
    return *this;
  }
  Wide n = Wide(num_) * other.den_ + Wide(other.num_) * den_;
  Wide d = Wide(den_) * other.den_;
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (!fits(n) || !fits(d)) throw OverflowError("score addition overflows");
  num_ = static_cast<std::int64_t>(n);
  den_ = static_cast<std::int64_t>(d);
  return *this;
}

Score& Score::operator-=(const Score& other) { return *this += -other; }

std::strong_ordering operator<=>(const Score& a, const Score& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Score::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Score Score::parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  auto read_digits = [&](Wide& value, int& count) {
    value = 0;
    count = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      value = value * 10 + (text[i] - '0');
      if (value > std::numeric_limits<std::int64_t>::max()) throw OverflowError("score literal too large");
      ++i;
      ++count;
    }
  };
  Wide whole;
  int whole_digits;
  read_digits(whole, whole_digits);
  if (whole_digits == 0) throw ParseError("expected digits in score", i);

  Wide num = whole;
  Wide den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    int den_digits;
    read_digits(den, den_digits);
    if (den_digits == 0) throw ParseError("expected denominator digits", i);
    if (den == 0) throw ParseError("zero denominator", i);
  } else if (i < text.size() && text[i] == '.') {
    ++i;
    Wide frac;
    int frac_digits;
    read_digits(frac, frac_digits);
    if (frac_digits == 0) throw ParseError("expected digits after decimal point", i);
    if (frac_digits > 18) throw OverflowError("too many decimal digits");
    Wide scale = 1;
    for (int k = 0; k < frac_digits; ++k) scale *= 10;
    num = whole * scale + frac;
    den = scale;
    if (!fits(num)) throw OverflowError("score literal too large");
  }
  if (i != text.size()) throw ParseError("unexpected character in score", i);
  if (negative) num = -num;
  return Score(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::size_t Score::hash() const {
  std::size_t h = std::hash<std::int64_t>{}(num_);
  h ^= std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::ostream& operator<<(std::ostream& os, const Score& s) { return os << s.to_string(); }

}  // namespace scoreplay
