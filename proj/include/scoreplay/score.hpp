#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace scoreplay {

// Exact rational score, always stored in lowest terms with a positive
// denominator. Arithmetic throws OverflowError instead of wrapping.
class Score {
 public:
  constexpr Score() = default;
  constexpr Score(std::int64_t value) : num_(value) {}  // NOLINT: implicit from integers
  Score(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Score operator-() const;
  Score& operator+=(const Score& other);
  Score& operator-=(const Score& other);

  friend Score operator+(Score a, const Score& b) { return a += b; }
  friend Score operator-(Score a, const Score& b) { return a -= b; }

  friend bool operator==(const Score&, const Score&) = default;
  friend std::strong_ordering operator<=>(const Score& a, const Score& b);

  // "3", "-7", "3/2". Decimal input is accepted by parse() but never produced.
  std::string to_string() const;

  // Accepts an optional leading '-', then digits with either a "/digits"
  // fraction or a ".digits" decimal part. Throws ParseError.
  static Score parse(std::string_view text);

  std::size_t hash() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Score& s);

}  // namespace scoreplay

template <>
struct std::hash<scoreplay::Score> {
  std::size_t operator()(const scoreplay::Score& s) const noexcept { return s.hash(); }
};
