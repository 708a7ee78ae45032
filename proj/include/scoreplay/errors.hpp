#pragma once

#include <stdexcept>
#include <string>

namespace scoreplay {

// Raised when exact score arithmetic would leave the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

// Raised when a computation would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input. `position` is a byte offset, or a line number
// for line-oriented formats.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position, const char* unit = "offset")
      : std::invalid_argument(what + " at " + unit + " " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace scoreplay
