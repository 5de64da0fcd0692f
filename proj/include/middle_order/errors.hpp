#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace middle_order {

/// Two operands of a binary operation have different sizes.
class SizeMismatch : public std::invalid_argument {
public:
  SizeMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("size mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// An exhaustive operation was asked for a size beyond its configured limit.
class LimitExceeded : public std::out_of_range {
public:
  LimitExceeded(const std::string& what, int n, int limit)
      : std::out_of_range(what + ": n = " + std::to_string(n) + " exceeds limit " + std::to_string(limit)) {}
};

/// Malformed textual input; `position` is the 0-based offset of the offending character.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        reason_(message),
        position_(position) {}

  /// The message without the position suffix.
  const std::string& reason() const noexcept { return reason_; }
  std::size_t position() const noexcept { return position_; }

private:
  std::string reason_;
  std::size_t position_;
};

}  // namespace middle_order
