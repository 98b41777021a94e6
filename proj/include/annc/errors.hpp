#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace annc {

/// Malformed cycle or partition text. `position` is the 0-based offset of the
/// offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A Möbius value was requested for x, y with x not below y.
class IncomparableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested enumeration exceeds the configured size limit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Signed 64-bit overflow or a non-integral value where an integer is required.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A relation handed to the poset builder is not a partial order, or two
/// independent characterizations of an order disagree.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace annc
