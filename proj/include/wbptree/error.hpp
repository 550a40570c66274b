#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wbp {

/// Malformed passport text. `position` is the 0-based byte offset of the
/// offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::invalid_argument("parse error at position " +
                              std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A precondition on the input was violated (unbalanced passport, d outside
/// the divisor set, p <= q, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The oracle refused an input above its configured size bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity failed: a non-integral count, a recomposition
/// mismatch, a non-cyclic automorphism group. Never expected; always fatal.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wbp
