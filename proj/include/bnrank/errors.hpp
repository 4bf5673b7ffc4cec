#pragma once

#include <stdexcept>
#include <string>

namespace bnrank {

/// A parameter (n, an index, a subset) violates an operation's precondition.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested computation is outside what the implementation can do
/// (e.g. brute-force endomorphism enumeration for n >= 3).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element list was not closed under the supplied operation.
class ClosureViolation : public std::runtime_error {
 public:
  ClosureViolation(std::size_t left, std::size_t right, const std::string& msg)
      : std::runtime_error(msg), left_(left), right_(right) {}

  std::size_t left() const noexcept { return left_; }
  std::size_t right() const noexcept { return right_; }

 private:
  std::size_t left_;
  std::size_t right_;
};

/// Malformed table file. `line` and `offset` are 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t offset)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", offset "
                           + std::to_string(offset) + ")"),
        line_(line),
        offset_(offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

/// A well-formed table that is not a semigroup (bad entries, non-associative).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed result disagrees with a proven closed form. Always a bug.
class TheoremMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bnrank
