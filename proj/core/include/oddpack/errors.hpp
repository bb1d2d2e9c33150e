#pragma once

#include <stdexcept>
#include <string>

namespace oddpack {

/// Malformed input: bad file contents, out-of-range vertex ids, invalid generator parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// DIMACS parse failure carrying the offending 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exact search ran out of its node or wall-clock budget, or the instance is
/// beyond what the exhaustive engines accept.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oddpack
