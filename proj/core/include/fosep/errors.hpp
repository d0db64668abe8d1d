#ifndef FOSEP_ERRORS_HPP
#define FOSEP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fosep {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a formula, regex, word literal, or letter name.
// `position` is the 0-based character offset into the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Structurally well-formed input that violates a semantic precondition:
// mismatched alphabets, out-of-range state ids, non-set letter names, etc.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A construction exceeded the configured state budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace fosep

#endif  // FOSEP_ERRORS_HPP
