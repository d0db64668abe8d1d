#ifndef FOSEP_REGEX_HPP
#define FOSEP_REGEX_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fosep/alphabet.hpp"

namespace fosep {

enum class RegexKind { kLetter, kConcat, kUnion, kStar, kPlus };

// Immutable regular expression over named letters.  Concat and Union are
// n-ary (≥ 2 children); Star and Plus are unary.
class Regex {
 public:
  struct Node;

  static Regex letter(std::string name);
  static Regex concat(std::vector<Regex> children);
  static Regex alternation(std::vector<Regex> children);
  static Regex star(Regex operand);
  static Regex plus(Regex operand);

  RegexKind kind() const;
  // Valid only for kLetter.
  const std::string& letter_name() const;
  std::size_t arity() const;
  Regex child(std::size_t i) const;

  std::string to_string() const;
  friend bool operator==(const Regex& lhs, const Regex& rhs);

 private:
  explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

bool operator==(const Regex& lhs, const Regex& rhs);

// Concrete syntax: letters, juxtaposition (concatenation), `|` (union),
// postfix `*` and `+`, parentheses.  A letter token is either one character
// or a brace-wrapped set name such as `{p,q}`; every letter must belong to
// `alphabet`.  Whitespace separates tokens and is otherwise ignored.
Regex parse_regex(std::string_view text, const Alphabet& alphabet);

// Inverse of parse_regex up to structural equality.
std::string print_regex(const Regex& regex);

}  // namespace fosep

#endif  // FOSEP_REGEX_HPP
