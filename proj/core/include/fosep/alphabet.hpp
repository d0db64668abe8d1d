#ifndef FOSEP_ALPHABET_HPP
#define FOSEP_ALPHABET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace fosep {

using State = std::uint32_t;
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// An ordered finite alphabet of named letters.  Letter indices are positions
// in the name list; words are sequences of indices.
//
// Two naming conventions coexist:
//   - plain names ("a", "b") for regex-defined languages;
//   - variable-set names ("{}", "{p}", "{p,q}") for temporal-model languages,
//     where each letter is the set of variables true at one position.
// Set names are canonical: members sorted, comma-joined, brace-wrapped.
class Alphabet {
 public:
  // Letter names must be nonempty, distinct, and free of ',' (reserved for
  // CSV input) unless they are brace-wrapped set names.
  explicit Alphabet(std::vector<std::string> names);

  // Parses "a,b,c".  Surrounding whitespace per item is rejected, not trimmed:
  // letter names are exact strings.
  static Alphabet from_csv(const std::string& csv);

  // The 2^k subsets of `variables` in bitmask order: bit i of a letter's index
  // corresponds to the i-th variable after sorting and deduplication.
  static Alphabet powerset(std::vector<std::string> variables);

  std::uint32_t size() const { return static_cast<std::uint32_t>(names_.size()); }
  const std::string& name(Letter letter) const { return names_.at(letter); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> index(const std::string& name) const;

  // "{p,q}" -> {"p","q"}; "{}" -> {}; nullopt if `name` is not a canonical
  // set name (sorted, deduplicated, valid identifiers).
  static std::optional<std::vector<std::string>> parse_set_name(const std::string& name);
  static std::string set_name(std::vector<std::string> members);

  friend bool operator==(const Alphabet&, const Alphabet&);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
};

bool operator==(const Alphabet& lhs, const Alphabet& rhs);

// True for identifiers: [a-zA-Z][a-zA-Z0-9_]*.
bool is_identifier(const std::string& text);

}  // namespace fosep

#endif  // FOSEP_ALPHABET_HPP
