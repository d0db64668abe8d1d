#ifndef FOSEP_MODEL_HPP
#define FOSEP_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fosep/ltl.hpp"

namespace fosep {

// A finite temporal model: positions 0..length()-1, each carrying the set of
// variables true there.  The variable universe is explicit — a variable may
// belong to the universe yet be false everywhere, and the universe determines
// which letter alphabet the model corresponds to (2^universe).
class TemporalModel {
 public:
  // `positions` must be nonempty; every listed variable must belong to
  // `universe`.  The universe is sorted and deduplicated; at most 64 variables
  // are supported (valuations are stored as bitmasks).
  TemporalModel(std::vector<std::string> universe,
                const std::vector<std::vector<std::string>>& positions);

  std::size_t length() const { return valuation_.size(); }
  const std::vector<std::string>& universe() const { return universe_; }
  bool holds(const std::string& variable, std::size_t position) const;
  std::vector<std::string> letter_at(std::size_t position) const;

 private:
  std::vector<std::string> universe_;
  std::vector<std::uint64_t> valuation_;  // bit i = universe_[i], one mask per position
};

// Parses the word literal syntax `{p};{};{p,q}`: semicolon-separated set
// letters, one per position.  Returns one variable list per position.
std::vector<std::vector<std::string>> parse_word_literal(std::string_view text);

// Truth at `position`, by the following clauses (last = length()-1):
//   X f     : position < last and f holds at position+1
//   F f     : f holds at some strictly later position
//   G f     : f holds here and at every later position
//   a U b   : a holds at some strictly later position m, and b holds at every
//             position strictly between here and m
// Every variable of `formula` must belong to the model's universe.
bool evaluate(const LtlFormula& formula, const TemporalModel& model, std::size_t position = 0);

}  // namespace fosep

#endif  // FOSEP_MODEL_HPP
