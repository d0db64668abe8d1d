#ifndef FOSEP_AUTOMATON_HPP
#define FOSEP_AUTOMATON_HPP

#include <cstdint>
#include <vector>

#include "fosep/alphabet.hpp"

namespace fosep {

// Language convention used throughout: automata denote sets of NONEMPTY
// words.  The empty word is never a member, regardless of whether an initial
// state is accepting; `accepts` and `is_empty` enforce this.

struct Nfa {
  Alphabet alphabet;
  std::uint32_t num_states = 0;
  std::vector<State> initial;    // sorted, unique
  std::vector<State> accepting;  // sorted, unique
  // next[state * alphabet.size() + letter] = sorted target list
  std::vector<std::vector<State>> next;

  const std::vector<State>& targets(State s, Letter a) const {
    return next[std::size_t{s} * alphabet.size() + a];
  }
};

struct Dfa {
  Alphabet alphabet;
  std::uint32_t num_states = 0;  // always >= 1
  State initial = 0;
  std::vector<bool> accepting;   // indexed by state
  // delta[state * alphabet.size() + letter]; total by construction
  std::vector<State> delta;

  State step(State s, Letter a) const {
    return delta[std::size_t{s} * alphabet.size() + a];
  }

  friend bool operator==(const Dfa&, const Dfa&) = default;
};

// Throw InvalidInputError when state ids, letter counts, sortedness, or
// totality are violated.
void validate(const Nfa& nfa);
void validate(const Dfa& dfa);

// A DFA is an NFA with singleton initial set and singleton target lists.
Nfa to_nfa(const Dfa& dfa);

bool accepts(const Dfa& dfa, const Word& word);
bool accepts(const Nfa& nfa, const Word& word);

// Emptiness of the nonempty-word language, i.e. whether some word of
// length >= 1 is accepted.
bool is_empty(const Dfa& dfa);
bool is_empty(const Nfa& nfa);

}  // namespace fosep

#endif  // FOSEP_AUTOMATON_HPP
