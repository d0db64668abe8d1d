#ifndef FOSEP_TESTS_SUPPORT_FIXTURES_HPP
#define FOSEP_TESTS_SUPPORT_FIXTURES_HPP

#include <string>
#include <vector>

#include "fosep/automaton.hpp"
#include "fosep/automaton_ops.hpp"
#include "fosep/regex.hpp"

namespace fosep::testing {

inline Dfa dfa_from_regex(const std::string& pattern, const Alphabet& alphabet) {
  return minimize(determinize(regex_to_nfa(parse_regex(pattern, alphabet), alphabet)));
}

// Word over an alphabet of single-character letters.
inline Word word(const std::string& text, const Alphabet& alphabet) {
  Word w;
  for (char c : text) w.push_back(*alphabet.index(std::string(1, c)));
  return w;
}

// Ten-state recogniser used by the worked separation example: states 0..8
// track progress through alternating ab / ba blocks (1a..4a for words read
// after an initial a, 1b..4b after an initial b), state 9 is the dead sink.
// Accepting set 0 marks (abab)+ (state 4), set 1 marks (baba)+ (state 8).
inline Dfa ab_block_dfa() {
  Alphabet ab = Alphabet::from_csv("a,b");
  Dfa d{ab, 10, 0, std::vector<bool>(10, false), std::vector<State>(20, 9)};
  auto set = [&](State s, char c, State t) { d.delta[s * 2 + (c == 'b')] = t; };
  set(0, 'a', 1);
  set(1, 'b', 2);
  set(2, 'a', 3);
  set(3, 'b', 4);
  set(4, 'a', 1);
  set(0, 'b', 5);
  set(5, 'a', 6);
  set(6, 'b', 7);
  set(7, 'a', 8);
  set(8, 'b', 5);
  return d;
}

inline std::vector<State> ab_block_accepting(bool left) {
  return left ? std::vector<State>{4} : std::vector<State>{8};
}

// Six-state recogniser pair used by the non-separable worked example: the
// shared transition structure below with accepting state 3 on the left and
// accepting state 1 on the right (state 5 is the dead sink).
inline Dfa loop_tail_dfa(bool left) {
  Alphabet ab = Alphabet::from_csv("a,b");
  Dfa d{ab, 6, 0, std::vector<bool>(6, false), std::vector<State>(12, 5)};
  d.accepting[left ? 3 : 1] = true;
  auto set = [&](State s, char c, State t) { d.delta[s * 2 + (c == 'b')] = t; };
  set(0, 'b', 1);
  set(1, 'b', 4);
  set(3, 'b', 1);
  set(1, 'a', 2);
  set(2, 'a', 1);
  set(3, 'a', 4);
  set(4, 'a', 3);
  return d;
}

}  // namespace fosep::testing

#endif  // FOSEP_TESTS_SUPPORT_FIXTURES_HPP
