#ifndef FOSEP_AUTOMATON_IO_HPP
#define FOSEP_AUTOMATON_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "fosep/automaton.hpp"

namespace fosep {

using Automaton = std::variant<Nfa, Dfa>;

// On-disk document shape:
//   {
//     "kind": "nfa" | "dfa",
//     "alphabet": ["a", "b", ...],          // letter names, index order
//     "states": N,
//     "initial": [ids...],                  // exactly one id for a DFA
//     "accepting": [ids...],
//     "transitions": [[src, "a", dst], ...]
//   }
// A DFA document may omit transitions; the reader materializes a non-accepting
// sink state and totalizes.  Duplicate (src, letter) DFA entries with distinct
// targets are rejected as nondeterministic.
Automaton parse_automaton(const std::string& json_text);
Automaton read_automaton(std::istream& in);
Automaton read_automaton_file(const std::string& path);

std::string to_json(const Nfa& nfa);
std::string to_json(const Dfa& dfa);
std::string to_json(const Automaton& automaton);

void write_automaton_file(const std::string& path, const Automaton& automaton);

}  // namespace fosep

#endif  // FOSEP_AUTOMATON_IO_HPP
