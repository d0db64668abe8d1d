#ifndef FOSEP_AUTOMATON_OPS_HPP
#define FOSEP_AUTOMATON_OPS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fosep/automaton.hpp"
#include "fosep/regex.hpp"

namespace fosep {

// State budget for the constructions that can blow up (subset construction,
// products, formula compilation).  Exceeding it throws ResourceLimitError.
struct Limits {
  std::uint64_t max_states = 1'000'000;
};

// Position automaton of the regex: one state per letter occurrence plus a
// start state.  The result denotes the regex language minus the empty word
// (the start state is never accepting).
Nfa regex_to_nfa(const Regex& regex, const Alphabet& alphabet);

// Subset construction; the result is total (the empty subset is the sink).
Dfa determinize(const Nfa& nfa, const Limits& limits = {});

// Canonical minimal total DFA for the nonempty-word language.
//
// Because the empty word never counts, each language has two classical
// representatives (empty word in or out).  Both are minimized and the smaller
// one is returned, with states renumbered in breadth-first order from the
// initial state by letter index.  Consequently minimize is idempotent and two
// DFAs denote the same nonempty-word language iff their minimizations are
// identical structures.
Dfa minimize(const Dfa& dfa);

// Nonempty-word complement: L(result) = A+ \ L(dfa).  Involutive on totals.
Dfa complement(const Dfa& dfa);

enum class ProductMode { kIntersection, kUnion, kDifference };

// Synchronous product restricted to reachable pairs.  Both inputs must share
// one alphabet.
Dfa product(const Dfa& lhs, const Dfa& rhs, ProductMode mode,
            const Limits& limits = {});

// Product that remembers both components' accepting sets instead of fixing a
// mode, for analyses that need to tell the two languages apart afterwards.
struct MarkedProduct {
  Dfa dfa;  // accepting flags all false; the marks below carry acceptance
  std::vector<State> accepting_left;
  std::vector<State> accepting_right;
};
MarkedProduct marked_product(const Dfa& lhs, const Dfa& rhs, const Limits& limits = {});

// Letter-wise restriction of a variable-set alphabet: the result ranges over
// the 2^keep subsets and each transition letter becomes letter ∩ keep.
// Requires every input letter name to be a set name.
Nfa project(const Nfa& nfa, const std::vector<std::string>& keep);

// Decides whether no word induces a nontrivial cycle on the DFA's states;
// equivalently, whether the DFA's transition semigroup is aperiodic.
bool is_counter_free(const Dfa& dfa);

}  // namespace fosep

#endif  // FOSEP_AUTOMATON_OPS_HPP
