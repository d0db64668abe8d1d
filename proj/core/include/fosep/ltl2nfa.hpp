#ifndef FOSEP_LTL2NFA_HPP
#define FOSEP_LTL2NFA_HPP

#include <string>
#include <vector>

#include "fosep/automaton.hpp"
#include "fosep/automaton_ops.hpp"
#include "fosep/ltl.hpp"

namespace fosep {

// Translates a formula into a nondeterministic automaton over the powerset
// alphabet of its variable universe: a nonempty word is accepted iff reading
// letter i as the valuation of position i yields a model satisfying the
// formula at position 0.  The empty word is never accepted.
//
// The universe is the union of the formula's own variables and `universe`;
// passing extra variables enlarges the alphabet without constraining the
// added variables.  Letters are named as brace-wrapped sorted variable sets
// ("{}", "{p}", "{p,q}", ...).
//
// States are a start state plus one state per reachable atom, where an atom
// assigns a truth bit to each variable and each temporal subformula.  The
// construction enumerates every atom up front, so it is exponential in the
// number of those subformulas; `limits.max_states` bounds the enumeration.
Nfa ltl_to_nfa(const LtlFormula& formula, const std::vector<std::string>& universe = {},
               const Limits& limits = {});

}  // namespace fosep

#endif  // FOSEP_LTL2NFA_HPP
