#include "fosep/iep.hpp"

#include <algorithm>

#include "fosep/errors.hpp"
#include "fosep/ltl2nfa.hpp"

namespace fosep {

namespace {

std::vector<std::string> shared_variables(const LtlFormula& premise,
                                          const LtlFormula& conclusion) {
  std::vector<std::string> a = premise.variables();
  std::vector<std::string> b = conclusion.variables();
  std::vector<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Dfa language_of(const LtlFormula& formula, const std::vector<std::string>& keep,
                const Limits& limits) {
  // Build over the formula's variables plus the kept ones, then discard the
  // rest by projection before determinizing.
  std::vector<std::string> universe = keep;
  Nfa nfa = ltl_to_nfa(formula, universe, limits);
  return minimize(determinize(project(nfa, keep), limits));
}

bool entails(const LtlFormula& premise, const LtlFormula& conclusion,
             const Limits& limits) {
  std::vector<std::string> universe = premise.variables();
  for (const std::string& v : conclusion.variables()) universe.push_back(v);
  Dfa left = determinize(ltl_to_nfa(premise, universe, limits), limits);
  Dfa right = determinize(ltl_to_nfa(conclusion, universe, limits), limits);
  return is_empty(product(left, right, ProductMode::kDifference, limits));
}

IepVerdict interpolant_exists(const LtlFormula& premise, const LtlFormula& conclusion,
                              const Limits& limits) {
  IepVerdict verdict;
  verdict.shared_variables = shared_variables(premise, conclusion);

  // Projection is existential, so it does not commute with negation: the
  // conclusion must be negated as a formula before its language is projected.
  Dfa left = language_of(premise, verdict.shared_variables, limits);
  Dfa right =
      language_of(LtlFormula::negation(conclusion), verdict.shared_variables, limits);
  verdict.left_language_states = left.num_states;
  verdict.right_language_states = right.num_states;
  verdict.shared_letters = left.alphabet.names();

  // An interpolant is exactly a first-order separator of the two projected
  // languages: it must cover every shared-variable behaviour the premise
  // allows while excluding every behaviour compatible with the conclusion
  // failing.
  SeparabilityResult sep = fo_separable(left, right, limits);
  verdict.exists = sep.separable;
  verdict.semigroup_size = sep.semigroup_size;
  verdict.exponent = sep.exponent;
  verdict.violation = sep.violation;

  verdict.entails = entails(premise, conclusion, limits);
  if (verdict.exists && !verdict.entails) {
    throw Error(
        "internal invariant violated: an interpolant was found for a pair "
        "whose premise does not entail its conclusion");
  }
  return verdict;
}

}  // namespace fosep
