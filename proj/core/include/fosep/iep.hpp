#ifndef FOSEP_IEP_HPP
#define FOSEP_IEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fosep/automaton.hpp"
#include "fosep/automaton_ops.hpp"
#include "fosep/ltl.hpp"
#include "fosep/separation.hpp"

namespace fosep {

// Minimal deterministic recognizer of the formula's models restricted to the
// given variables: a word over the powerset alphabet of `keep` is accepted
// iff it extends to a model of the formula.
Dfa language_of(const LtlFormula& formula, const std::vector<std::string>& keep,
                const Limits& limits = {});

// Whether every model of `premise` over the union of both variable sets is a
// model of `conclusion`.
bool entails(const LtlFormula& premise, const LtlFormula& conclusion,
             const Limits& limits = {});

// Outcome of the interpolant-existence check for a premise/conclusion pair.
struct IepVerdict {
  bool exists = false;   // some first-order formula over the shared variables
                         // is implied by the premise and implies the conclusion
  bool entails = false;  // the premise implies the conclusion at all

  std::vector<std::string> shared_variables;  // sorted

  // Sizes of the minimal recognizers the check separates: the premise's
  // shared-variable language and the conclusion's negation's.
  std::uint32_t left_language_states = 0;
  std::uint32_t right_language_states = 0;

  // Separation diagnostics: the marked semigroup of the product of the two
  // recognizers and its idempotent power.
  std::uint32_t semigroup_size = 0;
  std::uint64_t exponent = 0;

  // When no interpolant exists despite entailment, a pair of inseparable
  // behaviours: witness words (over `shared_letters`) of the premise's
  // language and of the conclusion's negation's language that no first-order
  // separator can split.
  std::optional<SeparationViolation> violation;

  // Letter names of the shared-variable powerset alphabet, indexed by the
  // letters appearing in the violation's witness words.
  std::vector<std::string> shared_letters;
};

// Decides whether a first-order interpolant over the shared variables exists
// for the pair, via separability of the two projected languages.  Checks the
// soundness invariant "exists implies entails" on every call and throws if
// the two computations ever disagree.
IepVerdict interpolant_exists(const LtlFormula& premise, const LtlFormula& conclusion,
                              const Limits& limits = {});

}  // namespace fosep

#endif  // FOSEP_IEP_HPP
