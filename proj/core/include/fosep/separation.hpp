#ifndef FOSEP_SEPARATION_HPP
#define FOSEP_SEPARATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fosep/automaton_ops.hpp"
#include "fosep/semigroup.hpp"

namespace fosep {

// An antichain over semigroup-element sets, closed downward by convention:
// a set is a member iff it is contained in some maximal member.  Singletons
// are always members (every element is reached by some word), so only the
// maximal members with >= 2 elements are stored.
class SubsetFamily {
 public:
  SubsetFamily(std::uint32_t ground_size,
               std::vector<std::vector<std::uint32_t>> maximal_nonsingletons);

  std::uint32_t ground_size() const { return ground_size_; }

  // Each set sorted ascending; the list sorted lexicographically.
  const std::vector<std::vector<std::uint32_t>>& maximal_nonsingleton_sets() const {
    return sets_;
  }

  // Membership of an arbitrary element set (subset of some member).
  bool contains(const std::vector<std::uint32_t>& elements) const;
  bool contains_pair(std::uint32_t a, std::uint32_t b) const;

 private:
  std::uint32_t ground_size_;
  std::vector<std::vector<std::uint32_t>> sets_;
};

// Least family containing every singleton and closed under element-wise set
// products and T -> T^w ∪ T^{w+1} at the semigroup's idempotent power w,
// returned as its antichain of maximal sets.
SubsetFamily saturate(const FiniteSemigroup& semigroup);

struct SeparationViolation {
  std::uint32_t left_element;   // recognizes a word of the left language
  std::uint32_t right_element;  // recognizes a word of the right language
  Word left_witness;
  Word right_witness;
};

struct SeparabilityResult {
  bool separable = false;
  std::uint32_t product_states = 0;   // reachable pair-automaton size
  std::uint32_t semigroup_size = 0;   // elements of the product's semigroup
  std::uint64_t exponent = 0;         // its idempotent power
  std::optional<SeparationViolation> violation;  // set iff not separable
};

// Decides whether some language definable in first-order logic with the
// order relation alone contains L(left) and misses L(right).  The verdict
/// comes from saturating the product's marked transition semigroup: the
// languages are inseparable iff some family member meets both marks.
// This entry point stops at the first violation.
SeparabilityResult fo_separable(const Dfa& left, const Dfa& right,
                                const Limits& limits = {});

// As fo_separable, but always saturates to the full fixpoint and returns the
// marked semigroup (markings 0/1 = left/right) and family for inspection.
struct SeparationAnalysis {
  SeparabilityResult result;
  FiniteSemigroup semigroup;
  SubsetFamily family;
};
SeparationAnalysis analyze_separability(const Dfa& left, const Dfa& right,
                                        const Limits& limits = {});

/// First-order definability of the language itself: aperiodicity of the
// syntactic semigroup.
bool fo_definable(const Dfa& dfa);

}  // namespace fosep

#endif  // FOSEP_SEPARATION_HPP
