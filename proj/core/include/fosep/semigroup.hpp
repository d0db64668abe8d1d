#ifndef FOSEP_SEMIGROUP_HPP
#define FOSEP_SEMIGROUP_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "fosep/automaton.hpp"
#include "fosep/automaton_ops.hpp"

namespace fosep {

// The transition semigroup of a total DFA: the finitely many state-to-state
// functions induced by nonempty words, under composition.  Elements are dense
// ids; id order is breadth-first from the letter generators, so every element
// carries a shortest (shortlex) witness word.
//
// The multiplication follows word concatenation: product(u, v) is the element
// of "first u's word, then v's word", i.e. function composition applied left
// to right.
class FiniteSemigroup {
 public:
  std::uint32_t size() const { return static_cast<std::uint32_t>(fns_.size()); }

  std::uint32_t product(std::uint32_t lhs, std::uint32_t rhs) const;

  // lhs^exponent for exponent >= 1, by binary exponentiation.
  std::uint32_t power(std::uint32_t element, std::uint64_t exponent) const;

  // Image of a single letter under the recognizing morphism.
  std::uint32_t letter_element(Letter letter) const { return letter_elements_.at(letter); }

  // A shortest word mapping to the element (ties broken by letter order).
  Word witness(std::uint32_t element) const;
  // The witness rendered with the alphabet's letter names.
  std::string witness_text(std::uint32_t element) const;

  const Alphabet& alphabet() const { return alphabet_; }

  // The element's state-to-state function over the source DFA's states.
  const std::vector<State>& function(std::uint32_t element) const { return fns_[element]; }

  // Element sets recognizing the marked languages: marking(k) lists the
  // elements whose words belong to the k-th language, sorted by id.
  // transition_semigroup() installs one marking from the DFA's accepting set.
  std::size_t markings() const { return markings_.size(); }
  const std::vector<std::uint32_t>& marking(std::size_t k) const { return markings_.at(k); }

  // Least index/period of the cyclic subsemigroup generated by an element:
  // index i and period p are minimal with s^i = s^{i+p}.
  struct PowerProfile {
    std::uint32_t index;
    std::uint32_t period;
  };
  PowerProfile power_profile(std::uint32_t element) const;

 private:
  friend FiniteSemigroup transition_semigroup_marked(
      const Dfa& dfa, const std::vector<std::vector<State>>& accepting_sets,
      const Limits& limits);

  struct FnHash {
    std::size_t operator()(const std::vector<State>& f) const;
  };

  FiniteSemigroup(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  Alphabet alphabet_;
  std::vector<std::vector<State>> fns_;
  std::unordered_map<std::vector<State>, std::uint32_t, FnHash> fn_ids_;
  std::vector<std::uint32_t> letter_elements_;
  // parent element and last letter of the witness; parent == npos at letters
  static constexpr std::uint32_t kNoParent = static_cast<std::uint32_t>(-1);
  std::vector<std::pair<std::uint32_t, Letter>> parents_;
  std::vector<std::vector<std::uint32_t>> markings_;
  // products are composed on demand and memoized ((lhs << 32) | rhs)
  mutable std::unordered_map<std::uint64_t, std::uint32_t> product_cache_;
};

// Transition semigroup with one marking taken from the DFA's accepting set.
FiniteSemigroup transition_semigroup(const Dfa& dfa, const Limits& limits = {});

// Same construction, but the markings recognize the given accepting-state
// sets (each sorted) instead of the DFA's own accepting flags.
FiniteSemigroup transition_semigroup_marked(const Dfa& dfa,
                                            const std::vector<std::vector<State>>& accepting_sets,
                                            const Limits& limits = {});

// Transition semigroup of the canonical minimal DFA: the language's syntactic
// semigroup.
FiniteSemigroup syntactic_semigroup(const Dfa& dfa, const Limits& limits = {});

// Least exponent n >= 1 such that s^n is idempotent for every element s:
// the least common multiple of all periods, raised to the least multiple
// that dominates every index.
std::uint64_t idempotent_power(const FiniteSemigroup& semigroup);

// Every element's cyclic subsemigroup is eventually constant (period 1).
bool is_aperiodic(const FiniteSemigroup& semigroup);

}  // namespace fosep

#endif  // FOSEP_SEMIGROUP_HPP
