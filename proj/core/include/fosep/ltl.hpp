#ifndef FOSEP_LTL_HPP
#define FOSEP_LTL_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace fosep {

enum class LtlKind {
  kTrue,
  kVar,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kNext,        // X: successor position exists and satisfies the operand
  kEventually,  // F: some strictly later position satisfies the operand
  kGlobally,    // G: the operand holds here and at every later position
  kUntil,       // U: see until() below for the argument roles
};

// Immutable formula handle; nodes are shared and never mutated, so copies are
// cheap and formulas can be used as values.
class LtlFormula {
 public:
  struct Node;

  static LtlFormula top();
  static LtlFormula var(std::string name);
  static LtlFormula negation(LtlFormula operand);
  static LtlFormula conjunction(LtlFormula lhs, LtlFormula rhs);
  static LtlFormula disjunction(LtlFormula lhs, LtlFormula rhs);
  static LtlFormula implication(LtlFormula lhs, LtlFormula rhs);
  static LtlFormula equivalence(LtlFormula lhs, LtlFormula rhs);
  static LtlFormula next(LtlFormula operand);
  static LtlFormula eventually(LtlFormula operand);
  static LtlFormula always(LtlFormula operand);

  // `a U b` requires `a` at some strictly later position and `b` at every
  // position strictly in between.  NOTE the roles: the FIRST argument is the
  // eventuality, the SECOND the interim condition — the mirror image of the
  // other common until convention.  `a U b` here is NOT "a holds until b".
  static LtlFormula until(LtlFormula eventuality, LtlFormula interim);

  LtlKind kind() const;
  // Valid only for kVar.
  const std::string& var_name() const;
  std::size_t arity() const;
  LtlFormula child(std::size_t i) const;

  // Sorted, deduplicated variable names.
  std::vector<std::string> variables() const;

  std::string to_string() const;

  // Structural equality.
  friend bool operator==(const LtlFormula& lhs, const LtlFormula& rhs);

  const Node* node() const { return node_.get(); }

 private:
  explicit LtlFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

bool operator==(const LtlFormula& lhs, const LtlFormula& rhs);

// Concrete syntax: `true`, `false` (short for `!true`), identifiers, `!`,
// `&`, `|`, `->`, `<->`, prefix `X` / `F` / `G`, infix `U`, parentheses.
// Precedence, tightest first: unary, `U`, `&`, `|`, `->`, `<->`.
// `->` and `U` associate to the right, `&`, `|`, `<->` to the left.
// `X`, `F`, `G`, `U`, `true`, `false` are reserved and cannot name variables.
LtlFormula parse_ltl(std::string_view text);

// Inverse of parse_ltl up to structural equality: parse_ltl(print_ltl(f)) == f.
std::string print_ltl(const LtlFormula& formula);

}  // namespace fosep

#endif  // FOSEP_LTL_HPP
