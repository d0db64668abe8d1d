#include "fosep/ltl2nfa.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <unordered_map>
#include <utility>

#include "fosep/errors.hpp"

namespace fosep {

namespace {

// The translation works on a reduced connective set; everything else is
// rewritten into it up front:
//
//   a | b    ->  !(!a & !b)
//   a -> b   ->  !(a & !b)
//   a <-> b  ->  !(a & !b) & !(b & !a)
//   G a      ->  a & !F !a        (G holds now and at every later position)
//
// Nodes are hash-consed into a DAG so shared subformulas get one id and the
// per-atom truth tables stay small.
enum class CoreKind : std::uint8_t { kTrue, kVar, kNot, kAnd, kNext, kEventually, kUntil };

struct CoreNode {
  CoreKind kind;
  std::uint32_t var = 0;  // index into the formula's variable list (kVar)
  std::uint32_t a = 0;    // child ids (children always have smaller ids)
  std::uint32_t b = 0;
};

class CoreBuilder {
 public:
  explicit CoreBuilder(std::vector<std::string> variables)
      : variables_(std::move(variables)) {}

  std::uint32_t lower(const LtlFormula& f) {
    switch (f.kind()) {
      case LtlKind::kTrue:
        return intern({CoreKind::kTrue, 0, 0, 0});
      case LtlKind::kVar: {
        auto it = std::lower_bound(variables_.begin(), variables_.end(), f.var_name());
        return intern({CoreKind::kVar,
                       static_cast<std::uint32_t>(it - variables_.begin()), 0, 0});
      }
      case LtlKind::kNot:
        return negation(lower(f.child(0)));
      case LtlKind::kAnd:
        return conjunction(lower(f.child(0)), lower(f.child(1)));
      case LtlKind::kOr:
        return negation(conjunction(negation(lower(f.child(0))),
                                    negation(lower(f.child(1)))));
      case LtlKind::kImplies:
        return negation(conjunction(lower(f.child(0)), negation(lower(f.child(1)))));
      case LtlKind::kIff: {
        std::uint32_t a = lower(f.child(0));
        std::uint32_t b = lower(f.child(1));
        return conjunction(negation(conjunction(a, negation(b))),
                           negation(conjunction(b, negation(a))));
      }
      case LtlKind::kNext:
        return intern({CoreKind::kNext, 0, lower(f.child(0)), 0});
      case LtlKind::kEventually:
        return intern({CoreKind::kEventually, 0, lower(f.child(0)), 0});
      case LtlKind::kGlobally: {
        std::uint32_t a = lower(f.child(0));
        std::uint32_t ev = intern({CoreKind::kEventually, 0, negation(a), 0});
        return conjunction(a, negation(ev));
      }
      case LtlKind::kUntil:
        return intern({CoreKind::kUntil, 0, lower(f.child(0)), lower(f.child(1))});
    }
    throw InvalidInputError("unknown formula node");
  }

  const std::vector<CoreNode>& nodes() const { return nodes_; }
  const std::vector<std::string>& variables() const { return variables_; }

 private:
  std::uint32_t negation(std::uint32_t a) {
    if (nodes_[a].kind == CoreKind::kNot) return nodes_[a].a;  // !!x == x
    return intern({CoreKind::kNot, 0, a, 0});
  }

  std::uint32_t conjunction(std::uint32_t a, std::uint32_t b) {
    return intern({CoreKind::kAnd, 0, a, b});
  }

  std::uint32_t intern(CoreNode node) {
    std::array<std::uint32_t, 4> key{static_cast<std::uint32_t>(node.kind), node.var,
                                     node.a, node.b};
    auto [it, inserted] = ids_.try_emplace(key, static_cast<std::uint32_t>(nodes_.size()));
    if (inserted) nodes_.push_back(node);
    return it->second;
  }

  std::vector<std::string> variables_;
  std::vector<CoreNode> nodes_;
  std::map<std::array<std::uint32_t, 4>, std::uint32_t> ids_;
};

std::vector<std::string> sorted_union(std::vector<std::string> a,
                                      const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

Nfa ltl_to_nfa(const LtlFormula& formula, const std::vector<std::string>& universe,
               const Limits& limits) {
  std::vector<std::string> formula_vars = formula.variables();
  std::vector<std::string> all_vars = sorted_union(formula_vars, universe);
  Alphabet alphabet = Alphabet::powerset(all_vars);

  CoreBuilder builder(formula_vars);
  const std::uint32_t root = builder.lower(formula);
  const std::vector<CoreNode>& nodes = builder.nodes();

  // An atom assigns one bit to each variable and each temporal subformula;
  // it is a bitmask over these "elementary" positions.
  const std::uint32_t node_count = static_cast<std::uint32_t>(nodes.size());
  std::vector<std::uint32_t> elem(node_count, UINT32_MAX);
  std::uint32_t elem_count = 0;
  std::uint32_t var_mask = 0;
  std::vector<std::uint32_t> var_elem(formula_vars.size(), 0);
  for (std::uint32_t id = 0; id < node_count; ++id) {
    switch (nodes[id].kind) {
      case CoreKind::kVar:
        elem[id] = elem_count;
        var_elem[nodes[id].var] = elem_count;
        var_mask |= std::uint32_t{1} << elem_count;
        ++elem_count;
        break;
      case CoreKind::kNext:
      case CoreKind::kEventually:
      case CoreKind::kUntil:
        elem[id] = elem_count++;
        break;
      default:
        break;
    }
  }
  if (elem_count > 24 || (std::uint64_t{1} << elem_count) > limits.max_states) {
    throw ResourceLimitError("formula has too many elementary subformulas (" +
                             std::to_string(elem_count) + ")");
  }
  const std::uint32_t atom_count = std::uint32_t{1} << elem_count;
  const std::uint32_t temp_mask = (atom_count - 1) & ~var_mask;

  // For every atom B, the bits a predecessor atom A must carry are forced:
  //   A(X a)      = B |= a
  //   A(F a)      = B |= a  or  B(F a)
  //   A(U(ev,in)) = B |= ev or (B |= in and B(U))
  // so a transition A -> B exists iff required_prev(B) equals A's temporal
  // bits.  Atoms are bucketed by (variable bits | required_prev); successors
  // of A on a letter are one bucket lookup.
  std::vector<char> truth(node_count);
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> bucket;
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> start_bucket;
  for (std::uint32_t atom = 0; atom < atom_count; ++atom) {
    std::uint32_t required_prev = 0;
    for (std::uint32_t id = 0; id < node_count; ++id) {
      const CoreNode& n = nodes[id];
      char t = 0;
      switch (n.kind) {
        case CoreKind::kTrue:
          t = 1;
          break;
        case CoreKind::kVar:
        case CoreKind::kNext:
        case CoreKind::kEventually:
        case CoreKind::kUntil:
          t = (atom >> elem[id]) & 1;
          break;
        case CoreKind::kNot:
          t = !truth[n.a];
          break;
        case CoreKind::kAnd:
          t = truth[n.a] && truth[n.b];
          break;
      }
      truth[id] = t;
      switch (n.kind) {
        case CoreKind::kNext:
          if (truth[n.a]) required_prev |= std::uint32_t{1} << elem[id];
          break;
        case CoreKind::kEventually:
          if (truth[n.a] || t) required_prev |= std::uint32_t{1} << elem[id];
          break;
        case CoreKind::kUntil:
          if (truth[n.a] || (truth[n.b] && t)) required_prev |= std::uint32_t{1} << elem[id];
          break;
        default:
          break;
      }
    }
    bucket[(atom & var_mask) | required_prev].push_back(atom);
    if (truth[root]) start_bucket[atom & var_mask].push_back(atom);
  }

  // Letter -> the variable bits an atom must carry to be read under it.
  std::vector<std::uint32_t> letter_bits(alphabet.size(), 0);
  std::vector<std::uint32_t> formula_var_at;  // position in all_vars
  for (const std::string& v : formula_vars) {
    formula_var_at.push_back(static_cast<std::uint32_t>(
        std::lower_bound(all_vars.begin(), all_vars.end(), v) - all_vars.begin()));
  }
  for (Letter l = 0; l < alphabet.size(); ++l) {
    for (std::size_t k = 0; k < formula_vars.size(); ++k) {
      if ((l >> formula_var_at[k]) & 1) letter_bits[l] |= std::uint32_t{1} << var_elem[k];
    }
  }

  // Forward reachability from the start state.  State 0 is the start; each
  // discovered atom gets the next id.
  Nfa nfa{alphabet, 1, {0}, {}, {}};
  std::unordered_map<std::uint32_t, State> state_of;
  std::deque<std::uint32_t> work;
  std::vector<std::vector<State>> rows(alphabet.size());

  auto state_for = [&](std::uint32_t atom) -> State {
    auto [it, inserted] = state_of.try_emplace(atom, nfa.num_states);
    if (inserted) {
      if (nfa.num_states >= limits.max_states) {
        throw ResourceLimitError("automaton construction exceeded the state budget");
      }
      ++nfa.num_states;
      work.push_back(atom);
    }
    return it->second;
  };

  auto row_targets = [&](const std::unordered_map<std::uint32_t, std::vector<std::uint32_t>>&
                             buckets,
                         std::uint32_t key_base) {
    for (Letter l = 0; l < alphabet.size(); ++l) {
      rows[l].clear();
      auto it = buckets.find(key_base | letter_bits[l]);
      if (it != buckets.end()) {
        for (std::uint32_t atom : it->second) rows[l].push_back(state_for(atom));
        std::sort(rows[l].begin(), rows[l].end());
      }
      nfa.next.push_back(rows[l]);
    }
  };

  row_targets(start_bucket, 0);
  while (!work.empty()) {
    std::uint32_t atom = work.front();
    work.pop_front();
    row_targets(bucket, atom & temp_mask);
  }

  // Deterministic state numbering requires the rows in state order; they were
  // appended in discovery order, which is already state order.
  for (const auto& [atom, s] : state_of) {
    if ((atom & temp_mask) == 0) nfa.accepting.push_back(s);
  }
  std::sort(nfa.accepting.begin(), nfa.accepting.end());
  return nfa;
}

}  // namespace fosep
