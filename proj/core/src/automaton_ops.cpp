#include "fosep/automaton_ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "fosep/errors.hpp"

namespace fosep {

// ------------------------------------------------------------ regex_to_nfa

namespace {

// first/last hold position numbers (0-based); follow holds position pairs.
struct PositionSets {
  bool nullable = false;
  std::vector<std::uint32_t> first, last;
};

void merge_into(std::vector<std::uint32_t>& dst, const std::vector<std::uint32_t>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
  std::sort(dst.begin(), dst.end());
  dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
}

PositionSets position_sets(const Regex& r, std::vector<Letter>& position_letter,
                           const Alphabet& alphabet,
                           std::vector<std::pair<std::uint32_t, std::uint32_t>>& follow) {
  switch (r.kind()) {
    case RegexKind::kLetter: {
      std::optional<Letter> a = alphabet.index(r.letter_name());
      if (!a) {
        throw InvalidInputError("letter '" + r.letter_name() + "' is not in the alphabet");
      }
      auto p = static_cast<std::uint32_t>(position_letter.size());
      position_letter.push_back(*a);
      return {false, {p}, {p}};
    }
    case RegexKind::kConcat: {
      PositionSets acc = position_sets(r.child(0), position_letter, alphabet, follow);
      for (std::size_t i = 1; i < r.arity(); ++i) {
        PositionSets part = position_sets(r.child(i), position_letter, alphabet, follow);
        for (std::uint32_t x : acc.last) {
          for (std::uint32_t y : part.first) follow.emplace_back(x, y);
        }
        if (acc.nullable) merge_into(acc.first, part.first);
        if (part.nullable) {
          merge_into(acc.last, part.last);
        } else {
          acc.last = std::move(part.last);
        }
        acc.nullable = acc.nullable && part.nullable;
      }
      return acc;
    }
    case RegexKind::kUnion: {
      PositionSets acc = position_sets(r.child(0), position_letter, alphabet, follow);
      for (std::size_t i = 1; i < r.arity(); ++i) {
        PositionSets part = position_sets(r.child(i), position_letter, alphabet, follow);
        acc.nullable = acc.nullable || part.nullable;
        merge_into(acc.first, part.first);
        merge_into(acc.last, part.last);
      }
      return acc;
    }
    case RegexKind::kStar:
    case RegexKind::kPlus: {
      PositionSets acc = position_sets(r.child(0), position_letter, alphabet, follow);
      for (std::uint32_t x : acc.last) {
        for (std::uint32_t y : acc.first) follow.emplace_back(x, y);
      }
      if (r.kind() == RegexKind::kStar) acc.nullable = true;
      return acc;
    }
  }
  throw InvalidInputError("corrupt regex node");
}

}  // namespace

Nfa regex_to_nfa(const Regex& regex, const Alphabet& alphabet) {
  std::vector<Letter> position_letter;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> follow;
  PositionSets root = position_sets(regex, position_letter, alphabet, follow);

  // State 0 is the start; position p becomes state p+1.  The start state is
  // never accepting, which drops the empty word from nullable regexes.
  auto num_states = static_cast<std::uint32_t>(position_letter.size() + 1);
  Nfa nfa{alphabet, num_states, {0}, {}, {}};
  nfa.next.resize(std::size_t{num_states} * alphabet.size());
  for (std::uint32_t p : root.first) {
    nfa.next[position_letter[p]].push_back(p + 1);
  }
  for (auto [x, y] : follow) {
    nfa.next[std::size_t{x + 1} * alphabet.size() + position_letter[y]].push_back(y + 1);
  }
  for (std::vector<State>& targets : nfa.next) {
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  }
  for (std::uint32_t p : root.last) nfa.accepting.push_back(p + 1);
  std::sort(nfa.accepting.begin(), nfa.accepting.end());
  nfa.accepting.erase(std::unique(nfa.accepting.begin(), nfa.accepting.end()),
                      nfa.accepting.end());
  return nfa;
}

// ------------------------------------------------------------- determinize

Dfa determinize(const Nfa& nfa, const Limits& limits) {
  std::uint32_t width = nfa.alphabet.size();
  std::map<std::vector<State>, State> ids;
  std::vector<std::vector<State>> subsets;
  auto intern = [&](std::vector<State> subset) {
    auto [it, inserted] = ids.emplace(std::move(subset), static_cast<State>(subsets.size()));
    if (inserted) {
      if (subsets.size() >= limits.max_states) {
        throw ResourceLimitError("subset construction exceeded the state budget of " +
                                 std::to_string(limits.max_states));
      }
      subsets.push_back(it->first);
    }
    return it->second;
  };

  intern(nfa.initial);
  Dfa dfa{nfa.alphabet, 0, 0, {}, {}};
  for (State s = 0; s < subsets.size(); ++s) {
    std::vector<State> subset = subsets[s];  // copy: subsets grows below
    for (Letter a = 0; a < width; ++a) {
      std::vector<State> next;
      for (State q : subset) {
        const std::vector<State>& t = nfa.targets(q, a);
        next.insert(next.end(), t.begin(), t.end());
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      dfa.delta.push_back(intern(std::move(next)));
    }
  }
  dfa.num_states = static_cast<std::uint32_t>(subsets.size());
  dfa.accepting.assign(dfa.num_states, false);
  for (State s = 0; s < dfa.num_states; ++s) {
    const std::vector<State>& subset = subsets[s];
    dfa.accepting[s] = std::find_first_of(subset.begin(), subset.end(), nfa.accepting.begin(),
                                          nfa.accepting.end()) != subset.end();
  }
  return dfa;
}

// ---------------------------------------------------------------- minimize

namespace {

// Restrict to states reachable from the initial state, preserving order.
Dfa restrict_reachable(const Dfa& dfa) {
  std::uint32_t width = dfa.alphabet.size();
  std::vector<State> remap(dfa.num_states, static_cast<State>(-1));
  std::vector<State> order;
  remap[dfa.initial] = 0;
  order.push_back(dfa.initial);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Letter a = 0; a < width; ++a) {
      State t = dfa.step(order[i], a);
      if (remap[t] == static_cast<State>(-1)) {
        remap[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  Dfa out{dfa.alphabet, static_cast<std::uint32_t>(order.size()), 0, {}, {}};
  out.accepting.resize(out.num_states);
  out.delta.resize(std::size_t{out.num_states} * width);
  for (State s = 0; s < out.num_states; ++s) {
    out.accepting[s] = dfa.accepting[order[s]];
    for (Letter a = 0; a < width; ++a) {
      out.delta[std::size_t{s} * width + a] = remap[dfa.step(order[s], a)];
    }
  }
  return out;
}

// Moore partition refinement followed by breadth-first canonical renumbering.
Dfa classical_minimize(const Dfa& input) {
  Dfa dfa = restrict_reachable(input);
  std::uint32_t width = dfa.alphabet.size();

  std::vector<std::uint32_t> cls(dfa.num_states);
  for (State s = 0; s < dfa.num_states; ++s) cls[s] = dfa.accepting[s] ? 1 : 0;
  std::uint32_t num_classes = 2;
  while (true) {
    // Signature of a state: its class plus the classes of its successors.
    std::map<std::vector<std::uint32_t>, std::uint32_t> sig_ids;
    std::vector<std::uint32_t> next_cls(dfa.num_states);
    for (State s = 0; s < dfa.num_states; ++s) {
      std::vector<std::uint32_t> sig;
      sig.reserve(width + 1);
      sig.push_back(cls[s]);
      for (Letter a = 0; a < width; ++a) sig.push_back(cls[dfa.step(s, a)]);
      auto [it, inserted] =
          sig_ids.emplace(std::move(sig), static_cast<std::uint32_t>(sig_ids.size()));
      (void)inserted;
      next_cls[s] = it->second;
    }
    auto refined = static_cast<std::uint32_t>(sig_ids.size());
    cls.swap(next_cls);
    if (refined == num_classes) break;
    num_classes = refined;
  }

  // Quotient, then renumber classes in BFS discovery order by letter index.
  std::vector<State> cls_state(num_classes);
  for (State s = 0; s < dfa.num_states; ++s) cls_state[cls[s]] = s;  // any representative
  std::vector<State> bfs_id(num_classes, static_cast<State>(-1));
  std::vector<std::uint32_t> order;
  bfs_id[cls[dfa.initial]] = 0;
  order.push_back(cls[dfa.initial]);
  for (std::size_t i = 0; i < order.size(); ++i) {
    State rep = cls_state[order[i]];
    for (Letter a = 0; a < width; ++a) {
      std::uint32_t c = cls[dfa.step(rep, a)];
      if (bfs_id[c] == static_cast<State>(-1)) {
        bfs_id[c] = static_cast<State>(order.size());
        order.push_back(c);
      }
    }
  }

  Dfa out{dfa.alphabet, num_classes, 0, {}, {}};
  out.accepting.resize(num_classes);
  out.delta.resize(std::size_t{num_classes} * width);
  for (std::uint32_t c : order) {
    State rep = cls_state[c];
    State id = bfs_id[c];
    out.accepting[id] = dfa.accepting[rep];
    for (Letter a = 0; a < width; ++a) {
      out.delta[std::size_t{id} * width + a] = bfs_id[cls[dfa.step(rep, a)]];
    }
  }
  return out;
}

// Returns a language-preserving copy (over nonempty words) whose initial
// state's accepting flag equals `accept_empty`, adjusting the empty-word
// membership only.
Dfa with_empty_word_bit(const Dfa& dfa, bool accept_empty) {
  if (dfa.accepting[dfa.initial] == accept_empty) return dfa;
  std::uint32_t width = dfa.alphabet.size();
  bool has_incoming = false;
  for (State t : dfa.delta) {
    if (t == dfa.initial) {
      has_incoming = true;
      break;
    }
  }
  Dfa out = dfa;
  if (!has_incoming) {
    // Nothing reenters the initial state, so its flag only decides the empty
    // word, which never counts: flip it in place.
    out.accepting[dfa.initial] = accept_empty;
    return out;
  }
  // The initial state is revisited by nonempty words; give the start its own
  // copy so the flip cannot change their membership.
  State clone = out.num_states++;
  out.accepting.push_back(accept_empty);
  std::vector<State> row(width);
  for (Letter a = 0; a < width; ++a) row[a] = dfa.step(dfa.initial, a);
  out.delta.insert(out.delta.end(), row.begin(), row.end());
  out.initial = clone;
  return out;
}

}  // namespace

Dfa minimize(const Dfa& dfa) {
  Dfa without = classical_minimize(with_empty_word_bit(dfa, false));
  Dfa with = classical_minimize(with_empty_word_bit(dfa, true));
  return with.num_states < without.num_states ? with : without;
}

// -------------------------------------------------------------- complement

Dfa complement(const Dfa& dfa) {
  Dfa out = dfa;
  out.accepting.flip();
  return out;
}

// ----------------------------------------------------------------- product

namespace {

struct PairProduct {
  Dfa dfa;                                  // accepting flags left all-false
  std::vector<std::pair<State, State>> pairs;  // product state -> components
};

PairProduct pair_product(const Dfa& lhs, const Dfa& rhs, const Limits& limits) {
  if (!(lhs.alphabet == rhs.alphabet)) {
    throw InvalidInputError("product requires identical alphabets");
  }
  std::uint32_t width = lhs.alphabet.size();
  std::map<std::pair<State, State>, State> ids;
  PairProduct out{{lhs.alphabet, 0, 0, {}, {}}, {}};
  auto intern = [&](std::pair<State, State> p) {
    auto [it, inserted] = ids.emplace(p, static_cast<State>(out.pairs.size()));
    if (inserted) {
      if (out.pairs.size() >= limits.max_states) {
        throw ResourceLimitError("product exceeded the state budget of " +
                                 std::to_string(limits.max_states));
      }
      out.pairs.push_back(p);
    }
    return it->second;
  };
  intern({lhs.initial, rhs.initial});
  for (State s = 0; s < out.pairs.size(); ++s) {
    auto [p, q] = out.pairs[s];
    for (Letter a = 0; a < width; ++a) {
      out.dfa.delta.push_back(intern({lhs.step(p, a), rhs.step(q, a)}));
    }
  }
  out.dfa.num_states = static_cast<std::uint32_t>(out.pairs.size());
  out.dfa.accepting.assign(out.dfa.num_states, false);
  return out;
}

}  // namespace

Dfa product(const Dfa& lhs, const Dfa& rhs, ProductMode mode, const Limits& limits) {
  PairProduct pp = pair_product(lhs, rhs, limits);
  for (State s = 0; s < pp.dfa.num_states; ++s) {
    auto [p, q] = pp.pairs[s];
    bool in_l = lhs.accepting[p];
    bool in_r = rhs.accepting[q];
    switch (mode) {
      case ProductMode::kIntersection: pp.dfa.accepting[s] = in_l && in_r; break;
      case ProductMode::kUnion: pp.dfa.accepting[s] = in_l || in_r; break;
      case ProductMode::kDifference: pp.dfa.accepting[s] = in_l && !in_r; break;
    }
  }
  return std::move(pp.dfa);
}

MarkedProduct marked_product(const Dfa& lhs, const Dfa& rhs, const Limits& limits) {
  PairProduct pp = pair_product(lhs, rhs, limits);
  MarkedProduct out{std::move(pp.dfa), {}, {}};
  for (State s = 0; s < out.dfa.num_states; ++s) {
    auto [p, q] = pp.pairs[s];
    if (lhs.accepting[p]) out.accepting_left.push_back(s);
    if (rhs.accepting[q]) out.accepting_right.push_back(s);
  }
  return out;
}

// ----------------------------------------------------------------- project

Nfa project(const Nfa& nfa, const std::vector<std::string>& keep) {
  std::vector<std::string> kept = keep;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  Alphabet target = Alphabet::powerset(kept);

  // Input letter -> target letter (bitmask over `kept` after intersection).
  std::vector<Letter> mapped(nfa.alphabet.size());
  for (Letter a = 0; a < nfa.alphabet.size(); ++a) {
    auto members = Alphabet::parse_set_name(nfa.alphabet.name(a));
    if (!members) {
      throw InvalidInputError("projection requires variable-set letters; got '" +
                              nfa.alphabet.name(a) + "'");
    }
    std::uint32_t mask = 0;
    for (const std::string& v : *members) {
      auto it = std::lower_bound(kept.begin(), kept.end(), v);
      if (it != kept.end() && *it == v) {
        mask |= 1u << (it - kept.begin());
      }
    }
    mapped[a] = mask;
  }

  Nfa out{target, nfa.num_states, nfa.initial, nfa.accepting, {}};
  out.next.resize(std::size_t{nfa.num_states} * target.size());
  for (State s = 0; s < nfa.num_states; ++s) {
    for (Letter a = 0; a < nfa.alphabet.size(); ++a) {
      const std::vector<State>& targets = nfa.targets(s, a);
      std::vector<State>& cell = out.next[std::size_t{s} * target.size() + mapped[a]];
      cell.insert(cell.end(), targets.begin(), targets.end());
    }
  }
  for (std::vector<State>& cell : out.next) {
    std::sort(cell.begin(), cell.end());
    cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
  }
  return out;
}

}  // namespace fosep
