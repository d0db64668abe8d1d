#include "fosep/automaton.hpp"

#include <algorithm>
#include <deque>

#include "fosep/errors.hpp"

namespace fosep {

namespace {

void check_sorted_states(const std::vector<State>& v, std::uint32_t n, const char* what) {
  if (!std::is_sorted(v.begin(), v.end()) ||
      std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw InvalidInputError(std::string(what) + " list must be sorted and duplicate-free");
  }
  if (!v.empty() && v.back() >= n) {
    throw InvalidInputError(std::string(what) + " state out of range");
  }
}

}  // namespace

void validate(const Nfa& nfa) {
  check_sorted_states(nfa.initial, nfa.num_states, "initial");
  check_sorted_states(nfa.accepting, nfa.num_states, "accepting");
  if (nfa.next.size() != std::size_t{nfa.num_states} * nfa.alphabet.size()) {
    throw InvalidInputError("transition table size mismatch");
  }
  for (const std::vector<State>& targets : nfa.next) {
    check_sorted_states(targets, nfa.num_states, "transition target");
  }
}

void validate(const Dfa& dfa) {
  if (dfa.num_states == 0) throw InvalidInputError("a DFA needs at least one state");
  if (dfa.initial >= dfa.num_states) throw InvalidInputError("initial state out of range");
  if (dfa.accepting.size() != dfa.num_states) {
    throw InvalidInputError("accepting flags size mismatch");
  }
  if (dfa.delta.size() != std::size_t{dfa.num_states} * dfa.alphabet.size()) {
    throw InvalidInputError("transition table size mismatch");
  }
  for (State t : dfa.delta) {
    if (t >= dfa.num_states) throw InvalidInputError("transition target out of range");
  }
}

Nfa to_nfa(const Dfa& dfa) {
  Nfa out{dfa.alphabet, dfa.num_states, {dfa.initial}, {}, {}};
  for (State s = 0; s < dfa.num_states; ++s) {
    if (dfa.accepting[s]) out.accepting.push_back(s);
  }
  out.next.resize(dfa.delta.size());
  for (std::size_t i = 0; i < dfa.delta.size(); ++i) out.next[i] = {dfa.delta[i]};
  return out;
}

bool accepts(const Dfa& dfa, const Word& word) {
  if (word.empty()) return false;
  State q = dfa.initial;
  for (Letter a : word) q = dfa.step(q, a);
  return dfa.accepting[q];
}

bool accepts(const Nfa& nfa, const Word& word) {
  if (word.empty()) return false;
  std::vector<char> cur(nfa.num_states, 0), nxt;
  for (State s : nfa.initial) cur[s] = 1;
  for (Letter a : word) {
    nxt.assign(nfa.num_states, 0);
    for (State s = 0; s < nfa.num_states; ++s) {
      if (!cur[s]) continue;
      for (State t : nfa.targets(s, a)) nxt[t] = 1;
    }
    cur.swap(nxt);
  }
  for (State s : nfa.accepting) {
    if (cur[s]) return true;
  }
  return false;
}

namespace {

// Reachability from `seeds` (distance >= 0); returns a membership bitmap.
std::vector<char> forward_closure(const Nfa& nfa, const std::vector<State>& seeds) {
  std::vector<char> seen(nfa.num_states, 0);
  std::deque<State> queue;
  for (State s : seeds) {
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < nfa.alphabet.size(); ++a) {
      for (State t : nfa.targets(s, a)) {
        if (!seen[t]) {
          seen[t] = 1;
          queue.push_back(t);
        }
      }
    }
  }
  return seen;
}

bool nonempty_word_reaches_accepting(const Nfa& nfa) {
  // Seed with every state reachable in exactly one step, then close forward;
  // this realizes the "length >= 1" side condition.
  std::vector<State> one_step;
  for (State s : nfa.initial) {
    for (Letter a = 0; a < nfa.alphabet.size(); ++a) {
      for (State t : nfa.targets(s, a)) one_step.push_back(t);
    }
  }
  std::sort(one_step.begin(), one_step.end());
  one_step.erase(std::unique(one_step.begin(), one_step.end()), one_step.end());
  std::vector<char> seen = forward_closure(nfa, one_step);
  for (State s : nfa.accepting) {
    if (seen[s]) return true;
  }
  return false;
}

}  // namespace

bool is_empty(const Nfa& nfa) { return !nonempty_word_reaches_accepting(nfa); }

bool is_empty(const Dfa& dfa) { return is_empty(to_nfa(dfa)); }

}  // namespace fosep
