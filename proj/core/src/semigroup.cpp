#include "fosep/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "fosep/errors.hpp"

namespace fosep {

std::size_t FiniteSemigroup::FnHash::operator()(const std::vector<State>& f) const {
  std::size_t h = 1469598103934665603ull;  // FNV-1a
  for (State q : f) {
    h ^= q;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint32_t FiniteSemigroup::product(std::uint32_t lhs, std::uint32_t rhs) const {
  std::uint64_t key = (std::uint64_t{lhs} << 32) | rhs;
  auto cached = product_cache_.find(key);
  if (cached != product_cache_.end()) return cached->second;
  const std::vector<State>& f = fns_[lhs];
  const std::vector<State>& g = fns_[rhs];
  std::vector<State> composed(f.size());
  for (std::size_t q = 0; q < f.size(); ++q) composed[q] = g[f[q]];
  std::uint32_t id = fn_ids_.at(composed);
  product_cache_.emplace(key, id);
  return id;
}

std::uint32_t FiniteSemigroup::power(std::uint32_t element, std::uint64_t exponent) const {
  if (exponent == 0) throw InvalidInputError("semigroup powers start at exponent 1");
  std::uint32_t base = element;
  std::uint32_t acc = kNoParent;  // not-yet-set sentinel
  while (exponent) {
    if (exponent & 1) acc = (acc == kNoParent) ? base : product(acc, base);
    exponent >>= 1;
    if (exponent) base = product(base, base);
  }
  return acc;
}

Word FiniteSemigroup::witness(std::uint32_t element) const {
  Word reversed;
  std::uint32_t cur = element;
  while (true) {
    auto [parent, letter] = parents_[cur];
    reversed.push_back(letter);
    if (parent == kNoParent) break;
    cur = parent;
  }
  return Word(reversed.rbegin(), reversed.rend());
}

std::string FiniteSemigroup::witness_text(std::uint32_t element) const {
  Word w = witness(element);
  bool single_chars = true;
  for (Letter a = 0; a < alphabet_.size(); ++a) {
    single_chars = single_chars && alphabet_.name(a).size() == 1;
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !single_chars) out += ' ';
    out += alphabet_.name(w[i]);
  }
  return out;
}

FiniteSemigroup::PowerProfile FiniteSemigroup::power_profile(std::uint32_t element) const {
  std::unordered_map<std::uint32_t, std::uint32_t> first_seen;
  std::uint32_t cur = element;
  std::uint32_t step = 1;
  while (true) {
    auto [it, inserted] = first_seen.emplace(cur, step);
    if (!inserted) return {it->second, step - it->second};
    cur = product(cur, element);
    ++step;
  }
}

FiniteSemigroup transition_semigroup_marked(const Dfa& dfa,
                                            const std::vector<std::vector<State>>& accepting_sets,
                                            const Limits& limits) {
  FiniteSemigroup sg(dfa.alphabet);
  std::uint32_t width = dfa.alphabet.size();

  std::vector<std::vector<State>> generator(width);
  for (Letter a = 0; a < width; ++a) {
    generator[a].resize(dfa.num_states);
    for (State q = 0; q < dfa.num_states; ++q) generator[a][q] = dfa.step(q, a);
  }

  auto intern = [&](std::vector<State> fn, std::uint32_t parent, Letter letter) {
    auto [it, inserted] = sg.fn_ids_.emplace(std::move(fn), sg.size());
    if (inserted) {
      if (sg.fns_.size() >= limits.max_states) {
        throw ResourceLimitError("transition semigroup exceeded the element budget of " +
                                 std::to_string(limits.max_states));
      }
      sg.fns_.push_back(it->first);
      sg.parents_.emplace_back(parent, letter);
    }
    return it->second;
  };

  for (Letter a = 0; a < width; ++a) {
    sg.letter_elements_.push_back(intern(generator[a], FiniteSemigroup::kNoParent, a));
  }
  // Breadth-first right-multiplication by generators reaches every element
  // δ_w along the prefixes of w and yields shortlex witnesses.
  for (std::uint32_t u = 0; u < sg.size(); ++u) {
    for (Letter a = 0; a < width; ++a) {
      const std::vector<State>& fu = sg.fns_[u];
      std::vector<State> composed(fu.size());
      for (std::size_t q = 0; q < fu.size(); ++q) composed[q] = generator[a][fu[q]];
      intern(std::move(composed), u, a);
    }
  }

  for (const std::vector<State>& acc : accepting_sets) {
    std::vector<std::uint32_t> marking;
    for (std::uint32_t e = 0; e < sg.size(); ++e) {
      State image = sg.fns_[e][dfa.initial];
      if (std::binary_search(acc.begin(), acc.end(), image)) marking.push_back(e);
    }
    sg.markings_.push_back(std::move(marking));
  }
  return sg;
}

FiniteSemigroup transition_semigroup(const Dfa& dfa, const Limits& limits) {
  std::vector<State> accepting;
  for (State s = 0; s < dfa.num_states; ++s) {
    if (dfa.accepting[s]) accepting.push_back(s);
  }
  return transition_semigroup_marked(dfa, {accepting}, limits);
}

FiniteSemigroup syntactic_semigroup(const Dfa& dfa, const Limits& limits) {
  return transition_semigroup(minimize(dfa), limits);
}

std::uint64_t idempotent_power(const FiniteSemigroup& semigroup) {
  std::uint64_t max_index = 1;
  std::uint64_t lcm = 1;
  for (std::uint32_t e = 0; e < semigroup.size(); ++e) {
    FiniteSemigroup::PowerProfile p = semigroup.power_profile(e);
    max_index = std::max<std::uint64_t>(max_index, p.index);
    std::uint64_t g = std::gcd(lcm, std::uint64_t{p.period});
    std::uint64_t scaled = lcm / g;
    if (p.period != 0 && scaled > UINT64_MAX / p.period) {
      throw ResourceLimitError("idempotent power exceeds 64 bits");
    }
    lcm = scaled * p.period;
  }
  return lcm * ((max_index + lcm - 1) / lcm);
}

bool is_aperiodic(const FiniteSemigroup& semigroup) {
  for (std::uint32_t e = 0; e < semigroup.size(); ++e) {
    if (semigroup.power_profile(e).period != 1) return false;
  }
  return true;
}

bool is_counter_free(const Dfa& dfa) { return is_aperiodic(transition_semigroup(dfa)); }

}  // namespace fosep
