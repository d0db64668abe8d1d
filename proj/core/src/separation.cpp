#include "fosep/separation.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <utility>

#include "fosep/errors.hpp"

namespace fosep {

namespace {

// Fixed-capacity bitset over semigroup element ids.
struct Bits {
  std::vector<std::uint64_t> words;

  explicit Bits(std::uint32_t capacity) : words((capacity + 63) / 64, 0) {}

  void set(std::uint32_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }

  bool subset_of(const Bits& other) const {
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (words[k] & ~other.words[k]) return false;
    }
    return true;
  }

  bool intersects(const Bits& other) const {
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (words[k] & other.words[k]) return true;
    }
    return false;
  }

  std::uint32_t first_common(const Bits& other) const {
    for (std::size_t k = 0; k < words.size(); ++k) {
      std::uint64_t w = words[k] & other.words[k];
      if (w) return static_cast<std::uint32_t>(k * 64 + std::countr_zero(w));
    }
    return static_cast<std::uint32_t>(-1);
  }

  std::uint32_t popcount() const {
    std::uint32_t n = 0;
    for (std::uint64_t w : words) n += static_cast<std::uint32_t>(std::popcount(w));
    return n;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words.size(); ++k) {
      std::uint64_t w = words[k];
      while (w) {
        fn(static_cast<std::uint32_t>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }
};

// Worklist closure over the antichain of maximal sets.  Singletons are
// implicit members throughout; products against them are taken per element.
// Dropping a dominated set is sound because products and the power step are
// monotone in set inclusion, so the dominator's consequences cover it.
class Saturator {
 public:
  Saturator(const FiniteSemigroup& sg, std::uint64_t exponent)
      : sg_(sg), exponent_(exponent), n_(sg.size()) {}

  // With `stop` set, aborts as soon as a newly derived set meets both marks,
  // reporting one element per mark; otherwise runs to the fixpoint.
  struct Stop {
    const Bits* left_mark;
    const Bits* right_mark;
  };
  std::optional<std::pair<std::uint32_t, std::uint32_t>> run(const Stop* stop) {
    for (std::uint32_t e = 0; e < n_; ++e) {
      if (auto hit = insert(c3_of_element(e), stop)) return hit;
    }
    while (!work_.empty()) {
      std::uint32_t idx = work_.front();
      work_.pop_front();
      if (!alive_[idx]) continue;
      if (auto hit = insert(c3(sets_[idx]), stop)) return hit;
      if (!alive_[idx]) continue;
      for (std::uint32_t e = 0; e < n_ && alive_[idx]; ++e) {
        if (auto hit = insert(mul_right(sets_[idx], e), stop)) return hit;
        if (!alive_[idx]) break;
        if (auto hit = insert(mul_left(e, sets_[idx]), stop)) return hit;
      }
      // `sets_` grows while iterating, so sets born during this pass are
      // paired with idx here as well as when they are popped later.
      for (std::uint32_t other = 0; other < sets_.size() && alive_[idx]; ++other) {
        if (!alive_[other]) continue;
        if (auto hit = insert(mul(sets_[idx], sets_[other]), stop)) return hit;
        if (!alive_[idx] || !alive_[other] || other == idx) continue;
        if (auto hit = insert(mul(sets_[other], sets_[idx]), stop)) return hit;
      }
    }
    return std::nullopt;
  }

  std::vector<std::vector<std::uint32_t>> maximal_nonsingletons() const {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (!alive_[i]) continue;
      std::vector<std::uint32_t> ids;
      sets_[i].for_each([&ids](std::uint32_t e) { ids.push_back(e); });
      out.push_back(std::move(ids));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  Bits mul(const Bits& lhs, const Bits& rhs) const {
    Bits out(n_);
    lhs.for_each([&](std::uint32_t i) {
      rhs.for_each([&](std::uint32_t j) { out.set(sg_.product(i, j)); });
    });
    return out;
  }
  Bits mul_right(const Bits& lhs, std::uint32_t e) const {
    Bits out(n_);
    lhs.for_each([&](std::uint32_t i) { out.set(sg_.product(i, e)); });
    return out;
  }
  Bits mul_left(std::uint32_t e, const Bits& rhs) const {
    Bits out(n_);
    rhs.for_each([&](std::uint32_t j) { out.set(sg_.product(e, j)); });
    return out;
  }

  Bits pow(const Bits& base_in, std::uint64_t exponent) const {
    Bits base = base_in;
    std::optional<Bits> acc;
    while (exponent) {
      if (exponent & 1) acc = acc ? mul(*acc, base) : base;
      exponent >>= 1;
      if (exponent) base = mul(base, base);
    }
    return *acc;
  }

  // T^w ∪ T^{w+1} at the semigroup's idempotent power w.
  Bits c3(const Bits& t) const {
    Bits p = pow(t, exponent_);
    Bits next = mul(p, t);
    for (std::size_t k = 0; k < p.words.size(); ++k) p.words[k] |= next.words[k];
    return p;
  }

  Bits c3_of_element(std::uint32_t e) const {
    Bits out(n_);
    out.set(sg_.power(e, exponent_));
    out.set(sg_.power(e, exponent_ + 1));
    return out;
  }

  std::optional<std::pair<std::uint32_t, std::uint32_t>> insert(Bits candidate,
                                                                const Stop* stop) {
    if (candidate.popcount() <= 1) return std::nullopt;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (alive_[i] && candidate.subset_of(sets_[i])) return std::nullopt;
    }
    if (stop && candidate.intersects(*stop->left_mark) &&
        candidate.intersects(*stop->right_mark)) {
      return std::make_pair(candidate.first_common(*stop->left_mark),
                            candidate.first_common(*stop->right_mark));
    }
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (alive_[i] && sets_[i].subset_of(candidate)) alive_[i] = false;
    }
    sets_.push_back(std::move(candidate));
    alive_.push_back(true);
    work_.push_back(static_cast<std::uint32_t>(sets_.size() - 1));
    return std::nullopt;
  }

  const FiniteSemigroup& sg_;
  std::uint64_t exponent_;
  std::uint32_t n_;
  std::vector<Bits> sets_;
  std::vector<char> alive_;
  std::deque<std::uint32_t> work_;
};

Bits marking_bits(const FiniteSemigroup& sg, std::size_t which) {
  Bits out(sg.size());
  for (std::uint32_t e : sg.marking(which)) out.set(e);
  return out;
}

}  // namespace

SubsetFamily::SubsetFamily(std::uint32_t ground_size,
                           std::vector<std::vector<std::uint32_t>> maximal_nonsingletons)
    : ground_size_(ground_size), sets_(std::move(maximal_nonsingletons)) {
  for (std::vector<std::uint32_t>& s : sets_) std::sort(s.begin(), s.end());
  std::sort(sets_.begin(), sets_.end());
}

bool SubsetFamily::contains(const std::vector<std::uint32_t>& elements) const {
  for (std::uint32_t e : elements) {
    if (e >= ground_size_) return false;
  }
  std::vector<std::uint32_t> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() <= 1) return true;  // singletons are always members
  for (const std::vector<std::uint32_t>& m : sets_) {
    if (std::includes(m.begin(), m.end(), sorted.begin(), sorted.end())) return true;
  }
  return false;
}

bool SubsetFamily::contains_pair(std::uint32_t a, std::uint32_t b) const {
  return contains({a, b});
}

SubsetFamily saturate(const FiniteSemigroup& semigroup) {
  Saturator sat(semigroup, idempotent_power(semigroup));
  sat.run(nullptr);
  return SubsetFamily(semigroup.size(), sat.maximal_nonsingletons());
}

namespace {

struct SeparationOutcome {
  SeparabilityResult result;
  FiniteSemigroup semigroup;
  std::optional<SubsetFamily> family;
};

SeparationOutcome run_separation(const Dfa& left, const Dfa& right, const Limits& limits,
                                 bool want_family) {
  MarkedProduct mp = marked_product(left, right, limits);
  FiniteSemigroup sg = transition_semigroup_marked(
      mp.dfa, {mp.accepting_left, mp.accepting_right}, limits);

  SeparabilityResult result;
  result.product_states = mp.dfa.num_states;
  result.semigroup_size = sg.size();
  result.exponent = idempotent_power(sg);

  Bits left_mark = marking_bits(sg, 0);
  Bits right_mark = marking_bits(sg, 1);

  std::optional<std::pair<std::uint32_t, std::uint32_t>> hit;
  std::optional<SubsetFamily> family;

  if (want_family) {
    Saturator sat(sg, result.exponent);
    sat.run(nullptr);
    family = SubsetFamily(sg.size(), sat.maximal_nonsingletons());
    for (std::uint32_t l : sg.marking(0)) {
      if (hit) break;
      for (std::uint32_t r : sg.marking(1)) {
        if (family->contains_pair(l, r)) {
          hit = std::make_pair(l, r);
          break;
        }
      }
    }
  } else if (left_mark.intersects(right_mark)) {
    // A word in both languages is a one-element violation, since singleton
    // sets are always family members.
    std::uint32_t e = left_mark.first_common(right_mark);
    hit = std::make_pair(e, e);
  } else if (!sg.marking(0).empty() && !sg.marking(1).empty()) {
    Saturator sat(sg, result.exponent);
    Saturator::Stop stop{&left_mark, &right_mark};
    hit = sat.run(&stop);
  }
  // An empty mark means one language is empty; nothing can violate then.

  result.separable = !hit;
  if (hit) {
    result.violation = SeparationViolation{hit->first, hit->second, sg.witness(hit->first),
                                           sg.witness(hit->second)};
  }
  return SeparationOutcome{std::move(result), std::move(sg), std::move(family)};
}

}  // namespace

SeparabilityResult fo_separable(const Dfa& left, const Dfa& right, const Limits& limits) {
  return run_separation(left, right, limits, /*want_family=*/false).result;
}

SeparationAnalysis analyze_separability(const Dfa& left, const Dfa& right,
                                        const Limits& limits) {
  SeparationOutcome outcome = run_separation(left, right, limits, /*want_family=*/true);
  return SeparationAnalysis{std::move(outcome.result), std::move(outcome.semigroup),
                            std::move(*outcome.family)};
}

bool fo_definable(const Dfa& dfa) { return is_aperiodic(syntactic_semigroup(dfa)); }

}  // namespace fosep
