#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "fosep/separation.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fosep;
using fosep::testing::dfa_from_regex;
using fosep::testing::loop_tail_dfa;
using fosep::testing::oracle_counter_free;
using fosep::testing::random_reachable_dfa;

namespace {

std::vector<std::vector<std::string>> family_witnesses(const SeparationAnalysis& an) {
  std::vector<std::vector<std::string>> out;
  for (const auto& set : an.family.maximal_nonsingleton_sets()) {
    std::vector<std::string> names;
    for (std::uint32_t e : set) names.push_back(an.semigroup.witness_text(e));
    std::sort(names.begin(), names.end());
    out.push_back(std::move(names));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("separation: subset family membership") {
  SubsetFamily family(5, {{0, 1}, {2, 3, 4}});
  CHECK(family.contains({}));
  CHECK(family.contains({3}));           // singletons are implicit members
  CHECK(family.contains({0, 1}));
  CHECK(family.contains({3, 2}));        // order and duplicates are immaterial
  CHECK(family.contains({2, 2, 4}));
  CHECK(family.contains_pair(4, 2));
  CHECK(!family.contains({0, 2}));
  CHECK(!family.contains_pair(1, 4));
  CHECK(!family.contains({0, 1, 2}));
  CHECK(!family.contains({7}));          // outside the ground set
}

TEST_CASE("separation: alternating-block languages are separable") {
  Alphabet ab = Alphabet::from_csv("a,b");
  Dfa l1 = dfa_from_regex("(abab)+", ab);
  Dfa l2 = dfa_from_regex("(baba)+", ab);
  SeparationAnalysis an = analyze_separability(l1, l2);
  CHECK(an.result.separable);
  CHECK(!an.result.violation.has_value());
  CHECK(an.result.semigroup_size == 9);
  CHECK(an.result.exponent == 2);
  CHECK(family_witnesses(an) == std::vector<std::vector<std::string>>{
                                    {"a", "aba"}, {"ab", "abab"}, {"b", "bab"}, {"ba", "baba"}});
  // symmetric call agrees
  CHECK(fo_separable(l2, l1).separable);
}

TEST_CASE("separation: loop-tail languages are not separable") {
  Dfa l1 = loop_tail_dfa(true);
  Dfa l2 = loop_tail_dfa(false);
  SeparationAnalysis an = analyze_separability(l1, l2);
  CHECK(!an.result.separable);
  CHECK(an.result.semigroup_size == 29);
  CHECK(an.result.exponent == 4);
  REQUIRE(an.result.violation.has_value());
  const SeparationViolation& v = *an.result.violation;
  // the violating behaviours really belong to the two languages
  CHECK(accepts(l1, v.left_witness));
  CHECK(accepts(l2, v.right_witness));
  // the family contains the inseparable pair {bba, bbab}
  CHECK(an.family.contains_pair(v.left_element, v.right_element));
  std::uint32_t bba = UINT32_MAX, bbab = UINT32_MAX;
  for (std::uint32_t e = 0; e < an.semigroup.size(); ++e) {
    if (an.semigroup.witness_text(e) == "bba") bba = e;
    if (an.semigroup.witness_text(e) == "bbab") bbab = e;
  }
  REQUIRE(bba != UINT32_MAX);
  REQUIRE(bbab != UINT32_MAX);
  CHECK(an.family.contains_pair(bba, bbab));
  // the fast path agrees with the full analysis
  CHECK(!fo_separable(l1, l2).separable);
  CHECK(!fo_separable(l2, l1).separable);
}

TEST_CASE("separation: verdict is symmetric") {
  std::mt19937 rng(1001);
  for (int i = 0; i < 120; ++i) {
    Dfa x = random_reachable_dfa(rng, 5, 2);
    Dfa y = random_reachable_dfa(rng, 5, 2);
    CHECK(fo_separable(x, y).separable == fo_separable(y, x).separable);
  }
}

TEST_CASE("separation: overlapping languages are never separable") {
  std::mt19937 rng(1002);
  std::vector<Word> words = fosep::testing::all_words(2, 6);
  int found = 0;
  for (int i = 0; found < 120 && i < 2000; ++i) {
    Dfa x = random_reachable_dfa(rng, 5, 2);
    Dfa y = random_reachable_dfa(rng, 5, 2);
    bool overlap = false;
    for (const Word& w : words) {
      if (!w.empty() && accepts(x, w) && accepts(y, w)) {
        overlap = true;
        break;
      }
    }
    if (!overlap) continue;
    ++found;
    SeparabilityResult r = fo_separable(x, y);
    CHECK(!r.separable);
    REQUIRE(r.violation.has_value());
    CHECK(accepts(x, r.violation->left_witness));
    CHECK(accepts(y, r.violation->right_witness));
  }
  CHECK(found >= 120);
}

TEST_CASE("separation: anything is separable from the empty language") {
  std::mt19937 rng(1003);
  Alphabet ab = Alphabet::from_csv("a,b");
  Dfa none = dfa_from_regex("a", ab);
  none.accepting.assign(none.accepting.size(), false);
  for (int i = 0; i < 120; ++i) {
    Dfa x = random_reachable_dfa(rng, 5, 2);
    CHECK(fo_separable(x, none).separable);
    CHECK(fo_separable(none, x).separable);
  }
}

TEST_CASE("separation: aperiodic inputs saturate to singletons only") {
  std::mt19937 rng(1004);
  int found = 0;
  for (int i = 0; found < 120 && i < 4000; ++i) {
    Dfa x = random_reachable_dfa(rng, 5, 2);
    Dfa y = random_reachable_dfa(rng, 5, 2);
    MarkedProduct mp = marked_product(x, y);
    if (!oracle_counter_free(mp.dfa)) continue;
    ++found;
    FiniteSemigroup sg =
        transition_semigroup_marked(mp.dfa, {mp.accepting_left, mp.accepting_right});
    SubsetFamily family = saturate(sg);
    CHECK(family.maximal_nonsingleton_sets().empty());
  }
  CHECK(found >= 120);
}

TEST_CASE("separation: definability of sample languages") {
  Alphabet ab = Alphabet::from_csv("a,b");
  Alphabet a1 = Alphabet::from_csv("a");
  CHECK(fo_definable(dfa_from_regex("(ab)+", ab)));
  CHECK(!fo_definable(dfa_from_regex("(aa)+", a1)));
  CHECK(fo_definable(dfa_from_regex("a(a|b)*b", ab)));
  CHECK(!fo_definable(dfa_from_regex("(aa)+|b", ab)));
}

TEST_CASE("separation: definability matches separability from the complement") {
  std::mt19937 rng(1005);
  for (int i = 0; i < 60; ++i) {
    Dfa x = random_reachable_dfa(rng, 4, 2);
    CHECK(fo_definable(x) == fo_separable(x, complement(x)).separable);
  }
}
