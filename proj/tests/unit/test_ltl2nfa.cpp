#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "fosep/automaton_ops.hpp"
#include "fosep/errors.hpp"
#include "fosep/ltl2nfa.hpp"
#include "fosep/model.hpp"
#include "oracles.hpp"

using namespace fosep;
using fosep::testing::all_words;
using fosep::testing::ltl_truth;
using fosep::testing::word_positions;

namespace {

// Does the automaton's language match truth-at-the-first-position for every
// word up to the given length?
void check_language(const LtlFormula& f, const std::vector<std::string>& universe,
                    std::size_t max_len) {
  Nfa n = ltl_to_nfa(f, universe);
  std::string text = print_ltl(f);
  CAPTURE(text);
  for (const Word& w : all_words(n.alphabet.size(), max_len)) {
    bool expect = !w.empty() && ltl_truth(f, word_positions(n.alphabet, w), 0);
    if (accepts(n, w) != expect) {
      std::string wtext;
      for (Letter l : w) wtext += n.alphabet.name(l);
      CAPTURE(wtext);
      REQUIRE(accepts(n, w) == expect);
    }
  }
}

}  // namespace

TEST_CASE("tableau: alphabet is the powerset of the variable universe") {
  LtlFormula f = parse_ltl("p");
  CHECK(ltl_to_nfa(f).alphabet.names() == std::vector<std::string>{"{}", "{p}"});
  Nfa wide = ltl_to_nfa(f, {"q", "r"});
  CHECK(wide.alphabet.size() == 8);
  CHECK(wide.alphabet.name(0) == "{}");
  CHECK(wide.alphabet.name(7) == "{p,q,r}");
  // the formula's own variables are always included
  CHECK(ltl_to_nfa(f, {"q"}).alphabet.names() ==
        std::vector<std::string>{"{}", "{p}", "{q}", "{p,q}"});
}

TEST_CASE("tableau: core connectives over one variable") {
  check_language(parse_ltl("p"), {}, 5);
  check_language(parse_ltl("!p"), {}, 5);
  check_language(parse_ltl("true"), {}, 5);
  check_language(parse_ltl("false"), {}, 5);
  check_language(parse_ltl("X p"), {}, 5);
  check_language(parse_ltl("F p"), {}, 5);
  check_language(parse_ltl("G p"), {}, 5);
  check_language(parse_ltl("X X p"), {}, 6);
  check_language(parse_ltl("F G p"), {}, 6);
  check_language(parse_ltl("G F p"), {}, 6);
}

TEST_CASE("tableau: two-variable formulas, including until") {
  check_language(parse_ltl("p U q"), {}, 4);
  check_language(parse_ltl("q U p"), {}, 4);
  check_language(parse_ltl("p & F q"), {}, 4);
  check_language(parse_ltl("p | X q"), {}, 4);
  check_language(parse_ltl("p -> q"), {}, 4);
  check_language(parse_ltl("p <-> X q"), {}, 4);
  check_language(parse_ltl("G(p -> F q)"), {}, 4);
  check_language(parse_ltl("(p U q) U p"), {}, 4);
}

TEST_CASE("tableau: universe extension leaves added variables unconstrained") {
  LtlFormula f = parse_ltl("F p");
  Nfa narrow = ltl_to_nfa(f);
  Nfa wide = ltl_to_nfa(f, {"q"});
  // words agreeing on p are classified identically
  for (const Word& w : all_words(4, 4)) {
    if (w.empty()) continue;
    Word projected;
    for (Letter l : w) projected.push_back(l & 1);  // bit 0 is p
    CHECK(accepts(wide, w) == accepts(narrow, projected));
  }
}

TEST_CASE("tableau: random formulas agree with direct evaluation") {
  std::mt19937 rng(618033);
  std::vector<std::string> vars{"p", "q"};
  Alphabet letters = Alphabet::powerset(vars);
  std::vector<Word> words = all_words(letters.size(), 4);
  for (int i = 0; i < 150; ++i) {
    LtlFormula f = fosep::testing::random_formula(rng, 3, vars);
    Nfa n = ltl_to_nfa(f, vars);
    std::string text = print_ltl(f);
    CAPTURE(text);
    for (const Word& w : words) {
      bool expect = !w.empty() && ltl_truth(f, word_positions(letters, w), 0);
      if (accepts(n, w) != expect) {
        std::string wtext;
        for (Letter l : w) wtext += letters.name(l);
        CAPTURE(wtext);
        REQUIRE(accepts(n, w) == expect);
      }
    }
  }
}

TEST_CASE("tableau: the state budget caps atom enumeration") {
  Limits tight;
  tight.max_states = 8;
  // four temporal subformulas plus two variables exceed 8 atoms
  CHECK_THROWS_AS(ltl_to_nfa(parse_ltl("F p & F q & X p & X q"), {}, tight),
                  ResourceLimitError);
}
