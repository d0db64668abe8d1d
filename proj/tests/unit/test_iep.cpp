#include <doctest.h>

#include <array>
#include <random>
#include <string>
#include <vector>

#include "fosep/iep.hpp"
#include "fosep/model.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fosep;
using fosep::testing::dfa_from_regex;

TEST_CASE("iep: a formula interpolates itself") {
  IepVerdict v = interpolant_exists(parse_ltl("p"), parse_ltl("p"));
  CHECK(v.exists);
  CHECK(v.entails);
  CHECK(v.shared_variables == std::vector<std::string>{"p"});
  IepVerdict v2 = interpolant_exists(parse_ltl("p & F p"), parse_ltl("p & F p"));
  CHECK(v2.exists);
  CHECK(v2.entails);
}

TEST_CASE("iep: interpolant through a shared eventuality") {
  IepVerdict v = interpolant_exists(parse_ltl("p & F q"), parse_ltl("F q | r"));
  CHECK(v.entails);
  CHECK(v.exists);
  CHECK(v.shared_variables == std::vector<std::string>{"q"});
  CHECK(!v.violation.has_value());
}

TEST_CASE("iep: non-entailment never has an interpolant") {
  // F p does not entail p: consider p false now, true at the next position
  LtlFormula phi = parse_ltl("F p");
  LtlFormula psi = parse_ltl("p");
  TemporalModel counter({"p"}, parse_word_literal("{};{p}"));
  CHECK(evaluate(phi, counter));
  CHECK(!evaluate(psi, counter));
  IepVerdict v = interpolant_exists(phi, psi);
  CHECK(!v.entails);
  CHECK(!v.exists);
}

TEST_CASE("iep: projected premise language keeps only shared letters") {
  Dfa lang = language_of(parse_ltl("p & F q"), {"q"});
  Alphabet q = Alphabet::powerset({"q"});
  REQUIRE(lang.alphabet == q);
  CHECK(lang.num_states == 3);
  // q must appear at some position after the first
  auto w = [&](const std::string& text) {
    Word out;
    for (char c : text) out.push_back(c == 'q');
    return out;
  };
  CHECK(accepts(lang, w(".q")));
  CHECK(accepts(lang, w("..q")));
  CHECK(accepts(lang, w(".qq.")));
  CHECK(accepts(lang, w("qq")));
  CHECK(!accepts(lang, w("q")));    // only at the first position
  CHECK(!accepts(lang, w("..")));   // never
  CHECK(!accepts(lang, w("")));
}

TEST_CASE("iep: projecting away every variable leaves word lengths") {
  // models of this formula are exactly the even-length words
  LtlFormula phi = parse_ltl("p & G((p & X true) <-> X !p) & F(!p & !X true)");
  Dfa lang = language_of(phi, {});
  REQUIRE(lang.num_states == 2);
  CHECK(lang.initial == 0);
  CHECK(lang.accepting == std::vector<bool>{true, false});
  CHECK(lang.delta == std::vector<State>{1, 0});
  CHECK(accepts(lang, {0, 0}));
  CHECK(!accepts(lang, {0}));
  CHECK(!accepts(lang, {}));
}

TEST_CASE("iep: parity blocks the interpolant despite entailment") {
  LtlFormula phi = parse_ltl("p & G((p & X true) <-> X !p) & F(!p & !X true)");
  LtlFormula psi = parse_ltl("q & G((q & X true) <-> X !q) -> F(!q & !X true)");
  IepVerdict v = interpolant_exists(phi, psi);
  CHECK(v.entails);
  CHECK(!v.exists);
  CHECK(v.shared_variables.empty());
  CHECK(v.left_language_states == 2);
  CHECK(v.right_language_states == 2);
  REQUIRE(v.violation.has_value());
  // the violating witnesses are an even-length and an odd-length word
  CHECK(v.violation->left_witness.size() % 2 == 0);
  CHECK(v.violation->right_witness.size() % 2 == 1);
}

TEST_CASE("iep: entailment is decided over the union vocabulary") {
  CHECK(entails(parse_ltl("p & q"), parse_ltl("p")));
  CHECK(!entails(parse_ltl("p"), parse_ltl("p & q")));
  CHECK(entails(parse_ltl("p"), parse_ltl("q -> p")));
  CHECK(entails(parse_ltl("F(p & q)"), parse_ltl("F p & F q")));
  CHECK(!entails(parse_ltl("F p & F q"), parse_ltl("F(p & q)")));
}

TEST_CASE("iep: contained vocabulary plus entailment forces an interpolant") {
  // vars(premise) inside vars(conclusion): the premise's own language is the
  // interpolant, so the verdict must be positive whenever entailment holds
  std::vector<std::pair<const char*, const char*>> pairs{
      {"p", "p | q"},
      {"F p", "F p | G q"},
      {"X p", "q | X p"},
      {"G p", "q U p | G p"},
  };
  for (auto [l, r] : pairs) {
    CAPTURE(l);
    CAPTURE(r);
    IepVerdict v = interpolant_exists(parse_ltl(l), parse_ltl(r));
    REQUIRE(v.entails);
    CHECK(v.exists);
  }
}

TEST_CASE("iep: an unsatisfiable premise always interpolates") {
  for (const char* psi : {"q", "F q", "q U r"}) {
    CAPTURE(psi);
    IepVerdict v = interpolant_exists(parse_ltl("p & !p"), parse_ltl(psi));
    CHECK(v.entails);
    CHECK(v.exists);
  }
}

TEST_CASE("iep: renaming non-shared variables preserves the verdict") {
  std::vector<std::array<const char*, 4>> cases{
      // premise, conclusion, renamed premise, renamed conclusion
      {"p & F q", "F q | r", "s & F q", "F q | t"},
      {"F p", "p", "F s", "s"},
      {"p & X q", "q | X q", "w & X q", "q | X q"},
  };
  for (const auto& c : cases) {
    IepVerdict v1 = interpolant_exists(parse_ltl(c[0]), parse_ltl(c[1]));
    IepVerdict v2 = interpolant_exists(parse_ltl(c[2]), parse_ltl(c[3]));
    CAPTURE(c[0]);
    CHECK(v1.exists == v2.exists);
    CHECK(v1.entails == v2.entails);
  }
}

TEST_CASE("iep: positive verdicts always come with entailment") {
  std::mt19937 rng(271828);
  std::vector<std::string> vars{"p", "q"};
  for (int i = 0; i < 60; ++i) {
    LtlFormula phi = fosep::testing::random_formula(rng, 2, vars);
    LtlFormula psi = fosep::testing::random_formula(rng, 2, vars);
    std::string a = print_ltl(phi), b = print_ltl(psi);
    CAPTURE(a);
    CAPTURE(b);
    IepVerdict v = interpolant_exists(phi, psi);  // throws if exists without entailment
    if (v.exists) CHECK(v.entails);
  }
}
