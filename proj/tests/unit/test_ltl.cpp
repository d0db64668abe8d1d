#include <doctest.h>

#include <random>

#include "fosep/errors.hpp"
#include "fosep/ltl.hpp"
#include "oracles.hpp"

using namespace fosep;

TEST_CASE("ltl: atoms and keywords") {
  CHECK(parse_ltl("true").kind() == LtlKind::kTrue);
  CHECK(parse_ltl("p").kind() == LtlKind::kVar);
  CHECK(parse_ltl("p").var_name() == "p");
  CHECK(parse_ltl("request_2").var_name() == "request_2");
  // `false` is shorthand for the negation of `true`
  LtlFormula f = parse_ltl("false");
  REQUIRE(f.kind() == LtlKind::kNot);
  CHECK(f.child(0).kind() == LtlKind::kTrue);
}

TEST_CASE("ltl: operator precedence, tightest first: unary, U, &, |, ->, <->") {
  // & binds tighter than |
  LtlFormula f = parse_ltl("p | q & r");
  REQUIRE(f.kind() == LtlKind::kOr);
  CHECK(f.child(1).kind() == LtlKind::kAnd);
  // U binds tighter than &
  f = parse_ltl("p U q & r");
  REQUIRE(f.kind() == LtlKind::kAnd);
  CHECK(f.child(0).kind() == LtlKind::kUntil);
  // unary binds tighter than U
  f = parse_ltl("X p U q");
  REQUIRE(f.kind() == LtlKind::kUntil);
  CHECK(f.child(0).kind() == LtlKind::kNext);
  // | binds tighter than ->
  f = parse_ltl("p | q -> r");
  REQUIRE(f.kind() == LtlKind::kImplies);
  CHECK(f.child(0).kind() == LtlKind::kOr);
  // -> binds tighter than <->
  f = parse_ltl("p -> q <-> r");
  REQUIRE(f.kind() == LtlKind::kIff);
  CHECK(f.child(0).kind() == LtlKind::kImplies);
}

TEST_CASE("ltl: associativity") {
  // -> and U associate to the right
  LtlFormula f = parse_ltl("p -> q -> r");
  REQUIRE(f.kind() == LtlKind::kImplies);
  CHECK(f.child(0).kind() == LtlKind::kVar);
  CHECK(f.child(1).kind() == LtlKind::kImplies);
  f = parse_ltl("p U q U r");
  REQUIRE(f.kind() == LtlKind::kUntil);
  CHECK(f.child(0).kind() == LtlKind::kVar);
  CHECK(f.child(1).kind() == LtlKind::kUntil);
  // &, |, <-> associate to the left
  f = parse_ltl("p & q & r");
  REQUIRE(f.kind() == LtlKind::kAnd);
  CHECK(f.child(0).kind() == LtlKind::kAnd);
  f = parse_ltl("p <-> q <-> r");
  REQUIRE(f.kind() == LtlKind::kIff);
  CHECK(f.child(0).kind() == LtlKind::kIff);
}

TEST_CASE("ltl: until arguments are (eventuality, interim)") {
  LtlFormula f = parse_ltl("p U q");
  REQUIRE(f.kind() == LtlKind::kUntil);
  CHECK(f == LtlFormula::until(LtlFormula::var("p"), LtlFormula::var("q")));
}

TEST_CASE("ltl: temporal keywords are reserved, not variables") {
  CHECK_THROWS_AS(parse_ltl("X"), ParseError);  // X needs an operand
  LtlFormula f = parse_ltl("X Xray");           // but identifiers may start with X
  REQUIRE(f.kind() == LtlKind::kNext);
  CHECK(f.child(0).var_name() == "Xray");
  CHECK(parse_ltl("F G p") ==
        LtlFormula::eventually(LtlFormula::always(LtlFormula::var("p"))));
}

TEST_CASE("ltl: parse errors carry a position") {
  try {
    parse_ltl("p U");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);  // end of input
  }
  CHECK_THROWS_AS(parse_ltl(""), ParseError);
  CHECK_THROWS_AS(parse_ltl("(p"), ParseError);
  CHECK_THROWS_AS(parse_ltl("p q"), ParseError);
  CHECK_THROWS_AS(parse_ltl("p & & q"), ParseError);
  CHECK_THROWS_AS(parse_ltl("p <- q"), ParseError);
}

TEST_CASE("ltl: variables are collected sorted and deduplicated") {
  LtlFormula f = parse_ltl("q & F p | X q");
  CHECK(f.variables() == std::vector<std::string>{"p", "q"});
  CHECK(parse_ltl("true").variables().empty());
}

TEST_CASE("ltl: printing round-trips through the parser") {
  std::mt19937 rng(20240817);
  std::vector<std::string> vars{"p", "q"};
  for (int i = 0; i < 500; ++i) {
    LtlFormula f = fosep::testing::random_formula(rng, 4, vars);
    LtlFormula back = parse_ltl(print_ltl(f));
    CHECK(back == f);
  }
  // spot-check that printing drops redundant parentheses
  CHECK(print_ltl(parse_ltl("((p) & (q)) -> (r)")) == "p & q -> r");
}
