#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "fosep/automaton_ops.hpp"
#include "fosep/errors.hpp"
#include "fosep/regex.hpp"
#include "oracles.hpp"

using namespace fosep;
using fosep::testing::RegexOracle;

namespace {

std::vector<std::string> chars(const std::string& s) {
  std::vector<std::string> out;
  for (char c : s) out.emplace_back(1, c);
  return out;
}

}  // namespace

TEST_CASE("regex: reference matcher sanity") {
  Alphabet ab = Alphabet::from_csv("a,b");
  RegexOracle plus(parse_regex("(ab)+", ab));
  CHECK(plus.matches(chars("ab")));
  CHECK(plus.matches(chars("abab")));
  CHECK(!plus.matches(chars("")));
  CHECK(!plus.matches(chars("aba")));
  CHECK(!plus.matches(chars("ba")));
  RegexOracle star(parse_regex("a*b", ab));
  CHECK(star.matches(chars("b")));
  CHECK(star.matches(chars("aaab")));
  CHECK(!star.matches(chars("aaba")));
}

TEST_CASE("regex: concatenation is n-ary") {
  Alphabet ab = Alphabet::from_csv("a,b");
  Regex r = parse_regex("(abab)+", ab);
  REQUIRE(r.kind() == RegexKind::kPlus);
  Regex body = r.child(0);
  REQUIRE(body.kind() == RegexKind::kConcat);
  REQUIRE(body.arity() == 4);
  CHECK(body.child(0).letter_name() == "a");
  CHECK(body.child(3).letter_name() == "b");
  CHECK(r == Regex::plus(Regex::concat({Regex::letter("a"), Regex::letter("b"),
                                        Regex::letter("a"), Regex::letter("b")})));
}

TEST_CASE("regex: union, grouping, postfix operators") {
  Alphabet ab = Alphabet::from_csv("a,b");
  Regex r = parse_regex("a|b*", ab);
  REQUIRE(r.kind() == RegexKind::kUnion);
  CHECK(r.child(1).kind() == RegexKind::kStar);
  r = parse_regex("(a|b)*", ab);
  REQUIRE(r.kind() == RegexKind::kStar);
  CHECK(r.child(0).kind() == RegexKind::kUnion);
  // double postfix applies outside-in
  r = parse_regex("a*+", ab);
  REQUIRE(r.kind() == RegexKind::kPlus);
  CHECK(r.child(0).kind() == RegexKind::kStar);
}

TEST_CASE("regex: brace tokens are single letters") {
  Alphabet sets = Alphabet::from_csv("{},{p},{q},{p,q}");
  Regex r = parse_regex("{p} {}* {p,q}", sets);
  REQUIRE(r.kind() == RegexKind::kConcat);
  REQUIRE(r.arity() == 3);
  CHECK(r.child(0).letter_name() == "{p}");
  CHECK(r.child(1).child(0).letter_name() == "{}");
}

TEST_CASE("regex: letters must belong to the alphabet") {
  Alphabet ab = Alphabet::from_csv("a,b");
  CHECK_THROWS_AS(parse_regex("ac", ab), ParseError);
  CHECK_THROWS_AS(parse_regex("{p}", ab), ParseError);
  CHECK_THROWS_AS(parse_regex("(a", ab), ParseError);
  CHECK_THROWS_AS(parse_regex("*a", ab), ParseError);
  CHECK_THROWS_AS(parse_regex("a||b", ab), ParseError);
  CHECK_THROWS_AS(parse_regex("", ab), ParseError);
}

TEST_CASE("regex: printing round-trips through the parser") {
  Alphabet ab = Alphabet::from_csv("a,b");
  for (const char* text : {"(abab)+", "a|b*", "(a|b)*aab", "a(ba)*b", "((ab)+|b)+"}) {
    Regex r = parse_regex(text, ab);
    CHECK(parse_regex(print_regex(r), ab) == r);
  }
}

// The matcher arbitrates membership for `(b(aa)*b(aa)*a)*b(aa)*`.  Every
// member is a sequence of blocks from b(aa)*b(aa)*a followed by one block
// from b(aa)*; the final block always starts with b and earlier blocks end
// in a, so `b` is a member while `bba` is not (its shortest extensions in
// the language are `bbab`-shaped).
TEST_CASE("regex: block-structure language membership") {
  Alphabet ab = Alphabet::from_csv("a,b");
  Regex r = parse_regex("(b(aa)*b(aa)*a)*b(aa)*", ab);
  RegexOracle oracle(r);
  CHECK(oracle.matches(chars("b")));
  CHECK(oracle.matches(chars("baa")));
  CHECK(oracle.matches(chars("bbab")));
  CHECK(oracle.matches(chars("bbabaa")));
  CHECK(!oracle.matches(chars("bba")));
  CHECK(!oracle.matches(chars("")));
  CHECK(!oracle.matches(chars("bb")));

  // position automaton agrees with the matcher on every word up to length 8
  Nfa nfa = regex_to_nfa(r, ab);
  for (const Word& w : fosep::testing::all_words(2, 8)) {
    std::string text;
    for (Letter l : w) text += ab.name(l);
    CAPTURE(text);
    CHECK(accepts(nfa, w) == (!w.empty() && oracle.matches(w, ab)));
  }
}

TEST_CASE("regex: position automaton matches the reference on random patterns") {
  Alphabet ab = Alphabet::from_csv("a,b");
  std::mt19937 rng(7121);
  std::vector<Word> words = fosep::testing::all_words(2, 7);
  // random pattern generator: depth-limited tree over the two letters
  struct Gen {
    std::mt19937& rng;
    Regex operator()(int depth) {
      int top = depth == 0 ? 1 : 10;
      switch (std::uniform_int_distribution<int>(0, top)(rng)) {
        case 0:
          return Regex::letter("a");
        case 1:
          return Regex::letter("b");
        case 2:
        case 3:
          return Regex::star((*this)(depth - 1));
        case 4:
        case 5:
          return Regex::plus((*this)(depth - 1));
        case 6:
        case 7:
          return Regex::alternation({(*this)(depth - 1), (*this)(depth - 1)});
        default:
          return Regex::concat({(*this)(depth - 1), (*this)(depth - 1)});
      }
    }
  } gen{rng};
  for (int i = 0; i < 60; ++i) {
    Regex r = gen(3);
    std::string pattern = print_regex(r);
    CAPTURE(pattern);
    RegexOracle oracle(r);
    Nfa nfa = regex_to_nfa(r, ab);
    for (const Word& w : words) {
      bool expect = !w.empty() && oracle.matches(w, ab);
      if (accepts(nfa, w) != expect) {
        std::string text;
        for (Letter l : w) text += ab.name(l);
        CAPTURE(text);
        CHECK(accepts(nfa, w) == expect);
      }
    }
  }
}
