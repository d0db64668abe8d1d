// Microbenchmarks for the hot paths: automaton construction, minimization,
// semigroup and family computation, tableau compilation, and the full
// interpolation pipeline.  Run the binary directly; see --help for filters.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "fosep/automaton.hpp"
#include "fosep/automaton_ops.hpp"
#include "fosep/iep.hpp"
#include "fosep/ltl.hpp"
#include "fosep/ltl2nfa.hpp"
#include "fosep/regex.hpp"
#include "fosep/semigroup.hpp"
#include "fosep/separation.hpp"

namespace {

using namespace fosep;

// Fourth-from-last letter is an a: the subset construction genuinely has to
// track a window, so determinization grows the state count.
const char* kWindowPattern = "(a|b)*a(a|b)(a|b)(a|b)";

Nfa window_nfa() {
  Alphabet ab = Alphabet::from_csv("a,b");
  return regex_to_nfa(parse_regex(kWindowPattern, ab), ab);
}

Dfa block_dfa(const char* pattern) {
  Alphabet ab = Alphabet::from_csv("a,b");
  return minimize(determinize(regex_to_nfa(parse_regex(pattern, ab), ab)));
}

void bm_regex_parse(benchmark::State& state) {
  Alphabet ab = Alphabet::from_csv("a,b");
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_regex(kWindowPattern, ab));
  }
}
BENCHMARK(bm_regex_parse);

void bm_determinize(benchmark::State& state) {
  Nfa n = window_nfa();
  for (auto _ : state) {
    benchmark::DoNotOptimize(determinize(n));
  }
}
BENCHMARK(bm_determinize);

void bm_minimize(benchmark::State& state) {
  Dfa d = determinize(window_nfa());
  for (auto _ : state) {
    Dfa copy = d;
    benchmark::DoNotOptimize(minimize(std::move(copy)));
  }
}
BENCHMARK(bm_minimize);

void bm_transition_semigroup(benchmark::State& state) {
  MarkedProduct mp = marked_product(block_dfa("(abab)+"), block_dfa("(baba)+"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        transition_semigroup_marked(mp.dfa, {mp.accepting_left, mp.accepting_right}));
  }
}
BENCHMARK(bm_transition_semigroup);

void bm_saturate_separable(benchmark::State& state) {
  MarkedProduct mp = marked_product(block_dfa("(abab)+"), block_dfa("(baba)+"));
  FiniteSemigroup sg =
      transition_semigroup_marked(mp.dfa, {mp.accepting_left, mp.accepting_right});
  for (auto _ : state) {
    benchmark::DoNotOptimize(saturate(sg));
  }
}
BENCHMARK(bm_saturate_separable);

void bm_separation_pipeline(benchmark::State& state) {
  Dfa l1 = block_dfa("(abab)+");
  Dfa l2 = block_dfa("(baba)+");
  for (auto _ : state) {
    benchmark::DoNotOptimize(fo_separable(l1, l2));
  }
}
BENCHMARK(bm_separation_pipeline);

void bm_definability(benchmark::State& state) {
  Dfa d = block_dfa("a(a|b)*b");
  for (auto _ : state) {
    benchmark::DoNotOptimize(fo_definable(d));
  }
}
BENCHMARK(bm_definability);

void bm_tableau_compile(benchmark::State& state) {
  LtlFormula f = parse_ltl("F(p & X(q U r)) & G(p -> F q)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(ltl_to_nfa(f));
  }
}
BENCHMARK(bm_tableau_compile);

void bm_interpolation_pipeline(benchmark::State& state) {
  LtlFormula premise = parse_ltl("p & F q");
  LtlFormula conclusion = parse_ltl("F q | r");
  for (auto _ : state) {
    benchmark::DoNotOptimize(interpolant_exists(premise, conclusion));
  }
}
BENCHMARK(bm_interpolation_pipeline);

}  // namespace

BENCHMARK_MAIN();
