// Command-line front end: one subcommand per library operation, with
// verdict-style exit codes so shell scripts can branch on results directly.
//   0  positive verdict / success
//   1  negative verdict
//   2  usage or input error (message on standard error)

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fosep/alphabet.hpp"
#include "fosep/automaton.hpp"
#include "fosep/automaton_io.hpp"
#include "fosep/automaton_ops.hpp"
#include "fosep/errors.hpp"
#include "fosep/iep.hpp"
#include "fosep/ltl.hpp"
#include "fosep/ltl2nfa.hpp"
#include "fosep/model.hpp"
#include "fosep/regex.hpp"
#include "fosep/semigroup.hpp"
#include "fosep/separation.hpp"

namespace {

using nlohmann::json;
using namespace fosep;

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;
constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// shared option plumbing

struct Options {
  std::vector<std::string> aut_paths;  // --aut, in order
  std::vector<std::string> regexes;    // --regex, appended after the files
  std::string alphabet_csv;            // --alphabet, required with --regex
  std::uint64_t max_states = 1'000'000;
  bool json_report = false;
  bool explain = false;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--max-states", opt.max_states,
                  "largest automaton/semigroup the run may build (default 10^6)");
  cmd->add_flag("--json", opt.json_report, "machine-readable report");
}

void add_input_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--aut", opt.aut_paths, "automaton document (JSON file); repeatable");
  cmd->add_option("--regex", opt.regexes,
                  "regular expression over --alphabet; repeatable");
  cmd->add_option("--alphabet", opt.alphabet_csv,
                  "comma-separated letter names for --regex");
}

Limits limits_of(const Options& opt) {
  Limits l;
  l.max_states = opt.max_states;
  return l;
}

// Inputs are the --aut files in order, then the --regex expressions in order.
std::vector<Automaton> load_inputs(const Options& opt, std::size_t expected) {
  std::vector<Automaton> inputs;
  for (const std::string& path : opt.aut_paths) inputs.push_back(read_automaton_file(path));
  if (!opt.regexes.empty()) {
    if (opt.alphabet_csv.empty()) {
      throw InvalidInputError("--regex requires --alphabet");
    }
    Alphabet alphabet = Alphabet::from_csv(opt.alphabet_csv);
    for (const std::string& text : opt.regexes) {
      inputs.push_back(regex_to_nfa(parse_regex(text, alphabet), alphabet));
    }
  }
  if (inputs.size() != expected) {
    throw InvalidInputError("expected " + std::to_string(expected) + " input(s) via --aut/--regex, got " +
                            std::to_string(inputs.size()));
  }
  return inputs;
}

Dfa as_dfa(Automaton automaton, const Limits& limits) {
  if (Dfa* d = std::get_if<Dfa>(&automaton)) return std::move(*d);
  return determinize(std::get<Nfa>(automaton), limits);
}

void emit_automaton(const Automaton& automaton) { std::cout << to_json(automaton); }

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  if (csv.empty()) return out;
  while (true) {
    std::size_t comma = csv.find(',', start);
    out.push_back(csv.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string witness_of(const FiniteSemigroup& sg, std::uint32_t element) {
  return sg.witness_text(element);
}

json family_json(const SeparationAnalysis& analysis) {
  json family = json::array();
  for (const auto& set : analysis.family.maximal_nonsingleton_sets()) {
    json member = json::array();
    for (std::uint32_t e : set) member.push_back(witness_of(analysis.semigroup, e));
    family.push_back(std::move(member));
  }
  return family;
}

void print_family(const SeparationAnalysis& analysis) {
  std::cout << "maximal non-singleton members:\n";
  const auto& sets = analysis.family.maximal_nonsingleton_sets();
  if (sets.empty()) std::cout << "  (none — every member is a singleton)\n";
  for (const auto& set : sets) {
    std::cout << "  {";
    for (std::size_t i = 0; i < set.size(); ++i) {
      std::cout << (i ? ", " : "") << witness_of(analysis.semigroup, set[i]);
    }
    std::cout << "}\n";
  }
}

// ---------------------------------------------------------------------------
// subcommands

int run_eval(const Options& opt, const std::string& formula_text,
             const std::string& word_text) {
  LtlFormula formula = parse_ltl(formula_text);
  auto positions = parse_word_literal(word_text);
  std::vector<std::string> universe = formula.variables();
  for (const auto& pos : positions) universe.insert(universe.end(), pos.begin(), pos.end());
  TemporalModel model(universe, positions);
  bool satisfied = evaluate(formula, model);
  if (opt.json_report) {
    json report{{"schema_version", kSchemaVersion},
                {"command", "eval"},
                {"satisfied", satisfied}};
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << (satisfied ? "satisfied" : "not satisfied") << "\n";
  }
  return satisfied ? kPositive : kNegative;
}

int run_ltl2nfa(const Options& opt, const std::string& formula_text,
                const std::string& vars_csv) {
  Nfa nfa = ltl_to_nfa(parse_ltl(formula_text), split_csv(vars_csv), limits_of(opt));
  emit_automaton(nfa);
  return kPositive;
}

int run_det(const Options& opt) {
  std::vector<Automaton> in = load_inputs(opt, 1);
  emit_automaton(as_dfa(std::move(in[0]), limits_of(opt)));
  return kPositive;
}

int run_min(const Options& opt) {
  std::vector<Automaton> in = load_inputs(opt, 1);
  emit_automaton(minimize(as_dfa(std::move(in[0]), limits_of(opt))));
  return kPositive;
}

int run_comp(const Options& opt) {
  std::vector<Automaton> in = load_inputs(opt, 1);
  emit_automaton(complement(as_dfa(std::move(in[0]), limits_of(opt))));
  return kPositive;
}

int run_prod(const Options& opt, const std::string& mode_name) {
  std::vector<Automaton> in = load_inputs(opt, 2);
  ProductMode mode;
  if (mode_name == "intersection") {
    mode = ProductMode::kIntersection;
  } else if (mode_name == "union") {
    mode = ProductMode::kUnion;
  } else if (mode_name == "difference") {
    mode = ProductMode::kDifference;
  } else {
    throw InvalidInputError("unknown product mode: " + mode_name);
  }
  Limits limits = limits_of(opt);
  emit_automaton(product(as_dfa(std::move(in[0]), limits), as_dfa(std::move(in[1]), limits),
                         mode, limits));
  return kPositive;
}

int run_proj(const Options& opt, const std::string& keep_csv) {
  std::vector<Automaton> in = load_inputs(opt, 1);
  Nfa nfa = std::holds_alternative<Nfa>(in[0]) ? std::get<Nfa>(std::move(in[0]))
                                               : to_nfa(std::get<Dfa>(std::move(in[0])));
  emit_automaton(project(nfa, split_csv(keep_csv)));
  return kPositive;
}

int run_sgrp(const Options& opt) {
  std::vector<Automaton> in = load_inputs(opt, 1);
  Limits limits = limits_of(opt);
  FiniteSemigroup sg = transition_semigroup(as_dfa(std::move(in[0]), limits), limits);
  std::uint64_t exponent = idempotent_power(sg);
  bool aperiodic = is_aperiodic(sg);
  if (opt.json_report) {
    json report{{"schema_version", kSchemaVersion},
                {"command", "sgrp"},
                {"size", sg.size()},
                {"exponent", exponent},
                {"aperiodic", aperiodic}};
    if (opt.explain) {
      json elements = json::array();
      for (std::uint32_t e = 0; e < sg.size(); ++e) elements.push_back(witness_of(sg, e));
      report["elements"] = std::move(elements);
    }
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "size: " << sg.size() << "\n"
              << "exponent: " << exponent << "\n"
              << "aperiodic: " << (aperiodic ? "yes" : "no") << "\n";
    if (opt.explain) {
      std::cout << "elements:\n";
      for (std::uint32_t e = 0; e < sg.size(); ++e) {
        std::cout << "  " << witness_of(sg, e) << "\n";
      }
    }
  }
  return kPositive;
}

int run_defin(const Options& opt) {
  std::vector<Automaton> in = load_inputs(opt, 1);
  Limits limits = limits_of(opt);
  Dfa minimal = minimize(as_dfa(std::move(in[0]), limits));
  FiniteSemigroup sg = transition_semigroup(minimal, limits);
  bool definable = is_aperiodic(sg);
  std::optional<std::string> periodic_witness;
  if (!definable) {
    for (std::uint32_t e = 0; e < sg.size(); ++e) {
      if (sg.power_profile(e).period > 1) {
        periodic_witness = witness_of(sg, e);
        break;
      }
    }
  }
  if (opt.json_report) {
    json report{{"schema_version", kSchemaVersion},
                {"command", "defin"},
                {"definable", definable},
                {"semigroup_size", sg.size()},
                {"exponent", idempotent_power(sg)}};
    if (periodic_witness) report["periodic_witness"] = *periodic_witness;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << (definable ? "definable" : "not definable") << "\n";
    if (opt.explain) {
      std::cout << "semigroup size: " << sg.size() << "\n"
                << "exponent: " << idempotent_power(sg) << "\n";
      if (periodic_witness) {
        std::cout << "periodic word: " << *periodic_witness << "\n";
      }
    }
  }
  return definable ? kPositive : kNegative;
}

int run_sep(const Options& opt) {
  std::vector<Automaton> in = load_inputs(opt, 2);
  Limits limits = limits_of(opt);
  Dfa left = as_dfa(std::move(in[0]), limits);
  Dfa right = as_dfa(std::move(in[1]), limits);

  if (opt.explain || opt.json_report) {
    SeparationAnalysis analysis = analyze_separability(left, right, limits);
    const SeparabilityResult& r = analysis.result;
    if (opt.json_report) {
      json report{{"schema_version", kSchemaVersion},
                  {"command", "sep"},
                  {"separable", r.separable},
                  {"product_states", r.product_states},
                  {"semigroup_size", r.semigroup_size},
                  {"exponent", r.exponent},
                  {"family", family_json(analysis)}};
      if (r.violation) {
        report["violation"] = {
            {"left_witness", witness_of(analysis.semigroup, r.violation->left_element)},
            {"right_witness", witness_of(analysis.semigroup, r.violation->right_element)}};
      }
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << (r.separable ? "separable" : "not separable") << "\n"
                << "product states: " << r.product_states << "\n"
                << "semigroup size: " << r.semigroup_size << "\n"
                << "exponent: " << r.exponent << "\n";
      print_family(analysis);
      if (r.violation) {
        std::cout << "violating pair: "
                  << witness_of(analysis.semigroup, r.violation->left_element) << " (left), "
                  << witness_of(analysis.semigroup, r.violation->right_element)
                  << " (right)\n";
      }
    }
    return r.separable ? kPositive : kNegative;
  }

  SeparabilityResult r = fo_separable(left, right, limits);
  std::cout << (r.separable ? "separable" : "not separable") << "\n";
  return r.separable ? kPositive : kNegative;
}

int run_iep(const Options& opt, const std::string& premise_text,
            const std::string& conclusion_text) {
  LtlFormula premise = parse_ltl(premise_text);
  LtlFormula conclusion = parse_ltl(conclusion_text);
  Limits limits = limits_of(opt);
  IepVerdict v = interpolant_exists(premise, conclusion, limits);

  auto witness_names = [&v](const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      out += (i ? " " : "");
      out += v.shared_letters[w[i]];
    }
    return out.empty() ? std::string("(empty)") : out;
  };

  if (opt.json_report) {
    json report{{"schema_version", kSchemaVersion},
                {"command", "iep"},
                {"exists", v.exists},
                {"entails", v.entails},
                {"shared_variables", v.shared_variables},
                {"left_language_states", v.left_language_states},
                {"right_language_states", v.right_language_states},
                {"semigroup_size", v.semigroup_size},
                {"exponent", v.exponent}};
    if (v.violation) {
      report["violation"] = {{"left_witness", witness_names(v.violation->left_witness)},
                             {"right_witness", witness_names(v.violation->right_witness)}};
    }
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << (v.exists ? "interpolant exists" : "no interpolant") << "\n"
              << "entails: " << (v.entails ? "yes" : "no") << "\n";
    std::cout << "shared variables:";
    for (const std::string& name : v.shared_variables) std::cout << " " << name;
    if (v.shared_variables.empty()) std::cout << " (none)";
    std::cout << "\n";
    if (opt.explain) {
      std::cout << "left language states: " << v.left_language_states << "\n"
                << "right language states: " << v.right_language_states << "\n"
                << "semigroup size: " << v.semigroup_size << "\n"
                << "exponent: " << v.exponent << "\n";
      // full family of the projected pair, mirroring `sep --explain`
      Dfa left = language_of(premise, v.shared_variables, limits);
      Dfa right = language_of(LtlFormula::negation(conclusion), v.shared_variables, limits);
      print_family(analyze_separability(left, right, limits));
    }
    if (v.violation) {
      std::cout << "violating pair:\n  left:  " << witness_names(v.violation->left_witness)
                << "\n  right: " << witness_names(v.violation->right_witness) << "\n";
    }
  }
  return v.exists ? kPositive : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"first-order definability, separation, and interpolation over finite words"};
  app.require_subcommand(1);

  Options opt;
  std::string formula_text, word_text, conclusion_text, vars_csv, keep_csv;
  std::string mode_name = "intersection";

  CLI::App* eval = app.add_subcommand("eval", "evaluate a formula on a word");
  eval->add_option("formula", formula_text)->required();
  eval->add_option("word", word_text, "word literal such as {p};{};{p,q}")->required();
  add_common_flags(eval, opt);

  CLI::App* ltl2nfa = app.add_subcommand("ltl2nfa", "compile a formula to an automaton");
  ltl2nfa->add_option("formula", formula_text)->required();
  ltl2nfa->add_option("--vars", vars_csv, "extra universe variables (csv)");
  add_common_flags(ltl2nfa, opt);

  CLI::App* det = app.add_subcommand("det", "determinize");
  CLI::App* min = app.add_subcommand("min", "minimize");
  CLI::App* comp = app.add_subcommand("comp", "complement (over nonempty words)");
  CLI::App* prod = app.add_subcommand("prod", "product of two automata");
  prod->add_option("--mode", mode_name, "intersection | union | difference");
  CLI::App* proj = app.add_subcommand("proj", "project onto a variable subset");
  proj->add_option("--keep", keep_csv, "variables to keep (csv; empty keeps none)");
  CLI::App* sgrp = app.add_subcommand("sgrp", "transition semigroup of an automaton");
  CLI::App* defin = app.add_subcommand("defin", "first-order definability of a language");
  CLI::App* sep = app.add_subcommand("sep", "first-order separability of two languages");
  for (CLI::App* cmd : {det, min, comp, prod, proj, sgrp, defin, sep}) {
    add_input_flags(cmd, opt);
    add_common_flags(cmd, opt);
  }
  sep->add_flag("--explain", opt.explain, "print semigroup and family details");
  defin->add_flag("--explain", opt.explain, "print semigroup details");
  sgrp->add_flag("--explain", opt.explain, "list every element with its witness word");

  CLI::App* iep = app.add_subcommand("iep", "interpolant existence for a formula pair");
  iep->add_option("premise", formula_text)->required();
  iep->add_option("conclusion", conclusion_text)->required();
  iep->add_flag("--explain", opt.explain, "print language, semigroup, and family details");
  add_common_flags(iep, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    if (eval->parsed()) return run_eval(opt, formula_text, word_text);
    if (ltl2nfa->parsed()) return run_ltl2nfa(opt, formula_text, vars_csv);
    if (det->parsed()) return run_det(opt);
    if (min->parsed()) return run_min(opt);
    if (comp->parsed()) return run_comp(opt);
    if (prod->parsed()) return run_prod(opt, mode_name);
    if (proj->parsed()) return run_proj(opt, keep_csv);
    if (sgrp->parsed()) return run_sgrp(opt);
    if (defin->parsed()) return run_defin(opt);
    if (sep->parsed()) return run_sep(opt);
    if (iep->parsed()) return run_iep(opt, formula_text, conclusion_text);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
