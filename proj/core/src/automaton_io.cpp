#include "fosep/automaton_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fosep/errors.hpp"

namespace fosep {

namespace {

using nlohmann::json;

const json& require_field(const json& doc, const char* field) {
  auto it = doc.find(field);
  if (it == doc.end()) {
    throw InvalidInputError(std::string("automaton document is missing \"") + field + "\"");
  }
  return *it;
}

std::vector<State> read_state_list(const json& arr, std::uint32_t num_states,
                                   const char* what) {
  if (!arr.is_array()) throw InvalidInputError(std::string(what) + " must be an array");
  std::vector<State> out;
  for (const json& item : arr) {
    if (!item.is_number_unsigned()) {
      throw InvalidInputError(std::string(what) + " entries must be nonnegative integers");
    }
    std::uint64_t v = item.get<std::uint64_t>();
    if (v >= num_states) {
      throw InvalidInputError(std::string(what) + " state " + std::to_string(v) +
                              " is out of range");
    }
    out.push_back(static_cast<State>(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Automaton from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidInputError("automaton document must be a JSON object");
  const json& kind = require_field(doc, "kind");
  if (!kind.is_string() || (kind != "nfa" && kind != "dfa")) {
    throw InvalidInputError("\"kind\" must be \"nfa\" or \"dfa\"");
  }
  const json& alpha = require_field(doc, "alphabet");
  if (!alpha.is_array() || alpha.empty()) {
    throw InvalidInputError("\"alphabet\" must be a nonempty array of letter names");
  }
  std::vector<std::string> names;
  for (const json& n : alpha) {
    if (!n.is_string()) throw InvalidInputError("letter names must be strings");
    names.push_back(n.get<std::string>());
  }
  Alphabet alphabet(std::move(names));

  const json& states = require_field(doc, "states");
  if (!states.is_number_unsigned()) {
    throw InvalidInputError("\"states\" must be a nonnegative integer");
  }
  std::uint64_t n64 = states.get<std::uint64_t>();
  if (n64 > 10'000'000) throw InvalidInputError("state count too large");
  auto num_states = static_cast<std::uint32_t>(n64);

  std::vector<State> initial = read_state_list(require_field(doc, "initial"), num_states, "initial");
  std::vector<State> accepting =
      read_state_list(require_field(doc, "accepting"), num_states, "accepting");

  struct Edge {
    State src;
    Letter letter;
    State dst;
  };
  std::vector<Edge> edges;
  const json& trans = require_field(doc, "transitions");
  if (!trans.is_array()) throw InvalidInputError("\"transitions\" must be an array");
  for (const json& t : trans) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_string() ||
        !t[2].is_number_unsigned()) {
      throw InvalidInputError("each transition must be [src, \"letter\", dst]");
    }
    std::uint64_t src = t[0].get<std::uint64_t>();
    std::uint64_t dst = t[2].get<std::uint64_t>();
    if (src >= num_states || dst >= num_states) {
      throw InvalidInputError("transition endpoint out of range");
    }
    std::string letter_name = t[1].get<std::string>();
    std::optional<Letter> letter = alphabet.index(letter_name);
    if (!letter) throw InvalidInputError("unknown letter \"" + letter_name + "\"");
    edges.push_back({static_cast<State>(src), *letter, static_cast<State>(dst)});
  }

  if (kind == "nfa") {
    Nfa nfa{std::move(alphabet), num_states, std::move(initial), std::move(accepting), {}};
    nfa.next.resize(std::size_t{num_states} * nfa.alphabet.size());
    for (const Edge& e : edges) {
      nfa.next[std::size_t{e.src} * nfa.alphabet.size() + e.letter].push_back(e.dst);
    }
    for (std::vector<State>& targets : nfa.next) {
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    }
    validate(nfa);
    return nfa;
  }

  if (initial.size() != 1) {
    throw InvalidInputError("a DFA must have exactly one initial state");
  }
  if (num_states == 0) throw InvalidInputError("a DFA needs at least one state");

  constexpr State kUnset = static_cast<State>(-1);
  std::uint32_t width = alphabet.size();
  std::vector<State> delta(std::size_t{num_states} * width, kUnset);
  for (const Edge& e : edges) {
    State& cell = delta[std::size_t{e.src} * width + e.letter];
    if (cell != kUnset && cell != e.dst) {
      throw InvalidInputError("DFA has two transitions from state " + std::to_string(e.src) +
                              " on \"" + alphabet.name(e.letter) + "\"");
    }
    cell = e.dst;
  }
  bool partial = std::find(delta.begin(), delta.end(), kUnset) != delta.end();
  std::uint32_t total_states = num_states + (partial ? 1 : 0);
  if (partial) {
    // Totalize: route every missing transition to a fresh non-accepting sink.
    State sink = num_states;
    delta.resize(std::size_t{total_states} * width, sink);
    for (State& cell : delta) {
      if (cell == kUnset) cell = sink;
    }
  }
  Dfa dfa{std::move(alphabet), total_states, initial[0], {}, std::move(delta)};
  dfa.accepting.assign(total_states, false);
  for (State s : accepting) dfa.accepting[s] = true;
  validate(dfa);
  return dfa;
}

json to_json_doc(const Nfa& nfa) {
  json transitions = json::array();
  for (State s = 0; s < nfa.num_states; ++s) {
    for (Letter a = 0; a < nfa.alphabet.size(); ++a) {
      for (State t : nfa.targets(s, a)) {
        transitions.push_back(json::array({s, nfa.alphabet.name(a), t}));
      }
    }
  }
  return json{{"kind", "nfa"},
              {"alphabet", nfa.alphabet.names()},
              {"states", nfa.num_states},
              {"initial", nfa.initial},
              {"accepting", nfa.accepting},
              {"transitions", std::move(transitions)}};
}

json to_json_doc(const Dfa& dfa) {
  json transitions = json::array();
  std::vector<State> accepting;
  for (State s = 0; s < dfa.num_states; ++s) {
    if (dfa.accepting[s]) accepting.push_back(s);
    for (Letter a = 0; a < dfa.alphabet.size(); ++a) {
      transitions.push_back(json::array({s, dfa.alphabet.name(a), dfa.step(s, a)}));
    }
  }
  return json{{"kind", "dfa"},
              {"alphabet", dfa.alphabet.names()},
              {"states", dfa.num_states},
              {"initial", std::vector<State>{dfa.initial}},
              {"accepting", std::move(accepting)},
              {"transitions", std::move(transitions)}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

Automaton parse_automaton(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return from_json(doc);
}

Automaton read_automaton(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_automaton(buf.str());
}

Automaton read_automaton_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open automaton file: " + path);
  return read_automaton(in);
}

std::string to_json(const Nfa& nfa) { return dump(to_json_doc(nfa)); }
std::string to_json(const Dfa& dfa) { return dump(to_json_doc(dfa)); }
std::string to_json(const Automaton& automaton) {
  return std::visit([](const auto& a) { return to_json(a); }, automaton);
}

void write_automaton_file(const std::string& path, const Automaton& automaton) {
  std::ofstream out(path);
  if (!out) throw InvalidInputError("cannot open output file: " + path);
  out << to_json(automaton);
}

}  // namespace fosep
