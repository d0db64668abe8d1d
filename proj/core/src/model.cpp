#include "fosep/model.hpp"

#include <algorithm>
#include <unordered_map>

#include "fosep/alphabet.hpp"
#include "fosep/errors.hpp"

namespace fosep {

TemporalModel::TemporalModel(std::vector<std::string> universe,
                             const std::vector<std::vector<std::string>>& positions)
    : universe_(std::move(universe)) {
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
  for (const std::string& v : universe_) {
    if (!is_identifier(v)) throw InvalidInputError("invalid variable name: " + v);
  }
  if (universe_.size() > 64) {
    throw InvalidInputError("models support at most 64 variables");
  }
  if (positions.empty()) {
    throw InvalidInputError("a temporal model needs at least one position");
  }
  valuation_.reserve(positions.size());
  for (const std::vector<std::string>& pos : positions) {
    std::uint64_t mask = 0;
    for (const std::string& v : pos) {
      auto it = std::lower_bound(universe_.begin(), universe_.end(), v);
      if (it == universe_.end() || *it != v) {
        throw InvalidInputError("variable '" + v + "' is outside the model universe");
      }
      mask |= std::uint64_t{1} << (it - universe_.begin());
    }
    valuation_.push_back(mask);
  }
}

bool TemporalModel::holds(const std::string& variable, std::size_t position) const {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), variable);
  if (it == universe_.end() || *it != variable) {
    throw InvalidInputError("variable '" + variable + "' is outside the model universe");
  }
  return valuation_.at(position) >> (it - universe_.begin()) & 1;
}

std::vector<std::string> TemporalModel::letter_at(std::size_t position) const {
  std::vector<std::string> out;
  std::uint64_t mask = valuation_.at(position);
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (mask >> i & 1) out.push_back(universe_[i]);
  }
  return out;
}

std::vector<std::vector<std::string>> parse_word_literal(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i >= text.size() || text[i] != '{') {
      throw ParseError("expected '{' to start a letter", i);
    }
    std::size_t close = text.find('}', i);
    if (close == std::string_view::npos) throw ParseError("unterminated letter", i);
    std::string name(text.substr(i, close - i + 1));
    auto members = Alphabet::parse_set_name(name);
    if (!members) throw ParseError("malformed letter " + name, i);
    out.push_back(std::move(*members));
    i = close + 1;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i == text.size()) break;
    if (text[i] != ';') throw ParseError("expected ';' between letters", i);
    ++i;
  }
  return out;
}

namespace {

struct Evaluator {
  const TemporalModel& model;
  // One memo entry per (subformula node, position); node identity is by
  // address, which is stable for the duration of the call.
  std::unordered_map<const LtlFormula::Node*, std::vector<signed char>> memo;

  bool eval(const LtlFormula& f, std::size_t n) {
    std::vector<signed char>& row = memo[f.node()];
    if (row.empty()) row.assign(model.length(), -1);
    if (row[n] >= 0) return row[n] != 0;
    bool value = compute(f, n);
    row[n] = value ? 1 : 0;
    return value;
  }

  bool compute(const LtlFormula& f, std::size_t n) {
    std::size_t last = model.length() - 1;
    switch (f.kind()) {
      case LtlKind::kTrue:
        return true;
      case LtlKind::kVar:
        return model.holds(f.var_name(), n);
      case LtlKind::kNot:
        return !eval(f.child(0), n);
      case LtlKind::kAnd:
        return eval(f.child(0), n) && eval(f.child(1), n);
      case LtlKind::kOr:
        return eval(f.child(0), n) || eval(f.child(1), n);
      case LtlKind::kImplies:
        return !eval(f.child(0), n) || eval(f.child(1), n);
      case LtlKind::kIff:
        return eval(f.child(0), n) == eval(f.child(1), n);
      case LtlKind::kNext:
        return n < last && eval(f.child(0), n + 1);
      case LtlKind::kEventually:
        return n < last && (eval(f.child(0), n + 1) || eval(f, n + 1));
      case LtlKind::kGlobally:
        return eval(f.child(0), n) && (n == last || eval(f, n + 1));
      case LtlKind::kUntil:
        // The first operand is the eventuality, the second the interim
        // condition, both evaluated strictly after n.
        return n < last && (eval(f.child(0), n + 1) ||
                            (eval(f.child(1), n + 1) && eval(f, n + 1)));
    }
    return false;  // unreachable
  }
};

}  // namespace

bool evaluate(const LtlFormula& formula, const TemporalModel& model, std::size_t position) {
  if (position >= model.length()) {
    throw InvalidInputError("evaluation position is outside the model");
  }
  Evaluator ev{model, {}};
  return ev.eval(formula, position);
}

}  // namespace fosep
