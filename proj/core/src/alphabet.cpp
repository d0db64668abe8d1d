#include "fosep/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "fosep/errors.hpp"

namespace fosep {

bool is_identifier(const std::string& text) {
  if (text.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(text[0]))) return false;
  for (char c : text) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidInputError("alphabet must be nonempty");
  for (Letter i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (n.empty()) throw InvalidInputError("empty letter name");
    if (n.find(',') != std::string::npos && !parse_set_name(n)) {
      throw InvalidInputError("letter name contains ',' but is not a set name: " + n);
    }
    if (!index_.emplace(n, i).second) {
      throw InvalidInputError("duplicate letter name: " + n);
    }
  }
}

Alphabet Alphabet::from_csv(const std::string& csv) {
  std::vector<std::string> names;
  std::string cur;
  int brace_depth = 0;
  for (char c : csv) {
    if (c == '{') ++brace_depth;
    if (c == '}') --brace_depth;
    if (c == ',' && brace_depth == 0) {
      names.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  names.push_back(cur);
  return Alphabet(std::move(names));
}

Alphabet Alphabet::powerset(std::vector<std::string> variables) {
  std::sort(variables.begin(), variables.end());
  variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
  for (const std::string& v : variables) {
    if (!is_identifier(v)) throw InvalidInputError("invalid variable name: " + v);
  }
  if (variables.size() > 20) {
    throw ResourceLimitError("powerset alphabet over " + std::to_string(variables.size()) +
                             " variables exceeds the supported size");
  }
  std::vector<std::string> names;
  names.reserve(std::size_t{1} << variables.size());
  for (std::uint32_t mask = 0; mask < (1u << variables.size()); ++mask) {
    std::vector<std::string> members;
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (mask & (1u << i)) members.push_back(variables[i]);
    }
    names.push_back(set_name(std::move(members)));
  }
  return Alphabet(std::move(names));
}

std::optional<Letter> Alphabet::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::vector<std::string>> Alphabet::parse_set_name(const std::string& name) {
  if (name.size() < 2 || name.front() != '{' || name.back() != '}') return std::nullopt;
  std::string inner = name.substr(1, name.size() - 2);
  std::vector<std::string> members;
  if (!inner.empty()) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = inner.find(',', start);
      members.push_back(inner.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  for (const std::string& m : members) {
    if (!is_identifier(m)) return std::nullopt;
  }
  if (!std::is_sorted(members.begin(), members.end())) return std::nullopt;
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) return std::nullopt;
  return members;
}

std::string Alphabet::set_name(std::vector<std::string> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += members[i];
  }
  out += '}';
  return out;
}

bool operator==(const Alphabet& lhs, const Alphabet& rhs) {
  return lhs.names_ == rhs.names_;
}

}  // namespace fosep
