#include "fosep/regex.hpp"

#include <utility>

#include "fosep/errors.hpp"

namespace fosep {

struct Regex::Node {
  RegexKind kind;
  std::string name;  // kLetter only
  std::vector<Regex> children;
};

Regex Regex::letter(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = RegexKind::kLetter;
  n->name = std::move(name);
  return Regex(std::move(n));
}

Regex Regex::concat(std::vector<Regex> children) {
  if (children.size() < 2) throw InvalidInputError("concat requires at least two children");
  auto n = std::make_shared<Node>();
  n->kind = RegexKind::kConcat;
  n->children = std::move(children);
  return Regex(std::move(n));
}

Regex Regex::alternation(std::vector<Regex> children) {
  if (children.size() < 2) throw InvalidInputError("union requires at least two children");
  auto n = std::make_shared<Node>();
  n->kind = RegexKind::kUnion;
  n->children = std::move(children);
  return Regex(std::move(n));
}

Regex Regex::star(Regex operand) {
  auto n = std::make_shared<Node>();
  n->kind = RegexKind::kStar;
  n->children.push_back(std::move(operand));
  return Regex(std::move(n));
}

Regex Regex::plus(Regex operand) {
  auto n = std::make_shared<Node>();
  n->kind = RegexKind::kPlus;
  n->children.push_back(std::move(operand));
  return Regex(std::move(n));
}

RegexKind Regex::kind() const { return node_->kind; }
const std::string& Regex::letter_name() const { return node_->name; }
std::size_t Regex::arity() const { return node_->children.size(); }
Regex Regex::child(std::size_t i) const { return node_->children.at(i); }

bool operator==(const Regex& lhs, const Regex& rhs) {
  const Regex::Node* x = lhs.node_.get();
  const Regex::Node* y = rhs.node_.get();
  if (x == y) return true;
  if (x->kind != y->kind || x->name != y->name) return false;
  if (x->children.size() != y->children.size()) return false;
  for (std::size_t i = 0; i < x->children.size(); ++i) {
    if (!(x->children[i] == y->children[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------- parsing

namespace {

class RegexParser {
 public:
  RegexParser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Regex parse() {
    Regex r = alternation();
    skip_ws();
    if (pos_ < text_.size()) {
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c != '|' && c != ')' && c != '*' && c != '+';
  }

  Regex alternation() {
    std::vector<Regex> branches;
    branches.push_back(concatenation());
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '|') {
        ++pos_;
        branches.push_back(concatenation());
      } else {
        break;
      }
    }
    if (branches.size() == 1) return std::move(branches.front());
    return Regex::alternation(std::move(branches));
  }

  Regex concatenation() {
    std::vector<Regex> parts;
    if (!at_atom_start()) {
      throw ParseError("expected a letter or '('",
                       pos_ < text_.size() ? pos_ : text_.size());
    }
    while (at_atom_start()) parts.push_back(postfix());
    if (parts.size() == 1) return std::move(parts.front());
    return Regex::concat(std::move(parts));
  }

  Regex postfix() {
    Regex r = primary();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        r = Regex::star(std::move(r));
      } else if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        r = Regex::plus(std::move(r));
      } else {
        return r;
      }
    }
  }

  Regex primary() {
    skip_ws();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Regex r = alternation();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("expected ')'", pos_ < text_.size() ? pos_ : text_.size());
      }
      ++pos_;
      return r;
    }
    std::size_t start = pos_;
    std::string name;
    if (c == '{') {
      std::size_t close = text_.find('}', pos_);
      if (close == std::string_view::npos) throw ParseError("unterminated set letter", start);
      name = std::string(text_.substr(pos_, close - pos_ + 1));
      pos_ = close + 1;
    } else {
      name = std::string(1, c);
      ++pos_;
    }
    if (!alphabet_.index(name)) {
      throw ParseError("letter '" + name + "' is not in the alphabet", start);
    }
    return Regex::letter(std::move(name));
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

void print_node(const Regex& r, std::string& out) {
  auto wrapped = [&out](const Regex& child, bool parens) {
    if (parens) out += '(';
    print_node(child, out);
    if (parens) out += ')';
  };
  switch (r.kind()) {
    case RegexKind::kLetter:
      out += r.letter_name();
      break;
    case RegexKind::kConcat:
      for (std::size_t i = 0; i < r.arity(); ++i) {
        RegexKind k = r.child(i).kind();
        wrapped(r.child(i), k == RegexKind::kUnion || k == RegexKind::kConcat);
      }
      break;
    case RegexKind::kUnion:
      for (std::size_t i = 0; i < r.arity(); ++i) {
        if (i) out += '|';
        wrapped(r.child(i), r.child(i).kind() == RegexKind::kUnion);
      }
      break;
    case RegexKind::kStar:
    case RegexKind::kPlus: {
      RegexKind k = r.child(0).kind();
      wrapped(r.child(0), k == RegexKind::kUnion || k == RegexKind::kConcat);
      out += (r.kind() == RegexKind::kStar) ? '*' : '+';
      break;
    }
  }
}

}  // namespace

Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
  return RegexParser(text, alphabet).parse();
}

std::string print_regex(const Regex& regex) {
  std::string out;
  print_node(regex, out);
  return out;
}

std::string Regex::to_string() const { return print_regex(*this); }

}  // namespace fosep
