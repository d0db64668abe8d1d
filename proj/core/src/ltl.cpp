#include "fosep/ltl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "fosep/alphabet.hpp"
#include "fosep/errors.hpp"

namespace fosep {

struct LtlFormula::Node {
  LtlKind kind;
  std::string name;                 // kVar only
  std::shared_ptr<const Node> a;    // first child
  std::shared_ptr<const Node> b;    // second child (binary kinds)
};

namespace {

using NodePtr = std::shared_ptr<const LtlFormula::Node>;

NodePtr make_node(LtlKind kind, std::string name, NodePtr a, NodePtr b) {
  auto n = std::make_shared<LtlFormula::Node>();
  n->kind = kind;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

}  // namespace

LtlFormula LtlFormula::top() {
  return LtlFormula(make_node(LtlKind::kTrue, {}, nullptr, nullptr));
}
LtlFormula LtlFormula::var(std::string name) {
  if (!is_identifier(name)) throw InvalidInputError("invalid variable name: " + name);
  return LtlFormula(make_node(LtlKind::kVar, std::move(name), nullptr, nullptr));
}
LtlFormula LtlFormula::negation(LtlFormula operand) {
  return LtlFormula(make_node(LtlKind::kNot, {}, std::move(operand.node_), nullptr));
}
LtlFormula LtlFormula::conjunction(LtlFormula lhs, LtlFormula rhs) {
  return LtlFormula(make_node(LtlKind::kAnd, {}, std::move(lhs.node_), std::move(rhs.node_)));
}
LtlFormula LtlFormula::disjunction(LtlFormula lhs, LtlFormula rhs) {
  return LtlFormula(make_node(LtlKind::kOr, {}, std::move(lhs.node_), std::move(rhs.node_)));
}
LtlFormula LtlFormula::implication(LtlFormula lhs, LtlFormula rhs) {
  return LtlFormula(make_node(LtlKind::kImplies, {}, std::move(lhs.node_), std::move(rhs.node_)));
}
LtlFormula LtlFormula::equivalence(LtlFormula lhs, LtlFormula rhs) {
  return LtlFormula(make_node(LtlKind::kIff, {}, std::move(lhs.node_), std::move(rhs.node_)));
}
LtlFormula LtlFormula::next(LtlFormula operand) {
  return LtlFormula(make_node(LtlKind::kNext, {}, std::move(operand.node_), nullptr));
}
LtlFormula LtlFormula::eventually(LtlFormula operand) {
  return LtlFormula(make_node(LtlKind::kEventually, {}, std::move(operand.node_), nullptr));
}
LtlFormula LtlFormula::always(LtlFormula operand) {
  return LtlFormula(make_node(LtlKind::kGlobally, {}, std::move(operand.node_), nullptr));
}
LtlFormula LtlFormula::until(LtlFormula eventuality, LtlFormula interim) {
  return LtlFormula(
      make_node(LtlKind::kUntil, {}, std::move(eventuality.node_), std::move(interim.node_)));
}

LtlKind LtlFormula::kind() const { return node_->kind; }

const std::string& LtlFormula::var_name() const { return node_->name; }

std::size_t LtlFormula::arity() const {
  switch (node_->kind) {
    case LtlKind::kTrue:
    case LtlKind::kVar:
      return 0;
    case LtlKind::kNot:
    case LtlKind::kNext:
    case LtlKind::kEventually:
    case LtlKind::kGlobally:
      return 1;
    default:
      return 2;
  }
}

LtlFormula LtlFormula::child(std::size_t i) const {
  return LtlFormula(i == 0 ? node_->a : node_->b);
}

namespace {

void collect_vars(const LtlFormula::Node* n, std::set<std::string>& out) {
  if (!n) return;
  if (n->kind == LtlKind::kVar) out.insert(n->name);
  collect_vars(n->a.get(), out);
  collect_vars(n->b.get(), out);
}

bool node_equal(const LtlFormula::Node* x, const LtlFormula::Node* y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind || x->name != y->name) return false;
  return node_equal(x->a.get(), y->a.get()) && node_equal(x->b.get(), y->b.get());
}

}  // namespace

std::vector<std::string> LtlFormula::variables() const {
  std::set<std::string> s;
  collect_vars(node_.get(), s);
  return std::vector<std::string>(s.begin(), s.end());
}

bool operator==(const LtlFormula& lhs, const LtlFormula& rhs) {
  return node_equal(lhs.node_.get(), rhs.node_.get());
}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok {
  kEnd, kIdent, kTrue, kFalse, kNot, kAnd, kOr, kImplies, kIff,
  kNext, kFuture, kAlways, kUntil, kLParen, kRParen,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex_ltl(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
        ++j;
      }
      std::string word(s.substr(i, j - i));
      i = j;
      Tok k = Tok::kIdent;
      if (word == "true") k = Tok::kTrue;
      else if (word == "false") k = Tok::kFalse;
      else if (word == "X") k = Tok::kNext;
      else if (word == "F") k = Tok::kFuture;
      else if (word == "G") k = Tok::kAlways;
      else if (word == "U") k = Tok::kUntil;
      out.push_back({k, std::move(word), start});
      continue;
    }
    switch (c) {
      case '!': out.push_back({Tok::kNot, "!", start}); ++i; break;
      case '&': out.push_back({Tok::kAnd, "&", start}); ++i; break;
      case '|': out.push_back({Tok::kOr, "|", start}); ++i; break;
      case '(': out.push_back({Tok::kLParen, "(", start}); ++i; break;
      case ')': out.push_back({Tok::kRParen, ")", start}); ++i; break;
      case '-':
        if (s.substr(i, 2) == "->") {
          out.push_back({Tok::kImplies, "->", start});
          i += 2;
        } else {
          throw ParseError("expected '->'", start);
        }
        break;
      case '<':
        if (s.substr(i, 3) == "<->") {
          out.push_back({Tok::kIff, "<->", start});
          i += 3;
        } else {
          throw ParseError("expected '<->'", start);
        }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

class LtlParser {
 public:
  explicit LtlParser(std::string_view text) : toks_(lex_ltl(text)) {}

  LtlFormula parse() {
    LtlFormula f = equivalence();
    expect(Tok::kEnd, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) {
      throw ParseError(std::string("expected ") + what +
                           (peek().kind == Tok::kEnd ? " but found end of input"
                                                     : " but found '" + peek().text + "'"),
                       peek().pos);
    }
  }

  LtlFormula equivalence() {  // left-associative
    LtlFormula f = implication();
    while (accept(Tok::kIff)) f = LtlFormula::equivalence(f, implication());
    return f;
  }
  LtlFormula implication() {  // right-associative
    LtlFormula f = disjunction();
    if (accept(Tok::kImplies)) return LtlFormula::implication(f, implication());
    return f;
  }
  LtlFormula disjunction() {
    LtlFormula f = conjunction();
    while (accept(Tok::kOr)) f = LtlFormula::disjunction(f, conjunction());
    return f;
  }
  LtlFormula conjunction() {
    LtlFormula f = until_level();
    while (accept(Tok::kAnd)) f = LtlFormula::conjunction(f, until_level());
    return f;
  }
  LtlFormula until_level() {  // right-associative
    LtlFormula f = unary();
    if (accept(Tok::kUntil)) return LtlFormula::until(f, until_level());
    return f;
  }
  LtlFormula unary() {
    if (accept(Tok::kNot)) return LtlFormula::negation(unary());
    if (accept(Tok::kNext)) return LtlFormula::next(unary());
    if (accept(Tok::kFuture)) return LtlFormula::eventually(unary());
    if (accept(Tok::kAlways)) return LtlFormula::always(unary());
    return atom();
  }
  LtlFormula atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kTrue:
        take();
        return LtlFormula::top();
      case Tok::kFalse:
        take();
        return LtlFormula::negation(LtlFormula::top());
      case Tok::kIdent: {
        Token tok = take();
        return LtlFormula::var(std::move(tok.text));
      }
      case Tok::kLParen: {
        take();
        LtlFormula f = equivalence();
        expect(Tok::kRParen, "')'");
        return f;
      }
      case Tok::kEnd:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength; larger binds tighter.
int level(LtlKind k) {
  switch (k) {
    case LtlKind::kIff: return 1;
    case LtlKind::kImplies: return 2;
    case LtlKind::kOr: return 3;
    case LtlKind::kAnd: return 4;
    case LtlKind::kUntil: return 5;
    default: return 6;  // unary operators and atoms
  }
}

void print_node(const LtlFormula& f, std::string& out);

void print_child(const LtlFormula& child, bool need_parens, std::string& out) {
  if (need_parens) {
    out += '(';
    print_node(child, out);
    out += ')';
  } else {
    print_node(child, out);
  }
}

void print_unary(const char* op, bool spaced, const LtlFormula& operand, std::string& out) {
  bool parens = level(operand.kind()) < 6;
  out += op;
  if (spaced && !parens) out += ' ';
  print_child(operand, parens, out);
}

// `right_assoc` controls which equal-precedence child keeps its parentheses.
void print_binary(const LtlFormula& f, const char* op, bool right_assoc, std::string& out) {
  int lv = level(f.kind());
  int ll = level(f.child(0).kind());
  int lr = level(f.child(1).kind());
  print_child(f.child(0), right_assoc ? ll <= lv : ll < lv, out);
  out += ' ';
  out += op;
  out += ' ';
  print_child(f.child(1), right_assoc ? lr < lv : lr <= lv, out);
}

void print_node(const LtlFormula& f, std::string& out) {
  switch (f.kind()) {
    case LtlKind::kTrue: out += "true"; break;
    case LtlKind::kVar: out += f.var_name(); break;
    case LtlKind::kNot: print_unary("!", false, f.child(0), out); break;
    case LtlKind::kNext: print_unary("X", true, f.child(0), out); break;
    case LtlKind::kEventually: print_unary("F", true, f.child(0), out); break;
    case LtlKind::kGlobally: print_unary("G", true, f.child(0), out); break;
    case LtlKind::kAnd: print_binary(f, "&", false, out); break;
    case LtlKind::kOr: print_binary(f, "|", false, out); break;
    case LtlKind::kImplies: print_binary(f, "->", true, out); break;
    case LtlKind::kIff: print_binary(f, "<->", false, out); break;
    case LtlKind::kUntil: print_binary(f, "U", true, out); break;
  }
}

}  // namespace

LtlFormula parse_ltl(std::string_view text) { return LtlParser(text).parse(); }

std::string print_ltl(const LtlFormula& formula) {
  std::string out;
  print_node(formula, out);
  return out;
}

std::string LtlFormula::to_string() const { return print_ltl(*this); }

}  // namespace fosep
