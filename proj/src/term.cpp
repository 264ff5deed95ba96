#include "runo/term.hpp"

#include <algorithm>
#include <cctype>

namespace runo {

std::shared_ptr<const Term::Node> Term::leaf(TermOp op, std::string name) {
  return std::make_shared<const Node>(Node{op, std::move(name), {}});
}

Term::Term() : Term(zero()) {}

Term Term::var(std::string name) { return Term(leaf(TermOp::Var, std::move(name))); }
Term Term::zero() {
  static const Term z(leaf(TermOp::Zero));
  return z;
}
Term Term::one() {
  static const Term o(leaf(TermOp::One));
  return o;
}
Term Term::join(Term l, Term r) {
  return Term(std::make_shared<const Node>(Node{TermOp::Join, {}, {std::move(l), std::move(r)}}));
}
Term Term::meet(Term l, Term r) {
  return Term(std::make_shared<const Node>(Node{TermOp::Meet, {}, {std::move(l), std::move(r)}}));
}
Term Term::imp(Term l, Term r) {
  return Term(std::make_shared<const Node>(Node{TermOp::Imp, {}, {std::move(l), std::move(r)}}));
}
Term Term::imp_h(Term l, Term r) {
  return Term(std::make_shared<const Node>(Node{TermOp::ImpH, {}, {std::move(l), std::move(r)}}));
}
Term Term::neg(Term t) {
  return Term(std::make_shared<const Node>(Node{TermOp::Neg, {}, {std::move(t)}}));
}
Term Term::star(Term t) {
  return Term(std::make_shared<const Node>(Node{TermOp::Star, {}, {std::move(t)}}));
}
Term Term::plus(Term t) {
  return Term(std::make_shared<const Node>(Node{TermOp::Plus, {}, {std::move(t)}}));
}

TermOp Term::op() const noexcept { return node_->op; }
const std::string& Term::name() const noexcept { return node_->name; }
const Term& Term::lhs() const { return node_->kids.at(0); }
const Term& Term::rhs() const { return node_->kids.at(1); }

bool Term::is_binary() const noexcept { return node_->kids.size() == 2; }
bool Term::is_unary() const noexcept { return node_->kids.size() == 1; }
bool Term::is_sugar() const noexcept {
  return op() == TermOp::Star || op() == TermOp::Plus || op() == TermOp::ImpH;
}

std::set<std::string> Term::variables() const {
  std::set<std::string> out;
  std::vector<const Term*> todo{this};
  while (!todo.empty()) {
    const Term* t = todo.back();
    todo.pop_back();
    if (t->op() == TermOp::Var) out.insert(t->name());
    for (const auto& k : t->node_->kids) todo.push_back(&k);
  }
  return out;
}

bool operator==(const Term& a, const Term& b) {
  std::vector<std::pair<const Term*, const Term*>> todo{{&a, &b}};
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    if (x->node_ == y->node_) continue;
    if (x->op() != y->op() || x->name() != y->name()) return false;
    const auto& kx = x->node_->kids;
    const auto& ky = y->node_->kids;
    for (std::size_t i = 0; i < kx.size(); ++i) todo.emplace_back(&kx[i], &ky[i]);
  }
  return true;
}

std::vector<std::string> Equation::variables() const {
  auto vs = lhs.variables();
  vs.merge(rhs.variables());
  return {vs.begin(), vs.end()};
}

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, std::string found)
    : std::runtime_error([&] {
        std::string msg = "parse error at position " + std::to_string(position) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
          if (i) msg += i + 1 == expected.size() ? " or " : ", ";
          msg += expected[i];
        }
        return msg + ", found " + found;
      }()),
      position_(position), expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { End, LParen, RParen, Prime, Star, Plus, Join, Meet, Imp, ImpH, Eq, Zero, One,
                 Ident, Macro };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, start, std::string(s.substr(start, len))});
      i += len;
    };
    if (c == '(') push(Tok::LParen, 1);
    else if (c == ')') push(Tok::RParen, 1);
    else if (c == '\'') push(Tok::Prime, 1);
    else if (c == '*') push(Tok::Star, 1);
    else if (c == '+') push(Tok::Plus, 1);
    else if (c == '=') push(Tok::Eq, 1);
    else if (s.substr(i, 2) == "\\/") push(Tok::Join, 2);
    else if (s.substr(i, 2) == "/\\") push(Tok::Meet, 2);
    else if (s.substr(i, 2) == "->") {
      // "->h" only when the h is not the start of a longer identifier
      if (i + 2 < s.size() && s[i + 2] == 'h' && (i + 3 >= s.size() || !ident_char(s[i + 3])))
        push(Tok::ImpH, 3);
      else
        push(Tok::Imp, 2);
    } else if (c == '@') {
      std::size_t j = i + 1;
      while (j < s.size() && ident_char(s[j])) ++j;
      push(Tok::Macro, j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      const auto digits = s.substr(i, j - i);
      if (digits == "0") push(Tok::Zero, 1);
      else if (digits == "1") push(Tok::One, 1);
      else throw ParseError(start, {"0", "1", "variable"}, "'" + std::string(digits) + "'");
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      push(Tok::Ident, j - i);
    } else {
      throw ParseError(start, {"term"}, std::string("'") + c + "'");
    }
  }
  out.push_back({Tok::End, s.size(), {}});
  return out;
}

Term macro_term(std::string_view name) {
  const Term a = Term::imp(Term::zero(), Term::one());
  if (name == "@a") return a;
  const Term b = Term::imp(Term::zero(), a);
  if (name == "@b") return b;
  return Term::imp(Term::zero(), b);  // @c
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Term whole_term() {
    Term t = term();
    expect_end({"->", "->h", "\\/", "/\\", "'", "*", "+"});
    return t;
  }

  Equation equation() {
    Term l = term();
    if (peek().kind != Tok::Eq) fail({"=", "->", "\\/", "/\\", "postfix operator"});
    ++pos_;
    Term r = term();
    expect_end({"->", "\\/", "/\\", "postfix operator"});
    return {std::move(l), std::move(r)};
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.pos, std::move(expected), t.kind == Tok::End ? "end of input" : "'" + t.text + "'");
  }

  void expect_end(std::vector<std::string> expected) const {
    if (peek().kind != Tok::End) {
      expected.push_back("end of input");
      fail(std::move(expected));
    }
  }

  Term term() {
    Term l = sum();
    if (peek().kind == Tok::Imp || peek().kind == Tok::ImpH) {
      const bool heyting = peek().kind == Tok::ImpH;
      ++pos_;
      Term r = term();
      return heyting ? Term::imp_h(std::move(l), std::move(r)) : Term::imp(std::move(l), std::move(r));
    }
    return l;
  }

  Term sum() {
    Term l = prod();
    while (peek().kind == Tok::Join) {
      ++pos_;
      l = Term::join(std::move(l), prod());
    }
    return l;
  }

  Term prod() {
    Term l = postfix();
    while (peek().kind == Tok::Meet) {
      ++pos_;
      l = Term::meet(std::move(l), postfix());
    }
    return l;
  }

  Term postfix() {
    Term t = base();
    for (;;) {
      switch (peek().kind) {
        case Tok::Prime: t = Term::neg(std::move(t)); break;
        case Tok::Star: t = Term::star(std::move(t)); break;
        case Tok::Plus: t = Term::plus(std::move(t)); break;
        default: return t;
      }
      ++pos_;
    }
  }

  Term base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Zero: ++pos_; return Term::zero();
      case Tok::One: ++pos_; return Term::one();
      case Tok::Ident: ++pos_; return Term::var(t.text);
      case Tok::Macro:
        if (t.text == "@a" || t.text == "@b" || t.text == "@c") {
          ++pos_;
          return macro_term(t.text);
        }
        fail({"@a", "@b", "@c"});
      case Tok::LParen: {
        ++pos_;
        Term inner = term();
        if (peek().kind != Tok::RParen) fail({")", "->", "\\/", "/\\", "postfix operator"});
        ++pos_;
        return inner;
      }
      default: fail({"0", "1", "variable", "@a", "@b", "@c", "("});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Precedence levels used by the printer.
int prec(TermOp op) {
  switch (op) {
    case TermOp::Imp:
    case TermOp::ImpH: return 1;
    case TermOp::Join: return 2;
    case TermOp::Meet: return 3;
    case TermOp::Neg:
    case TermOp::Star:
    case TermOp::Plus: return 4;
    default: return 5;
  }
}

void print(const Term& t, int min_prec, std::string& out) {
  const bool parens = prec(t.op()) < min_prec;
  if (parens) out += '(';
  switch (t.op()) {
    case TermOp::Var: out += t.name(); break;
    case TermOp::Zero: out += '0'; break;
    case TermOp::One: out += '1'; break;
    case TermOp::Join:
      print(t.lhs(), 2, out);
      out += " \\/ ";
      print(t.rhs(), 3, out);
      break;
    case TermOp::Meet:
      print(t.lhs(), 3, out);
      out += " /\\ ";
      print(t.rhs(), 4, out);
      break;
    case TermOp::Imp:
    case TermOp::ImpH:
      print(t.lhs(), 2, out);
      out += t.op() == TermOp::Imp ? " -> " : " ->h ";
      print(t.rhs(), 1, out);
      break;
    case TermOp::Neg:
    case TermOp::Star:
    case TermOp::Plus:
      print(t.lhs(), 4, out);
      out += t.op() == TermOp::Neg ? '\'' : t.op() == TermOp::Star ? '*' : '+';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).whole_term(); }
Equation parse_equation(std::string_view text) { return Parser(text).equation(); }

std::string to_string(const Term& t) {
  std::string out;
  print(t, 0, out);
  return out;
}

std::string to_string(const Equation& e) { return to_string(e.lhs) + " = " + to_string(e.rhs); }

Term desugar(const Term& t) {
  switch (t.op()) {
    case TermOp::Var:
    case TermOp::Zero:
    case TermOp::One: return t;
    case TermOp::Join: return Term::join(desugar(t.lhs()), desugar(t.rhs()));
    case TermOp::Meet: return Term::meet(desugar(t.lhs()), desugar(t.rhs()));
    case TermOp::Imp: return Term::imp(desugar(t.lhs()), desugar(t.rhs()));
    case TermOp::Neg: return Term::neg(desugar(t.lhs()));
    case TermOp::Star: return Term::imp(desugar(t.lhs()), Term::zero());
    case TermOp::Plus:
      return Term::neg(Term::imp(Term::neg(desugar(t.lhs())), Term::zero()));
    case TermOp::ImpH: {
      Term l = desugar(t.lhs());
      return Term::imp(l, Term::meet(l, desugar(t.rhs())));
    }
  }
  return t;
}

Term substitute(const Term& t, const std::map<std::string, Term>& sigma) {
  switch (t.op()) {
    case TermOp::Var: {
      auto it = sigma.find(t.name());
      return it == sigma.end() ? t : it->second;
    }
    case TermOp::Zero:
    case TermOp::One: return t;
    case TermOp::Join: return Term::join(substitute(t.lhs(), sigma), substitute(t.rhs(), sigma));
    case TermOp::Meet: return Term::meet(substitute(t.lhs(), sigma), substitute(t.rhs(), sigma));
    case TermOp::Imp: return Term::imp(substitute(t.lhs(), sigma), substitute(t.rhs(), sigma));
    case TermOp::ImpH: return Term::imp_h(substitute(t.lhs(), sigma), substitute(t.rhs(), sigma));
    case TermOp::Neg: return Term::neg(substitute(t.lhs(), sigma));
    case TermOp::Star: return Term::star(substitute(t.lhs(), sigma));
    case TermOp::Plus: return Term::plus(substitute(t.lhs(), sigma));
  }
  return t;
}

CompiledTerm::CompiledTerm(const Term& t, const std::vector<std::string>& slots) {
  // Iterative post-order walk so very deep terms do not exhaust the stack.
  std::vector<std::pair<const Term*, bool>> todo{{&t, false}};
  std::size_t depth = 0;
  while (!todo.empty()) {
    auto [node, expanded] = todo.back();
    todo.pop_back();
    if (!expanded && (node->is_binary() || node->is_unary())) {
      todo.emplace_back(node, true);
      if (node->is_binary()) todo.emplace_back(&node->rhs(), false);
      todo.emplace_back(&node->lhs(), false);
      continue;
    }
    Instr in{node->op(), 0};
    if (node->op() == TermOp::Var) {
      auto it = std::find(slots.begin(), slots.end(), node->name());
      if (it == slots.end()) throw UnboundVariable(node->name());
      in.slot = static_cast<std::uint32_t>(it - slots.begin());
    }
    if (node->is_binary()) --depth;
    else if (!node->is_unary()) max_stack_ = std::max(max_stack_, ++depth);
    code_.push_back(in);
  }
}

Element CompiledTerm::eval(const FiniteAlgebra& a, std::span<const Element> values,
                           std::vector<Element>& stack) const {
  stack.resize(max_stack_);
  std::size_t sp = 0;
  for (const Instr& in : code_) {
    switch (in.op) {
      case TermOp::Var: stack[sp++] = values[in.slot]; break;
      case TermOp::Zero: stack[sp++] = a.zero(); break;
      case TermOp::One: stack[sp++] = a.one(); break;
      case TermOp::Neg: stack[sp - 1] = a.neg(stack[sp - 1]); break;
      case TermOp::Star: stack[sp - 1] = a.star(stack[sp - 1]); break;
      case TermOp::Plus: stack[sp - 1] = a.plus(stack[sp - 1]); break;
      case TermOp::Join: --sp; stack[sp - 1] = a.join(stack[sp - 1], stack[sp]); break;
      case TermOp::Meet: --sp; stack[sp - 1] = a.meet(stack[sp - 1], stack[sp]); break;
      case TermOp::Imp: --sp; stack[sp - 1] = a.imp(stack[sp - 1], stack[sp]); break;
      case TermOp::ImpH: --sp; stack[sp - 1] = a.imp_h(stack[sp - 1], stack[sp]); break;
    }
  }
  return stack[0];
}

Element CompiledTerm::eval(const FiniteAlgebra& a, std::span<const Element> values) const {
  std::vector<Element> stack;
  return eval(a, values, stack);
}

Element eval(const FiniteAlgebra& a, const Term& t, const Valuation& v) {
  std::vector<std::string> names;
  std::vector<Element> values;
  for (const auto& name : t.variables()) {
    auto it = v.find(name);
    if (it == v.end()) throw UnboundVariable(name);
    if (it->second >= a.size()) throw std::out_of_range("valuation of '" + name + "' outside the carrier");
    names.push_back(name);
    values.push_back(it->second);
  }
  return CompiledTerm(t, names).eval(a, values);
}

}  // namespace runo
