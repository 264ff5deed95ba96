#include "runo/formula.hpp"

#include <cctype>

namespace runo {

Formula Formula::make(FormulaOp op, std::vector<Formula> kids) {
  return Formula(std::make_shared<const Node>(Node{op, {}, std::move(kids)}));
}

Formula::Formula() : Formula(bot()) {}

Formula Formula::var(std::string name) {
  return Formula(std::make_shared<const Node>(Node{FormulaOp::Var, std::move(name), {}}));
}
Formula Formula::bot() {
  static const Formula b(std::make_shared<const Node>(Node{FormulaOp::Bot, {}, {}}));
  return b;
}
Formula Formula::top() {
  static const Formula t(std::make_shared<const Node>(Node{FormulaOp::Top, {}, {}}));
  return t;
}
Formula Formula::lor(Formula l, Formula r) { return make(FormulaOp::Or, {std::move(l), std::move(r)}); }
Formula Formula::land(Formula l, Formula r) { return make(FormulaOp::And, {std::move(l), std::move(r)}); }
Formula Formula::imp(Formula l, Formula r) { return make(FormulaOp::Imp, {std::move(l), std::move(r)}); }
Formula Formula::dneg(Formula f) { return make(FormulaOp::Dneg, {std::move(f)}); }
Formula Formula::imp_h(Formula l, Formula r) {
  return make(FormulaOp::ImpH, {std::move(l), std::move(r)});
}
Formula Formula::iff_h(Formula l, Formula r) {
  return make(FormulaOp::IffH, {std::move(l), std::move(r)});
}
Formula Formula::neg(Formula f) { return make(FormulaOp::Neg, {std::move(f)}); }

FormulaOp Formula::op() const noexcept { return node_->op; }
const std::string& Formula::name() const noexcept { return node_->name; }
const Formula& Formula::lhs() const { return node_->kids.at(0); }
const Formula& Formula::rhs() const { return node_->kids.at(1); }
bool Formula::is_binary() const noexcept { return node_->kids.size() == 2; }
bool Formula::is_unary() const noexcept { return node_->kids.size() == 1; }

std::set<std::string> Formula::variables() const {
  std::set<std::string> out;
  std::vector<const Formula*> todo{this};
  while (!todo.empty()) {
    const Formula* f = todo.back();
    todo.pop_back();
    if (f->op() == FormulaOp::Var) out.insert(f->name());
    for (const auto& k : f->node_->kids) todo.push_back(&k);
  }
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  std::vector<std::pair<const Formula*, const Formula*>> todo{{&a, &b}};
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    if (x->node_ == y->node_) continue;
    if (x->op() != y->op() || x->name() != y->name()) return false;
    const auto& kx = x->node_->kids;
    const auto& ky = y->node_->kids;
    if (kx.size() != ky.size()) return false;
    for (std::size_t i = 0; i < kx.size(); ++i) todo.emplace_back(&kx[i], &ky[i]);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { End, LParen, RParen, Or, And, Imp, ImpH, IffH, Dneg, Neg, Bot, Top, Ident, Macro };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool heyting_suffix(std::string_view s, std::size_t at) {
  return at < s.size() && s[at] == 'h' && (at + 1 >= s.size() || !ident_char(s[at + 1]));
}

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
    else if (c == '~') push(Tok::Dneg, 1);
    else if (c == '!') push(Tok::Neg, 1);
    else if (s.substr(i, 2) == "\\/") push(Tok::Or, 2);
    else if (s.substr(i, 2) == "/\\") push(Tok::And, 2);
    else if (s.substr(i, 3) == "<->" && heyting_suffix(s, i + 3)) push(Tok::IffH, 4);
    else if (s.substr(i, 2) == "->") {
      if (heyting_suffix(s, i + 2)) push(Tok::ImpH, 3);
      else push(Tok::Imp, 2);
    } else if (c == '@') {
      std::size_t j = i + 1;
      while (j < s.size() && ident_char(s[j])) ++j;
      push(Tok::Macro, j - i);
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      const auto word = s.substr(i, j - i);
      push(word == "bot" ? Tok::Bot : word == "top" ? Tok::Top : Tok::Ident, j - i);
    } else {
      throw ParseError(start, {"formula"}, std::string("'") + c + "'");
    }
  }
  out.push_back({Tok::End, s.size(), {}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula whole() {
    Formula f = formula();
    if (peek().kind != Tok::End) fail({"<->h", "->", "->h", "\\/", "/\\", "end of input"});
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.pos, std::move(expected),
                     t.kind == Tok::End ? "end of input" : "'" + t.text + "'");
  }

  Formula formula() {
    Formula l = impl();
    if (peek().kind == Tok::IffH) {
      ++pos_;
      return Formula::iff_h(std::move(l), impl());
    }
    return l;
  }

  Formula impl() {
    Formula l = disj();
    if (peek().kind == Tok::Imp || peek().kind == Tok::ImpH) {
      const bool heyting = peek().kind == Tok::ImpH;
      ++pos_;
      Formula r = impl();
      return heyting ? Formula::imp_h(std::move(l), std::move(r))
                     : Formula::imp(std::move(l), std::move(r));
    }
    return l;
  }

  Formula disj() {
    Formula l = conj();
    while (peek().kind == Tok::Or) {
      ++pos_;
      l = Formula::lor(std::move(l), conj());
    }
    return l;
  }

  Formula conj() {
    Formula l = unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      l = Formula::land(std::move(l), unary());
    }
    return l;
  }

  Formula unary() {
    std::vector<Tok> ops;
    while (peek().kind == Tok::Dneg || peek().kind == Tok::Neg) {
      ops.push_back(peek().kind);
      ++pos_;
    }
    Formula f = base();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
      f = *it == Tok::Dneg ? Formula::dneg(std::move(f)) : Formula::neg(std::move(f));
    return f;
  }

  Formula base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Bot: ++pos_; return Formula::bot();
      case Tok::Top: ++pos_; return Formula::top();
      case Tok::Ident: ++pos_; return Formula::var(t.text);
      case Tok::Macro: {
        const Formula alpha = Formula::imp(Formula::bot(), Formula::top());
        const Formula beta = Formula::imp(Formula::bot(), alpha);
        if (t.text == "@alpha") { ++pos_; return alpha; }
        if (t.text == "@beta") { ++pos_; return beta; }
        if (t.text == "@gamma") { ++pos_; return Formula::imp(Formula::bot(), beta); }
        fail({"@alpha", "@beta", "@gamma"});
      }
      case Tok::LParen: {
        ++pos_;
        Formula inner = formula();
        if (peek().kind != Tok::RParen) fail({")", "<->h", "->", "->h", "\\/", "/\\"});
        ++pos_;
        return inner;
      }
      default: fail({"bot", "top", "variable", "@alpha", "@beta", "@gamma", "~", "!", "("});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int prec(FormulaOp op) {
  switch (op) {
    case FormulaOp::IffH: return 0;
    case FormulaOp::Imp:
    case FormulaOp::ImpH: return 1;
    case FormulaOp::Or: return 2;
    case FormulaOp::And: return 3;
    case FormulaOp::Dneg:
    case FormulaOp::Neg: return 4;
    default: return 5;
  }
}

void print(const Formula& f, int min_prec, std::string& out) {
  const bool parens = prec(f.op()) < min_prec;
  if (parens) out += '(';
  switch (f.op()) {
    case FormulaOp::Var: out += f.name(); break;
    case FormulaOp::Bot: out += "bot"; break;
    case FormulaOp::Top: out += "top"; break;
    case FormulaOp::IffH:
      print(f.lhs(), 1, out);
      out += " <->h ";
      print(f.rhs(), 1, out);
      break;
    case FormulaOp::Imp:
    case FormulaOp::ImpH:
      print(f.lhs(), 2, out);
      out += f.op() == FormulaOp::Imp ? " -> " : " ->h ";
      print(f.rhs(), 1, out);
      break;
    case FormulaOp::Or:
      print(f.lhs(), 2, out);
      out += " \\/ ";
      print(f.rhs(), 3, out);
      break;
    case FormulaOp::And:
      print(f.lhs(), 3, out);
      out += " /\\ ";
      print(f.rhs(), 4, out);
      break;
    case FormulaOp::Dneg:
    case FormulaOp::Neg:
      out += f.op() == FormulaOp::Dneg ? '~' : '!';
      print(f.lhs(), 4, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).whole(); }

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

Formula desugar(const Formula& f) {
  switch (f.op()) {
    case FormulaOp::Var:
    case FormulaOp::Bot:
    case FormulaOp::Top: return f;
    case FormulaOp::Or: return Formula::lor(desugar(f.lhs()), desugar(f.rhs()));
    case FormulaOp::And: return Formula::land(desugar(f.lhs()), desugar(f.rhs()));
    case FormulaOp::Imp: return Formula::imp(desugar(f.lhs()), desugar(f.rhs()));
    case FormulaOp::Dneg: return Formula::dneg(desugar(f.lhs()));
    case FormulaOp::Neg: return Formula::imp(desugar(f.lhs()), Formula::bot());
    case FormulaOp::ImpH: {
      const Formula a = desugar(f.lhs()), b = desugar(f.rhs());
      return Formula::imp(a, Formula::land(a, b));
    }
    case FormulaOp::IffH: {
      const Formula a = desugar(f.lhs()), b = desugar(f.rhs());
      return Formula::land(Formula::imp(a, Formula::land(a, b)),
                           Formula::imp(b, Formula::land(b, a)));
    }
  }
  return f;
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& sigma) {
  switch (f.op()) {
    case FormulaOp::Var: {
      const auto it = sigma.find(f.name());
      return it == sigma.end() ? f : it->second;
    }
    case FormulaOp::Bot:
    case FormulaOp::Top: return f;
    case FormulaOp::Or: return Formula::lor(substitute(f.lhs(), sigma), substitute(f.rhs(), sigma));
    case FormulaOp::And: return Formula::land(substitute(f.lhs(), sigma), substitute(f.rhs(), sigma));
    case FormulaOp::Imp: return Formula::imp(substitute(f.lhs(), sigma), substitute(f.rhs(), sigma));
    case FormulaOp::ImpH:
      return Formula::imp_h(substitute(f.lhs(), sigma), substitute(f.rhs(), sigma));
    case FormulaOp::IffH:
      return Formula::iff_h(substitute(f.lhs(), sigma), substitute(f.rhs(), sigma));
    case FormulaOp::Dneg: return Formula::dneg(substitute(f.lhs(), sigma));
    case FormulaOp::Neg: return Formula::neg(substitute(f.lhs(), sigma));
  }
  return f;
}

std::optional<std::map<std::string, Formula>> match(const Formula& pattern, const Formula& f) {
  std::map<std::string, Formula> sigma;
  std::vector<std::pair<const Formula*, const Formula*>> todo{{&pattern, &f}};
  while (!todo.empty()) {
    auto [p, g] = todo.back();
    todo.pop_back();
    if (p->op() == FormulaOp::Var) {
      const auto [it, fresh] = sigma.emplace(p->name(), *g);
      if (!fresh && it->second != *g) return std::nullopt;
      continue;
    }
    if (p->op() != g->op()) return std::nullopt;
    if (p->is_unary()) todo.emplace_back(&p->lhs(), &g->lhs());
    if (p->is_binary()) {
      todo.emplace_back(&p->lhs(), &g->lhs());
      todo.emplace_back(&p->rhs(), &g->rhs());
    }
  }
  return sigma;
}

Term to_term(const Formula& f) {
  switch (f.op()) {
    case FormulaOp::Var: return Term::var(f.name());
    case FormulaOp::Bot: return Term::zero();
    case FormulaOp::Top: return Term::one();
    case FormulaOp::Or: return Term::join(to_term(f.lhs()), to_term(f.rhs()));
    case FormulaOp::And: return Term::meet(to_term(f.lhs()), to_term(f.rhs()));
    case FormulaOp::Imp: return Term::imp(to_term(f.lhs()), to_term(f.rhs()));
    case FormulaOp::ImpH: return Term::imp_h(to_term(f.lhs()), to_term(f.rhs()));
    case FormulaOp::IffH: {
      const Term a = to_term(f.lhs()), b = to_term(f.rhs());
      return Term::meet(Term::imp_h(a, b), Term::imp_h(b, a));
    }
    case FormulaOp::Dneg: return Term::neg(to_term(f.lhs()));
    case FormulaOp::Neg: return Term::star(to_term(f.lhs()));
  }
  return Term::zero();
}

Formula from_term(const Term& t) {
  switch (t.op()) {
    case TermOp::Var: return Formula::var(t.name());
    case TermOp::Zero: return Formula::bot();
    case TermOp::One: return Formula::top();
    case TermOp::Join: return Formula::lor(from_term(t.lhs()), from_term(t.rhs()));
    case TermOp::Meet: return Formula::land(from_term(t.lhs()), from_term(t.rhs()));
    case TermOp::Imp: return Formula::imp(from_term(t.lhs()), from_term(t.rhs()));
    case TermOp::ImpH: return Formula::imp_h(from_term(t.lhs()), from_term(t.rhs()));
    case TermOp::Neg: return Formula::dneg(from_term(t.lhs()));
    case TermOp::Star: return Formula::neg(from_term(t.lhs()));
    case TermOp::Plus: return Formula::dneg(Formula::neg(Formula::dneg(from_term(t.lhs()))));
  }
  return Formula::bot();
}

}  // namespace runo
