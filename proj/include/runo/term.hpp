#pragma once

#include <map>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "runo/algebra.hpp"

namespace runo {

enum class TermOp : std::uint8_t { Var, Zero, One, Join, Meet, Imp, Neg, Star, Plus, ImpH };

/// Immutable term over <\/, /\, ->, ', 0, 1> plus the derived symbols
/// x* = x -> 0, x+ = x'*' and x ->h y = x -> (x /\ y). Subterms are shared.
class Term {
 public:
  /// The constant 0.
  Term();
  static Term var(std::string name);
  static Term zero();
  static Term one();
  static Term join(Term l, Term r);
  static Term meet(Term l, Term r);
  static Term imp(Term l, Term r);
  static Term neg(Term t);
  static Term star(Term t);
  static Term plus(Term t);
  static Term imp_h(Term l, Term r);

  TermOp op() const noexcept;
  /// Variable name; empty for other nodes.
  const std::string& name() const noexcept;
  /// First operand (the only one for unary nodes).
  const Term& lhs() const;
  const Term& rhs() const;

  bool is_binary() const noexcept;
  bool is_unary() const noexcept;
  bool is_sugar() const noexcept;

  std::set<std::string> variables() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  static std::shared_ptr<const Node> leaf(TermOp op, std::string name = {});
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  TermOp op;
  std::string name;
  std::vector<Term> kids;
};

struct Equation {
  Term lhs;
  Term rhs;

  /// Free variables of both sides, sorted by name.
  std::vector<std::string> variables() const;
  bool closed() const { return variables().empty(); }

  friend bool operator==(const Equation&, const Equation&) = default;
};

using Valuation = std::map<std::string, Element>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, std::string found);
  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& name)
      : std::runtime_error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// ASCII grammar:
///   eq      := term "=" term
///   term    := sum (("->" | "->h") term)?        right-associative
///   sum     := prod ("\/" prod)*
///   prod    := postfix ("/\" postfix)*
///   postfix := base ("'" | "*" | "+")*
///   base    := "0" | "1" | ident | "@a" | "@b" | "@c" | "(" term ")"
/// @a, @b, @c expand to 0 -> 1, 0 -> @a and 0 -> @b.
Term parse_term(std::string_view text);
Equation parse_equation(std::string_view text);

/// Minimal-parenthesis rendering; parse_term(to_string(t)) == t.
std::string to_string(const Term& t);
std::string to_string(const Equation& e);

/// Replace Star, Plus and ImpH by their definitions.
Term desugar(const Term& t);

/// Simultaneous substitution; variables outside `sigma` are kept.
Term substitute(const Term& t, const std::map<std::string, Term>& sigma);

/// Throws UnboundVariable if `v` misses a free variable of `t`.
Element eval(const FiniteAlgebra& a, const Term& t, const Valuation& v);

/// Flat postfix program for a term, evaluated without recursion. Variables are
/// bound to slots in the order given at construction.
class CompiledTerm {
 public:
  CompiledTerm(const Term& t, const std::vector<std::string>& slots);

  Element eval(const FiniteAlgebra& a, std::span<const Element> values,
               std::vector<Element>& stack) const;
  Element eval(const FiniteAlgebra& a, std::span<const Element> values) const;

 private:
  struct Instr {
    TermOp op;
    std::uint32_t slot;
  };
  std::vector<Instr> code_;
  std::size_t max_stack_ = 0;
};

}  // namespace runo
