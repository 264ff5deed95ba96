#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "runo/term.hpp"

namespace runo {

/// Connectives of the logic. Dneg is the De Morgan negation ~; ImpH, IffH and
/// Neg (the pseudocomplement !a = a -> bot) are abbreviations.
enum class FormulaOp : std::uint8_t { Var, Bot, Top, Or, And, Imp, Dneg, ImpH, IffH, Neg };

class Formula {
 public:
  /// bot
  Formula();

  static Formula var(std::string name);
  static Formula bot();
  static Formula top();
  static Formula lor(Formula l, Formula r);
  static Formula land(Formula l, Formula r);
  static Formula imp(Formula l, Formula r);
  static Formula dneg(Formula f);
  static Formula imp_h(Formula l, Formula r);
  static Formula iff_h(Formula l, Formula r);
  static Formula neg(Formula f);

  FormulaOp op() const noexcept;
  const std::string& name() const noexcept;
  const Formula& lhs() const;
  const Formula& rhs() const;
  bool is_binary() const noexcept;
  bool is_unary() const noexcept;

  std::set<std::string> variables() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(FormulaOp op, std::vector<Formula> kids);
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  FormulaOp op;
  std::string name;
  std::vector<Formula> kids;
};

/// ASCII grammar:
///   formula := impl ("<->h" impl)?
///   impl    := disj (("->" | "->h") impl)?      right-associative
///   disj    := conj ("\/" conj)*
///   conj    := unary ("/\" unary)*
///   unary   := ("~" | "!")* base
///   base    := "bot" | "top" | ident | "@alpha" | "@beta" | "@gamma" | "(" formula ")"
/// @alpha = bot -> top, @beta = bot -> @alpha, @gamma = bot -> @beta.
/// Throws ParseError.
Formula parse_formula(std::string_view text);

/// Minimal-parenthesis rendering; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Expand ImpH, IffH and Neg into Or/And/Imp/Dneg/Bot.
Formula desugar(const Formula& f);

Formula substitute(const Formula& f, const std::map<std::string, Formula>& sigma);

/// Binds the variables of `pattern` so that pattern[sigma] == f, if possible.
/// Both sides are compared as given (callers desugar first when needed).
std::optional<std::map<std::string, Formula>> match(const Formula& pattern, const Formula& f);

/// Signature translation: \/ /\ -> stay, ~ becomes ', bot 0, top 1, ! becomes *,
/// ->h stays ->h, <->h becomes the meet of both ->h directions.
Term to_term(const Formula& f);
/// Inverse translation; x+ becomes ~!~x.
Formula from_term(const Term& t);

}  // namespace runo
