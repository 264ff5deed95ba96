#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "runo/builtin.hpp"
#include "runo/term.hpp"

using namespace runo;

namespace {

Term random_term(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 9);
  switch (pick(rng)) {
    case 0: return Term::var("x");
    case 1: return Term::var(rng() % 2 ? "y" : "z");
    case 2: return rng() % 2 ? Term::zero() : Term::one();
    case 3: return Term::join(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 4: return Term::meet(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 5: return Term::imp(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 6: return Term::neg(random_term(rng, depth - 1));
    case 7: return Term::star(random_term(rng, depth - 1));
    case 8: return Term::plus(random_term(rng, depth - 1));
    default: return Term::imp_h(random_term(rng, depth - 1), random_term(rng, depth - 1));
  }
}

bool has_sugar(const Term& t) {
  if (t.is_sugar()) return true;
  if (t.is_binary()) return has_sugar(t.lhs()) || has_sugar(t.rhs());
  if (t.is_unary()) return has_sugar(t.lhs());
  return false;
}

}  // namespace

TEST_CASE("parsing builds the expected trees") {
  const Term x = Term::var("x");
  CHECK(parse_term("(0 -> 1)'") == Term::neg(Term::imp(Term::zero(), Term::one())));
  CHECK(parse_term("x /\\ x'*") == Term::meet(x, Term::star(Term::neg(x))));
  const Equation e = parse_equation("x -> x = 1");
  CHECK(e.lhs == Term::imp(x, x));
  CHECK(e.rhs == Term::one());
  CHECK(e.variables() == std::vector<std::string>{"x"});
  CHECK_FALSE(e.closed());
  CHECK(parse_equation("0 = 1").closed());
}

TEST_CASE("precedence and associativity") {
  const Term x = Term::var("x"), y = Term::var("y"), z = Term::var("z");
  CHECK(parse_term("x -> y -> z") == Term::imp(x, Term::imp(y, z)));
  CHECK(parse_term("x \\/ y /\\ z") == Term::join(x, Term::meet(y, z)));
  CHECK(parse_term("x /\\ y -> z") == Term::imp(Term::meet(x, y), z));
  CHECK(parse_term("x ->h y") == Term::imp_h(x, y));
  CHECK(parse_term("x'+*") == Term::star(Term::plus(Term::neg(x))));
  CHECK(parse_term("x \\/ y \\/ z") == Term::join(Term::join(x, y), z));
}

TEST_CASE("macros") {
  const Term a = Term::imp(Term::zero(), Term::one());
  const Term b = Term::imp(Term::zero(), a);
  CHECK(parse_term("@a") == a);
  CHECK(parse_term("@b") == b);
  CHECK(parse_term("@c") == Term::imp(Term::zero(), b));
}

TEST_CASE("parse errors carry a position") {
  for (const char* bad : {"", "x ->", "(x", "x = ", "x \\/ /\\ y", "#", "x y"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_term(bad), ParseError);
  }
  try {
    parse_term("x -> ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_equation("x -> y"), ParseError);
}

TEST_CASE("evaluation examples") {
  CHECK(eval(builtin(1), parse_term("0 -> 1"), {}) == 2);
  CHECK(eval(builtin(2), parse_term("(0 -> 1) -> 1"), {}) == 2);
  CHECK(eval(builtin(5), parse_term("x \\/ x'"), {{"x", 2}}) == 2);
  CHECK_THROWS_AS(eval(builtin(1), parse_term("x -> y"), {{"x", 0}}), UnboundVariable);
}

TEST_CASE("substitution") {
  const Term x = Term::var("x"), y = Term::var("y");
  CHECK(substitute(Term::imp(x, y), {{"x", Term::zero()}, {"y", Term::one()}}) ==
        Term::imp(Term::zero(), Term::one()));
  CHECK(substitute(x, {}) == x);
  CHECK(substitute(Term::meet(x, y), {{"x", y}}) == Term::meet(y, y));
  // simultaneous, not sequential
  CHECK(substitute(Term::imp(x, y), {{"x", y}, {"y", x}}) == Term::imp(y, x));
}

TEST_CASE("random terms: evaluator, desugaring and printing") {
  std::mt19937 rng(20240601);
  for (int round = 0; round < 300; ++round) {
    const Term t = random_term(rng, 5);
    CAPTURE(to_string(t));
    CHECK(parse_term(to_string(t)) == t);
    const Term d = desugar(t);
    CHECK_FALSE(has_sugar(d));
    CHECK(desugar(d) == d);
    const std::vector<std::string> slots{"x", "y", "z"};
    const CompiledTerm c(t, slots);
    for (int i = 1; i <= 5; ++i) {
      const auto& ref = oracle::table(i);
      oracle::for_each_valuation(ref.n, slots, [&](const std::map<std::string, int>& v) {
        Valuation val;
        std::vector<Element> vals;
        for (const auto& s : slots) {
          val[s] = static_cast<Element>(v.at(s));
          vals.push_back(static_cast<Element>(v.at(s)));
        }
        const int want = oracle::eval(ref, t, v);
        CHECK(eval(builtin(i), t, val) == want);
        CHECK(eval(builtin(i), d, val) == want);
        CHECK(c.eval(builtin(i), vals) == want);
      });
    }
  }
}

TEST_CASE("depth ten thousand") {
  constexpr int kDepth = 10000;
  Term t = Term::var("x");
  for (int i = 0; i < kDepth; ++i) t = Term::neg(t);
  CHECK(eval(builtin(1), t, {{"x", 0}}) == 0);  // even number of negations

  Term chain = Term::var("x");
  for (int i = 0; i < kDepth; ++i) chain = Term::imp(Term::var("x"), chain);
  // x -> (x -> ... -> x) in A5 at x = 3: 3 -> 3 = 1, 3 -> 1 = 1
  CHECK(eval(builtin(5), chain, {{"x", 3}}) == 1);
  CHECK(chain == chain);
  CHECK(desugar(chain) == chain);

  std::string primes = "x";
  primes.append(kDepth + 1, '\'');
  CHECK(eval(builtin(1), parse_term(primes), {{"x", 0}}) == 1);

  std::string nested;
  for (int i = 0; i < kDepth; ++i) nested += "(";
  nested += "x";
  for (int i = 0; i < kDepth; ++i) nested += ")";
  CHECK(parse_term(nested) == Term::var("x"));
}
