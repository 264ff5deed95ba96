#include <doctest.h>

#include "oracle.hpp"
#include "runo/algebra_json.hpp"
#include "runo/builtin.hpp"
#include "runo/catalog.hpp"

using namespace runo;

namespace {

RawTables raw_a1() { return builtin(1).raw(); }

}  // namespace

TEST_CASE("builtin tables match the hand-typed reference") {
  for (int i = 1; i <= 5; ++i) {
    const FiniteAlgebra& a = builtin(i);
    const auto& t = oracle::table(i);
    REQUIRE(a.size() == static_cast<std::size_t>(t.n));
    CHECK(a.zero() == 0);
    CHECK(a.one() == 1);
    for (int x = 0; x < t.n; ++x) {
      CHECK(a.label(static_cast<Element>(x)) == std::to_string(x));
      CHECK(a.neg(static_cast<Element>(x)) == t.neg[x]);
      for (int y = 0; y < t.n; ++y) {
        const auto ex = static_cast<Element>(x), ey = static_cast<Element>(y);
        CHECK(a.imp(ex, ey) == t.imp[x][y]);
        CHECK(a.join(ex, ey) == t.join(x, y));
        CHECK(a.meet(ex, ey) == t.meet(x, y));
        CHECK(a.leq(ex, ey) == t.leq(x, y));
      }
    }
  }
}

TEST_CASE("table lookups") {
  CHECK(builtin("A1").imp(0, 1) == 2);
  CHECK(builtin("A5").imp(2, 3) == 0);
  CHECK(builtin("A1").leq(0, 2));
  CHECK_FALSE(builtin("A5").leq(2, 3));
  CHECK(builtin("A1").star(2) == 0);
  CHECK(builtin("A5").star(2) == 3);
  CHECK_THROWS_AS(builtin("A6"), UnknownName);
  CHECK_THROWS_AS(builtin(0), UnknownName);
}

TEST_CASE("derived operations agree with their definitions") {
  for (const auto& a : builtins())
    for (Element x = 0; x < a.size(); ++x) {
      CHECK(a.star(x) == a.imp(x, a.zero()));
      CHECK(a.plus(x) == a.neg(a.imp(a.neg(x), a.zero())));
      for (Element y = 0; y < a.size(); ++y) CHECK(a.imp_h(x, y) == a.imp(x, a.meet(x, y)));
    }
}

TEST_CASE("heyting implication characterizes the order") {
  for (const auto& a : builtins())
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y) {
        CHECK((a.imp_h(x, y) == a.one()) == a.leq(x, y));
        for (Element z = 0; z < a.size(); ++z)
          CHECK(a.leq(a.meet(x, y), z) == a.leq(x, a.imp(y, a.meet(y, z))));
      }
}

TEST_CASE("negation is an order-reversing involution") {
  for (const auto& a : builtins())
    for (Element x = 0; x < a.size(); ++x) {
      CHECK(a.neg(a.neg(x)) == x);
      for (Element y = 0; y < a.size(); ++y)
        if (a.leq(x, y)) CHECK(a.leq(a.neg(y), a.neg(x)));
    }
}

TEST_CASE("0 -> 1 is a negation fixed point distinct from the bounds") {
  for (const auto& a : builtins()) {
    const Element c = a.imp(a.zero(), a.one());
    CHECK(a.neg(c) == c);
    CHECK(c != a.zero());
    CHECK(c != a.one());
  }
}

TEST_CASE("every axiom holds in every builtin") {
  for (const auto& a : builtins()) {
    const auto rep = axiom_profile(a);
    CHECK(rep.all_hold());
    CHECK(rep.results.size() == std::size(kAllAxioms));
  }
}

TEST_CASE("axiom profile agrees with the reference evaluator on the axiom equations") {
  for (const auto& e : catalog()) {
    if (e.kind != EntryKind::Axiom) continue;
    for (int i = 1; i <= 5; ++i)
      for (const auto& q : e.equations) CHECK_MESSAGE(oracle::holds(i, q.eq), q.label);
  }
}

TEST_CASE("axiom failures come with the first counterexample") {
  // Heyting three-element chain: orthodox, so UNORTHODOX fails and has no variables.
  RawTables r = raw_a1();
  r.imp = {{1, 1, 1}, {0, 1, 2}, {0, 1, 1}};
  const FiniteAlgebra h = validate(r);
  const auto rep = axiom_profile(h);
  CHECK_FALSE(rep.all_hold());
  CHECK_FALSE(rep.holds(Axiom::Unorthodox));
  CHECK(rep.holds(Axiom::SH4));
  // imp(0,0) = 0 breaks x -> x = 1 first at x = 0
  r = raw_a1();
  r.imp[0][0] = 0;
  const auto bad = axiom_profile(validate(r));
  REQUIRE_FALSE(bad.holds(Axiom::SH4));
  CHECK(*bad.results.at(Axiom::SH4).counterexample == std::vector<Element>{0});
}

TEST_CASE("validation") {
  SUBCASE("trivial algebra") {
    RawTables r{"T", {"0"}, {{0}}, {{0}}, {{0}}, {0}, 0, 0};
    const FiniteAlgebra t = validate(r);
    CHECK(t.size() == 1);
    CHECK(t.zero() == t.one());
    CHECK(trivial_algebra().same_tables(t));
  }
  SUBCASE("join(0,2) altered breaks the lattice laws") {
    RawTables r = raw_a1();
    r.join[0][2] = 0;
    CHECK_THROWS_AS(validate(r), NotALattice);
  }
  SUBCASE("ragged rows and out-of-range entries") {
    RawTables r = raw_a1();
    r.imp[1].pop_back();
    CHECK_THROWS_AS(validate(r), ShapeError);
    r = raw_a1();
    r.neg[0] = 7;
    CHECK_THROWS_AS(validate(r), ShapeError);
    r = raw_a1();
    r.labels.pop_back();
    CHECK_THROWS_AS(validate(r), ShapeError);
  }
  SUBCASE("bounds must be least and greatest") {
    RawTables r = raw_a1();
    r.zero = 2;
    CHECK_THROWS_AS(validate(r), BoundsError);
  }
}

TEST_CASE("JSON round trip") {
  for (const auto& a : builtins()) {
    const std::string text = algebra_to_json(a);
    const FiniteAlgebra b = algebra_from_json(text);
    CHECK(b.same_tables(a));
    CHECK(b.name() == a.name());
    CHECK(b.labels() == a.labels());
    CHECK(algebra_to_json(b) == text);
  }
  CHECK_THROWS_AS(algebra_from_json("{"), ShapeError);
  CHECK_THROWS_AS(algebra_from_json(R"J({"name":"x"})J"), ShapeError);
  CHECK_THROWS_AS(algebra_from_json("[1,2]"), ShapeError);
}

TEST_CASE("height") {
  for (int i = 1; i <= 5; ++i) CHECK(height(builtin(i)) == 2);
  CHECK(height(trivial_algebra()) == 0);
}
