#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "runo/algebra.hpp"
#include "runo/logic.hpp"
#include "runo/proof.hpp"

using namespace runo;

namespace {

Formula F(const char* s) { return parse_formula(s); }

std::string read(const std::string& name) {
  std::ifstream in(std::string(RUNO_TEST_DATA) + "/proofs/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Every step of an accepted proof must follow semantically from the assumptions.
void check_sound(const Proof& p) {
  for (const auto& s : p.steps) {
    CAPTURE(to_string(s.formula));
    CHECK(consequence(p.assumptions, s.formula).holds);
  }
}

const char* const kGood[] = {
    R"J([{"formula": "top", "just": {"axiom": 6}}])J",
    R"J([{"formula": "p", "just": "assume"},
        {"formula": "p ->h q", "just": "assume"},
        {"formula": "q", "just": {"smp": [1, 2]}}])J",
    R"J([{"formula": "p ->h q", "just": "assume"},
        {"formula": "~q ->h ~p", "just": {"scp": 1}}])J",
    R"J([{"formula": "p /\\ q ->h p", "just": {"axiom": 4, "subst": {"alpha": "p", "beta": "q"}}},
        {"formula": "p /\\ q", "just": "assume"},
        {"formula": "p", "just": {"smp": [2, 1]}},
        {"formula": "~p ->h ~(p /\\ q)", "just": {"scp": 1}}])J",
    R"J([{"formula": "(p ->h r) ->h ((q ->h r) ->h (p \\/ q ->h r))", "just": {"axiom": 3}},
        {"formula": "p ->h r", "just": "assume"},
        {"formula": "(q ->h r) ->h (p \\/ q ->h r)", "just": {"smp": [2, 1]}},
        {"formula": "q ->h r", "just": "assume"},
        {"formula": "p \\/ q ->h r", "just": {"smp": [4, 3]}},
        {"formula": "~r ->h ~(p \\/ q)", "just": {"scp": 5}}])J",
    R"J([{"formula": "(p /\\ q ->h r) ->h (p ->h (q ->h r))", "just": {"axiom": 8}},
        {"formula": "p /\\ q ->h r", "just": "assume"},
        {"formula": "p ->h (q ->h r)", "just": {"smp": [2, 1]}},
        {"formula": "p", "just": "assume"},
        {"formula": "q ->h r", "just": {"smp": [4, 3]}}])J",
    R"J({"assumptions": ["p", "p ->h q", "q ->h r"],
        "steps": [
          {"formula": "p", "just": "assume"},
          {"formula": "p ->h q", "just": "assume"},
          {"formula": "q", "just": {"smp": [1, 2]}},
          {"formula": "q ->h r", "just": "assume"},
          {"formula": "r", "just": {"smp": [3, 4]}}]})J",
    R"J([{"formula": "bot -> bot /\\ p", "just": {"axiom": 7}},
        {"formula": "~p ->h ~bot", "just": {"scp": 1}}])J",
};

}  // namespace

TEST_CASE("accepted derivations") {
  for (const char* text : kGood) {
    CAPTURE(text);
    const Proof p = parse_proof(text);
    const auto r = check_proof(p);
    CHECK_MESSAGE(r.ok, r.reason);
    check_sound(p);
  }
}

TEST_CASE("rejected derivations") {
  struct Case {
    const char* text;
    std::size_t bad;
  };
  const Case cases[] = {
      // SMP where the second premise is not an ->h
      {R"J([{"formula": "p", "just": "assume"}, {"formula": "q", "just": "assume"},
           {"formula": "q", "just": {"smp": [1, 2]}}])J", 3},
      // forward and self references
      {R"J([{"formula": "q", "just": {"smp": [1, 2]}}])J", 1},
      {R"J([{"formula": "p", "just": "assume"}, {"formula": "p", "just": {"scp": 2}}])J", 2},
      // not an instance of the cited schema
      {R"J([{"formula": "p ->h p /\\ q", "just": {"axiom": 4}}])J", 1},
      {R"J([{"formula": "p /\\ q ->h p", "just": {"axiom": 4, "subst": {"alpha": "q"}}}])J", 1},
      {R"J([{"formula": "top", "just": {"axiom": 19}}])J", 1},
      // SCP with the negations the wrong way round
      {R"J([{"formula": "p ->h q", "just": "assume"}, {"formula": "~p ->h ~q", "just": {"scp": 1}}])J", 2},
      // SCP from something that is not ->h
      {R"J([{"formula": "p -> q", "just": "assume"}, {"formula": "~q ->h ~p", "just": {"scp": 1}}])J", 2},
      // assumption not declared
      {R"J({"assumptions": ["p"], "steps": [{"formula": "q", "just": "assume"}]})J", 1},
      // the conclusion of SMP must be the consequent
      {R"J([{"formula": "p", "just": "assume"}, {"formula": "p ->h q", "just": "assume"},
           {"formula": "r", "just": {"smp": [1, 2]}}])J", 3},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    const auto r = check_proof(parse_proof(c.text));
    CHECK_FALSE(r.ok);
    REQUIRE(r.first_bad_step);
    CHECK(*r.first_bad_step == c.bad);
    CHECK_FALSE(r.reason.empty());
  }
  CHECK_FALSE(check_proof(Proof{}).ok);
}

TEST_CASE("malformed proof files") {
  for (const char* bad : {"", "{", "3", R"J({"steps": 3})J", R"J([{"formula": "p"}])J",
                          R"J([{"formula": "p ->", "just": "assume"}])J", R"J([{"formula": 3, "just": "assume"}])J",
                          R"J([{"formula": "p", "just": "guess"}])J", R"J([{"formula": "p", "just": {"smp": [1]}}])J",
                          R"J([{"formula": "p", "just": {"smp": [0, 1]}}])J", R"J([{"formula": "p", "just": {}}])J",
                          R"J([{"formula": "p", "just": {"axiom": "six"}}])J"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_proof(bad), ShapeError);
  }
}

TEST_CASE("JSON round trip") {
  for (const char* text : kGood) {
    const Proof p = parse_proof(text);
    const std::string out = proof_to_json(p);
    CHECK(parse_proof(out) == p);
    CHECK(proof_to_json(parse_proof(out)) == out);
  }
}

TEST_CASE("proof files") {
  CHECK(check_proof(parse_proof(read("smp.json"))).ok);
  const Proof c = parse_proof(read("contraposition.json"));
  CHECK(check_proof(c).ok);
  check_sound(c);
  CHECK(*check_proof(parse_proof(read("bad_smp.json"))).first_bad_step == 3);
  CHECK_THROWS_AS(parse_proof(read("malformed.json")), ShapeError);
}

TEST_CASE("generated derivations from every schema are accepted and sound") {
  std::mt19937 rng(99);
  const Formula atoms[] = {F("p"), F("q"), F("~p"), F("p -> q"), F("!q"), F("bot"), F("p /\\ ~q")};
  auto pick = [&] { return atoms[rng() % std::size(atoms)]; };
  for (int s = 1; s <= kSchemaCount; ++s)
    for (int round = 0; round < 6; ++round) {
      std::map<std::string, Formula> sigma;
      for (const auto& v : axiom_schema(s).variables()) sigma.emplace(v, pick());
      const Formula inst = substitute(axiom_schema(s), sigma);
      Proof p;
      p.steps.push_back({inst, AxiomUse{s, sigma}});
      const Formula d = desugar(inst);
      if (d.op() == FormulaOp::Imp && d.rhs().op() == FormulaOp::And && d.rhs().lhs() == d.lhs()) {
        const Formula phi = d.lhs(), gamma = d.rhs().rhs();
        p.steps.push_back({Formula::imp_h(Formula::dneg(gamma), Formula::dneg(phi)), Scp{1}});
        p.assumptions.push_back(phi);
        p.steps.push_back({phi, Assume{}});
        p.steps.push_back({gamma, Smp{3, 1}});
      }
      CAPTURE(to_string(inst));
      const auto r = check_proof(p);
      CHECK_MESSAGE(r.ok, r.reason);
      check_sound(p);
    }
}
