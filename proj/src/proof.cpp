#include "runo/proof.hpp"

#include <json.hpp>

#include "runo/algebra.hpp"
#include "runo/logic.hpp"

namespace runo {

namespace {

using nlohmann::json;

struct StepChecker {
  const Proof& p;
  std::vector<Formula> flat;  // desugared steps

  // Empty string means the step is justified.
  std::string operator()(std::size_t k, const Assume&) const {
    const Formula d = flat[k];
    for (const auto& a : p.assumptions)
      if (desugar(a) == d) return {};
    return "formula is not among the assumptions";
  }

  std::string operator()(std::size_t k, const AxiomUse& u) const {
    if (u.schema < 1 || u.schema > kSchemaCount) return "no schema " + std::to_string(u.schema);
    if (!is_instance_of(p.steps[k].formula, u.schema, u.subst))
      return "not an instance of schema " + std::to_string(u.schema);
    return {};
  }

  std::string operator()(std::size_t k, const Smp& r) const {
    if (auto e = earlier(k, r.i); !e.empty()) return e;
    if (auto e = earlier(k, r.j); !e.empty()) return e;
    const Formula want = desugar(Formula::imp_h(flat[r.i - 1], flat[k]));
    if (flat[r.j - 1] != want)
      return "step " + std::to_string(r.j) + " is not step " + std::to_string(r.i) +
             " ->h the current formula";
    return {};
  }

  std::string operator()(std::size_t k, const Scp& r) const {
    if (auto e = earlier(k, r.i); !e.empty()) return e;
    // phi ->h gamma desugars to phi -> (phi /\ gamma)
    const Formula& s = flat[r.i - 1];
    if (s.op() != FormulaOp::Imp || s.rhs().op() != FormulaOp::And || s.rhs().lhs() != s.lhs())
      return "step " + std::to_string(r.i) + " is not of the form phi ->h gamma";
    const Formula& phi = s.lhs();
    const Formula& gamma = s.rhs().rhs();
    if (flat[k] != desugar(Formula::imp_h(Formula::dneg(gamma), Formula::dneg(phi))))
      return "formula is not ~gamma ->h ~phi for step " + std::to_string(r.i);
    return {};
  }

  static std::string earlier(std::size_t k, std::size_t ref) {
    if (ref < 1 || ref > k) return "reference " + std::to_string(ref) + " is not an earlier step";
    return {};
  }
};

Formula formula_field(const json& j, const char* what) {
  if (!j.is_string()) throw ShapeError(std::string(what) + " must be a string");
  try {
    return parse_formula(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ShapeError(std::string(what) + ": " + e.what());
  }
}

std::size_t index_field(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    throw ShapeError("step references must be positive integers");
  return j.get<std::size_t>();
}

Justification parse_just(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "assume") return Assume{};
    throw ShapeError("unknown justification '" + j.get<std::string>() + "'");
  }
  if (!j.is_object() || j.size() == 0) throw ShapeError("justification must be a string or object");
  if (j.contains("axiom")) {
    if (!j.at("axiom").is_number_integer()) throw ShapeError("axiom must be an integer");
    AxiomUse u{j.at("axiom").get<int>(), {}};
    if (j.contains("subst")) {
      if (!j.at("subst").is_object()) throw ShapeError("subst must be an object");
      for (const auto& [k, v] : j.at("subst").items()) u.subst.emplace(k, formula_field(v, "subst value"));
    }
    return u;
  }
  if (j.contains("smp")) {
    const auto& a = j.at("smp");
    if (!a.is_array() || a.size() != 2) throw ShapeError("smp takes two step indices");
    return Smp{index_field(a[0]), index_field(a[1])};
  }
  if (j.contains("scp")) return Scp{index_field(j.at("scp"))};
  throw ShapeError("justification needs one of axiom, smp, scp");
}

json just_to_json(const Justification& j) {
  return std::visit(
      [](const auto& r) -> json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Assume>) {
          return "assume";
        } else if constexpr (std::is_same_v<T, AxiomUse>) {
          json out = {{"axiom", r.schema}};
          if (!r.subst.empty()) {
            json s = json::object();
            for (const auto& [k, v] : r.subst) s[k] = to_string(v);
            out["subst"] = s;
          }
          return out;
        } else if constexpr (std::is_same_v<T, Smp>) {
          return {{"smp", {r.i, r.j}}};
        } else {
          return {{"scp", r.i}};
        }
      },
      j);
}

}  // namespace

ProofCheck check_proof(const Proof& p) {
  if (p.steps.empty()) return {false, std::nullopt, "empty proof"};
  StepChecker c{p, {}};
  for (const auto& s : p.steps) c.flat.push_back(desugar(s.formula));
  for (std::size_t k = 0; k < p.steps.size(); ++k) {
    std::string why = std::visit([&](const auto& r) { return c(k, r); }, p.steps[k].just);
    if (!why.empty()) return {false, k + 1, std::move(why)};
  }
  return {};
}

Proof parse_proof(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ShapeError(std::string("invalid JSON: ") + e.what());
  }
  Proof p;
  const json* steps = &doc;
  bool explicit_assumptions = false;
  if (doc.is_object()) {
    if (!doc.contains("steps")) throw ShapeError("proof object needs \"steps\"");
    steps = &doc.at("steps");
    if (doc.contains("assumptions")) {
      if (!doc.at("assumptions").is_array()) throw ShapeError("assumptions must be a list");
      for (const auto& a : doc.at("assumptions")) p.assumptions.push_back(formula_field(a, "assumption"));
      explicit_assumptions = true;
    }
  }
  if (!steps->is_array()) throw ShapeError("proof must be a list of steps");
  for (const auto& s : *steps) {
    if (!s.is_object() || !s.contains("formula") || !s.contains("just"))
      throw ShapeError("each step needs \"formula\" and \"just\"");
    ProofStep step{formula_field(s.at("formula"), "formula"), parse_just(s.at("just"))};
    if (!explicit_assumptions && std::holds_alternative<Assume>(step.just))
      p.assumptions.push_back(step.formula);
    p.steps.push_back(std::move(step));
  }
  return p;
}

std::string proof_to_json(const Proof& p) {
  json a = json::array(), s = json::array();
  for (const auto& f : p.assumptions) a.push_back(to_string(f));
  for (const auto& st : p.steps) s.push_back({{"formula", to_string(st.formula)}, {"just", just_to_json(st.just)}});
  return json{{"assumptions", a}, {"steps", s}}.dump(2) + "\n";
}

}  // namespace runo
