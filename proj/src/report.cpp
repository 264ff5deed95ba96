#include "runo/report.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "runo/algebra_json.hpp"
#include "runo/builtin.hpp"
#include "runo/catalog.hpp"
#include "runo/logic.hpp"
#include "runo/structure.hpp"
#include "runo/variety.hpp"

namespace runo {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json builtin_table() {
  json rows = json::array();
  for (int i = 1; i <= 5; ++i) {
    const FiniteAlgebra& a = builtin(i);
    const auto prim = is_primal(a, a.size() <= 3);
    rows.push_back({{"algebra", a.name()},
                    {"size", a.size()},
                    {"axioms_hold", axiom_profile(a).all_hold()},
                    {"subalgebras", subalgebras(a).size()},
                    {"automorphisms", automorphisms(a).size()},
                    {"congruences", congruences(a).size()},
                    {"simple", is_simple(a)},
                    {"si", is_si(a)},
                    {"sc", sc_check(a).ok},
                    {"height", height(a)},
                    {"discriminator", prim.evidence.discriminator.ok},
                    {"primal", prim.primal},
                    {"clone_full", prim.evidence.clone_full ? json(*prim.evidence.clone_full)
                                                            : json(nullptr)}});
  }
  return rows;
}

json enumeration_manifest() {
  json rows = json::array();
  for (const auto& a : enumerate_runo1(4)) {
    json r = {{"name", a.name()}, {"size", a.size()}, {"builtin", builtin_index(a)}};
    if (a.size() > 1) {
      r["simple"] = is_simple(a);
      r["si"] = is_si(a);
      r["sc"] = sc_check(a).ok;
      r["height"] = height(a);
    }
    rows.push_back(std::move(r));
  }
  return {{"max_size", 4}, {"models", rows}};
}

json pair_classification() {
  json rows = json::array();
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      const std::vector<FiniteAlgebra> f{builtin(i), builtin(j)};
      rows.push_back({{"product", "A" + std::to_string(i) + "xA" + std::to_string(j)},
                      {"classified", classify(direct_product(f)).digits()}});
    }
  return rows;
}

std::string algebraizability_text() {
  const auto fs = sample_formulas();
  const auto es = sample_equations();
  const auto r = cross_check_algebraizability(fs, es);
  std::ostringstream os;
  os << "formula | theorem | tau(formula) holds in all five\n";
  for (const auto& row : r.formulas)
    os << to_string(row.formula) << " | " << row.theorem << " | " << row.tau_identity << "\n";
  os << "\nequation | same satisfaction sets in A1..A5\n";
  for (const auto& row : r.equations) {
    os << to_string(row.equation.lhs) << " = " << to_string(row.equation.rhs) << " |";
    for (bool b : row.same_satisfaction) os << " " << b;
    os << "\n";
  }
  os << "\n" << (r.ok() ? "agree" : "DISAGREE") << "\n";
  return os.str();
}

}  // namespace

std::vector<ReportFile> build_report() {
  std::vector<ReportFile> out;
  for (int i = 1; i <= 5; ++i)
    out.push_back({"algebras/A" + std::to_string(i) + ".json", algebra_to_json(builtin(i))});
  out.push_back({"builtins.json", dump(builtin_table())});
  out.push_back({"enumeration.json", dump(enumeration_manifest())});

  const auto bases = verify_bases();
  out.push_back({"bases.json", bases.to_json()});
  out.push_back({"bases.txt", bases.to_text()});
  out.push_back({"lattice.dot", lattice_dot()});
  out.push_back({"products.json", dump(pair_classification())});

  const auto imp = check_unit_implies_zero_star();
  out.push_back({"implication.json", dump({{"checked", imp.checked},
                                           {"premise_holds", imp.premise_holds},
                                           {"failures", imp.failures}})});

  const auto cat = verify_catalog();
  out.push_back({"catalog.json", cat.to_json()});
  out.push_back({"catalog.txt", cat.to_text()});

  const auto ext = verify_extensions();
  out.push_back({"extensions.json", ext.to_json()});
  out.push_back({"extensions.txt", ext.to_text()});

  const auto snd = soundness_report();
  out.push_back({"soundness.txt", snd.to_text() + (snd.ok() ? "sound\n" : "UNSOUND\n")});
  out.push_back({"algebraizability.txt", algebraizability_text()});

  std::ostringstream sum;
  sum << "bases exact: " << bases.checks.size() - bases.errata() << "/" << bases.checks.size() << "\n"
      << "catalog errata: " << cat.errata() << "/" << cat.checks.size() << "\n"
      << "extension bases exact: " << ext.checks.size() - ext.errata() << "/" << ext.checks.size()
      << " (printed bases not exact: " << ext.printed_errata() << ")\n"
      << "soundness: " << (snd.ok() ? "ok" : "fails") << "\n"
      << "(0 -> 1) -> 1 = 1 implies (0 -> 1)* = 0: " << (imp.ok() ? "ok" : "fails") << " on "
      << imp.checked << " algebras\n";
  out.push_back({"summary.txt", sum.str()});
  return out;
}

std::vector<std::string> write_report(const std::filesystem::path& dir) {
  std::vector<std::string> names;
  for (const auto& f : build_report()) {
    const auto path = dir / f.name;
    std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    os << f.content;
    if (!os) throw std::runtime_error("cannot write " + path.string());
    names.push_back(f.name);
  }
  return names;
}

}  // namespace runo
