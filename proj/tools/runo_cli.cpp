// runo: command-line front end to the library.
// Exit codes: 0 holds/valid/ok, 1 fails/invalid, 2 usage or parse error,
// 3 malformed algebra or proof input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "runo/algebra_json.hpp"
#include "runo/builtin.hpp"
#include "runo/catalog.hpp"
#include "runo/identity.hpp"
#include "runo/logic.hpp"
#include "runo/proof.hpp"
#include "runo/report.hpp"
#include "runo/structure.hpp"
#include "runo/sweep.hpp"
#include "runo/variety.hpp"

using namespace runo;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFails = 1, kUsage = 2, kMalformed = 3 };

// Input that could not be read or is structurally broken.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool g_json = false;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

FiniteAlgebra load(const std::string& name) {
  try {
    return load_algebra(name);
  } catch (const AlgebraError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json valuation_json(const FiniteAlgebra& a, const Valuation& v) {
  json o = json::object();
  for (const auto& [k, x] : v) o[k] = a.label(x);
  return o;
}

std::string valuation_text(const FiniteAlgebra& a, const Valuation& v) {
  std::string s;
  for (const auto& [k, x] : v) s += (s.empty() ? "" : ", ") + k + "=" + a.label(x);
  return s;
}

std::string tuple_text(const FiniteAlgebra& a, std::span<const Element> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + a.label(t[i]);
  return s + ")";
}

json labels_json(const FiniteAlgebra& a, std::span<const Element> xs) {
  json o = json::array();
  for (Element x : xs) o.push_back(a.label(x));
  return o;
}

// ---- algebra -------------------------------------------------------------------

void print_tables(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::size_t w = 1;
  for (const auto& l : a.labels()) w = std::max(w, l.size());
  auto cell = [w](const std::string& s) { return std::string(w - s.size() + 1, ' ') + s; };
  std::cout << a.name() << ": " << n << " elements, 0 = " << a.label(a.zero())
            << ", 1 = " << a.label(a.one()) << "\n";
  const std::pair<const char*, Element (FiniteAlgebra::*)(Element, Element) const noexcept> ops[] = {
      {"\\/", &FiniteAlgebra::join}, {"/\\", &FiniteAlgebra::meet}, {"->", &FiniteAlgebra::imp}};
  for (const auto& [sym, op] : ops) {
    std::cout << "\n" << cell(sym) << " |";
    for (std::size_t y = 0; y < n; ++y) std::cout << cell(a.label(static_cast<Element>(y)));
    std::cout << "\n";
    for (std::size_t x = 0; x < n; ++x) {
      std::cout << cell(a.label(static_cast<Element>(x))) << " |";
      for (std::size_t y = 0; y < n; ++y)
        std::cout << cell(a.label((a.*op)(static_cast<Element>(x), static_cast<Element>(y))));
      std::cout << "\n";
    }
  }
  std::cout << "\n" << cell("x") << " |" << cell("'") << "\n";
  for (std::size_t x = 0; x < n; ++x)
    std::cout << cell(a.label(static_cast<Element>(x))) << " |"
              << cell(a.label(a.neg(static_cast<Element>(x)))) << "\n";
}

int algebra_show(const std::string& name) {
  const FiniteAlgebra a = load(name);
  if (g_json)
    std::cout << algebra_to_json(a);
  else
    print_tables(a);
  return kOk;
}

int algebra_validate(const std::string& name) {
  const FiniteAlgebra a = load(name);
  const auto rep = axiom_profile(a);
  json out = {{"algebra", a.name()}, {"size", a.size()}, {"axioms", json::object()}};
  for (Axiom ax : kAllAxioms) {
    const auto& r = rep.results.at(ax);
    json e = {{"holds", r.holds}};
    if (r.counterexample) e["counterexample"] = labels_json(a, *r.counterexample);
    out["axioms"][std::string(axiom_name(ax))] = e;
  }
  out["member"] = rep.all_hold();
  if (g_json) {
    emit(out);
  } else {
    std::cout << a.name() << ": well-formed, " << a.size() << " elements\n";
    for (Axiom ax : kAllAxioms) {
      const auto& r = rep.results.at(ax);
      std::cout << "  " << axiom_name(ax) << ": " << (r.holds ? "holds" : "FAILS");
      if (r.counterexample) std::cout << " at " << tuple_text(a, *r.counterexample);
      std::cout << "\n";
    }
    std::cout << (rep.all_hold() ? "member of the variety\n" : "not a member\n");
  }
  return rep.all_hold() ? kOk : kFails;
}

// ---- terms and identities ------------------------------------------------------

Valuation parse_valuation(const FiniteAlgebra& a, const std::vector<std::string>& items) {
  Valuation v;
  for (const auto& it : items) {
    const auto eq = it.find('=');
    if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--val", "expected name=label, got '" + it + "'");
    const std::string var = it.substr(0, eq), lab = it.substr(eq + 1);
    const auto x = a.find(lab);
    if (!x) throw CLI::ValidationError("--val", "'" + lab + "' is not an element of " + a.name());
    v[var] = *x;
  }
  return v;
}

int eval_cmd(const std::string& alg, const std::string& text, const std::vector<std::string>& vals) {
  const FiniteAlgebra a = load(alg);
  const Term t = parse_term(text);
  const Element r = eval(a, t, parse_valuation(a, vals));
  if (g_json)
    emit({{"algebra", a.name()}, {"term", to_string(t)}, {"value", a.label(r)}});
  else
    std::cout << a.label(r) << "\n";
  return kOk;
}

int check_id(const std::string& alg, const std::string& text) {
  const FiniteAlgebra a = load(alg);
  const Equation e = parse_equation(text);
  const Verdict v = holds(a, e);
  json out = {{"algebra", a.name()}, {"equation", to_string(e)}, {"holds", v.holds}};
  std::string line = "holds";
  if (!v.holds) {
    const Element l = eval(a, e.lhs, *v.counterexample), r = eval(a, e.rhs, *v.counterexample);
    out["counterexample"] = valuation_json(a, *v.counterexample);
    out["lhs"] = a.label(l);
    out["rhs"] = a.label(r);
    line = e.closed() ? "closed: LHS=" + a.label(l) + ", RHS=" + a.label(r)
                      : "counterexample: " + valuation_text(a, *v.counterexample) + " (LHS=" +
                            a.label(l) + ", RHS=" + a.label(r) + ")";
  }
  if (g_json)
    emit(out);
  else
    std::cout << line << "\n";
  return v.holds ? kOk : kFails;
}

int profile_cmd(const std::vector<std::string>& texts) {
  std::vector<Equation> eqs;
  for (const auto& t : texts) eqs.push_back(parse_equation(t));
  const SubvarietyId p = profile(eqs);
  if (g_json)
    emit({{"profile", p.digits()}, {"algebras", p.pretty()}});
  else
    std::cout << p.digits() << "\n";
  return kOk;
}

int classify_cmd(const std::string& name) {
  const FiniteAlgebra a = load(name);
  try {
    const SubvarietyId s = classify(a);
    if (g_json)
      emit({{"algebra", a.name()}, {"member", true}, {"subvariety", s.digits()}});
    else
      std::cout << s.digits() << "\n";
    return kOk;
  } catch (const NotInVariety& e) {
    if (g_json)
      emit({{"algebra", a.name()}, {"member", false}, {"reason", e.what()}});
    else
      std::cout << "not in the variety: " << e.what() << "\n";
    return kFails;
  }
}

// ---- structure -----------------------------------------------------------------

json partition_json(const FiniteAlgebra& a, const Partition& p) {
  json o = json::array();
  for (const auto& b : blocks(p)) o.push_back(labels_json(a, b));
  return o;
}

std::string partition_text(const FiniteAlgebra& a, const Partition& p) {
  std::string s;
  for (const auto& b : blocks(p)) {
    s += s.empty() ? "{" : " {";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + a.label(b[i]);
    s += "}";
  }
  return s;
}

int structure_cmd(const std::string& what, const std::string& alg, bool oracle) {
  const FiniteAlgebra a = load(alg);
  json out = {{"algebra", a.name()}};
  std::ostringstream txt;
  int rc = kOk;

  if (what == "sub") {
    json list = json::array();
    for (const auto& s : subalgebras(a)) {
      list.push_back(labels_json(a, s));
      txt << tuple_text(a, s) << "\n";
    }
    out["subalgebras"] = list;
  } else if (what == "aut") {
    json list = json::array();
    for (const auto& p : automorphisms(a)) {
      list.push_back(labels_json(a, p));
      txt << tuple_text(a, p) << "\n";
    }
    out["automorphisms"] = list;
  } else if (what == "con") {
    const auto lat = congruences(a);
    json list = json::array();
    for (const auto& p : lat.partitions) {
      list.push_back(partition_json(a, p));
      txt << partition_text(a, p) << "\n";
    }
    out["congruences"] = list;
  } else if (what == "simple") {
    const bool s = is_simple(a), si = is_si(a);
    out["simple"] = s;
    out["si"] = si;
    txt << (s ? "simple" : "not simple") << ", " << (si ? "subdirectly irreducible" : "not subdirectly irreducible") << "\n";
    rc = s ? kOk : kFails;
  } else if (what == "sc") {
    const auto r = sc_check(a);
    out["ok"] = r.ok;
    if (r.witness) out["witness"] = a.label(*r.witness);
    txt << (r.ok ? "ok" : "fails at " + a.label(*r.witness)) << "\n";
    rc = r.ok ? kOk : kFails;
  } else if (what == "height") {
    out["height"] = height(a);
    txt << height(a) << "\n";
  } else if (what == "disc") {
    const auto r = discriminator_check(a, discriminator_term());
    out["term"] = to_string(r.term);
    out["ok"] = r.ok;
    if (r.failing_triple) out["failing_triple"] = labels_json(a, *r.failing_triple);
    txt << (r.ok ? "ok" : "fails at " + tuple_text(a, *r.failing_triple)) << "\n";
    rc = r.ok ? kOk : kFails;
  } else {  // primal
    const auto r = is_primal(a, oracle);
    const auto& ev = r.evidence;
    out["primal"] = r.primal;
    out["discriminator"] = ev.discriminator.ok;
    out["automorphisms"] = ev.automorphisms;
    if (ev.subalgebras) out["subalgebras"] = *ev.subalgebras;
    if (ev.proper_subalgebra) out["proper_subalgebra"] = labels_json(a, *ev.proper_subalgebra);
    if (ev.nontrivial_automorphism) out["nontrivial_automorphism"] = labels_json(a, *ev.nontrivial_automorphism);
    if (ev.clone_full) out["clone_full"] = *ev.clone_full;
    txt << (r.primal ? "primal" : "not primal") << "\n"
        << "  discriminator term: " << (ev.discriminator.ok ? "ok" : "fails") << "\n"
        << "  automorphisms: " << ev.automorphisms << "\n";
    if (ev.proper_subalgebra) txt << "  proper subalgebra: " << tuple_text(a, *ev.proper_subalgebra) << "\n";
    if (ev.clone_full) txt << "  clone closure: " << (*ev.clone_full ? "all binary operations" : "incomplete") << "\n";
    rc = r.primal ? kOk : kFails;
  }
  if (g_json)
    emit(out);
  else
    std::cout << txt.str();
  return rc;
}

// ---- products and decomposition ------------------------------------------------

int product_cmd(const std::vector<std::string>& names, const std::string& out_path, std::size_t limit) {
  std::vector<FiniteAlgebra> fs;
  for (const auto& n : names) fs.push_back(load(n));
  const FiniteAlgebra p = direct_product(fs, limit);
  if (!out_path.empty()) {
    save_algebra(p, out_path);
    if (!g_json) std::cout << p.name() << ": " << p.size() << " elements written to " << out_path << "\n";
  }
  if (g_json || out_path.empty()) std::cout << algebra_to_json(p);
  return kOk;
}

int decompose_cmd(const std::string& name, const std::string& method) {
  const FiniteAlgebra a = load(name);
  const DecomposeMethod m = method == "lattice"   ? DecomposeMethod::Lattice
                            : method == "central" ? DecomposeMethod::Central
                                                  : DecomposeMethod::Auto;
  try {
    const auto d = decompose(a, m);
    json factors = json::array();
    std::string line;
    for (int b : d.builtin) {
      factors.push_back("A" + std::to_string(b));
      line += (line.empty() ? "" : " x ") + ("A" + std::to_string(b));
    }
    if (g_json)
      emit({{"algebra", a.name()}, {"member", true}, {"factors", factors}});
    else
      std::cout << a.name() << " = " << (line.empty() ? "trivial" : line) << "\n";
    return kOk;
  } catch (const NotInVariety& e) {
    if (g_json)
      emit({{"algebra", a.name()}, {"member", false}, {"reason", e.what()}});
    else
      std::cout << "not in the variety: " << e.what() << "\n";
    return kFails;
  }
}

int enumerate_cmd(int max_size) {
  const auto ms = enumerate_runo1(max_size);
  json list = json::array();
  for (const auto& a : ms) {
    json r = {{"name", a.name()}, {"size", a.size()}};
    if (a.size() > 1) {
      r["simple"] = is_simple(a);
      r["sc"] = sc_check(a).ok;
      r["height"] = height(a);
    }
    list.push_back(r);
  }
  if (g_json) {
    emit({{"max_size", max_size}, {"models", list}});
  } else {
    for (const auto& r : list) {
      std::cout << r["name"].get<std::string>() << "  size " << r["size"];
      if (r.contains("simple"))
        std::cout << "  simple " << r["simple"] << "  sc " << r["sc"] << "  height " << r["height"];
      std::cout << "\n";
    }
  }
  return kOk;
}

// ---- varieties -----------------------------------------------------------------

json equations_json(const std::vector<Equation>& es) {
  json o = json::array();
  for (const auto& e : es) o.push_back(to_string(e));
  return o;
}

int variety_lattice(bool dot) {
  if (dot) {
    std::cout << lattice_dot();
    return kOk;
  }
  json list = json::array();
  for (const auto& v : lattice()) {
    json cov = json::array();
    for (auto c : covers(v.id)) cov.push_back(c.digits());
    list.push_back({{"id", v.id.digits()}, {"height", v.height}, {"covers", cov}, {"base", equations_json(v.base)}});
  }
  if (g_json) {
    emit({{"subvarieties", list}});
  } else {
    for (const auto& r : list) {
      std::cout << "h" << r["height"] << "  " << r["id"].get<std::string>() << "  <";
      for (const auto& c : r["covers"]) std::cout << " " << c.get<std::string>();
      std::cout << "\n";
    }
  }
  return kOk;
}

int variety_base(const std::string& s) {
  const SubvarietyId id = SubvarietyId::parse(s);
  const auto& v = variety_info(id);
  if (g_json) {
    emit({{"id", id.digits()}, {"source", v.source}, {"base", equations_json(v.base)}});
  } else {
    if (v.base.empty()) std::cout << "(no equations: the whole variety)\n";
    for (const auto& e : v.base) std::cout << to_string(e) << "\n";
  }
  return kOk;
}

int variety_verify() {
  const auto r = verify_bases();
  std::cout << (g_json ? r.to_json() : r.to_text());
  return r.errata() == 0 ? kOk : kFails;
}

int variety_catalog() {
  const auto r = verify_catalog();
  std::cout << (g_json ? r.to_json() : r.to_text());
  return r.errata() == 0 ? kOk : kFails;
}

// ---- logic ---------------------------------------------------------------------

int logic_decide(const std::string& text, const std::string& s) {
  const Formula f = parse_formula(text);
  const SubvarietyId id = s.empty() ? SubvarietyId::all() : SubvarietyId::parse(s);
  json out = {{"formula", to_string(f)}, {"extension", id.digits()}};
  std::optional<std::pair<int, Valuation>> cex;
  for (int i = 1; i <= 5 && !cex; ++i) {
    if (!id.contains(i)) continue;
    const auto v = is_valid(f, matrix(builtin(i)));
    if (!v.valid) cex = std::make_pair(i, *v.counter_valuation);
  }
  out["valid"] = !cex;
  if (cex) {
    const FiniteAlgebra& a = builtin(cex->first);
    out["algebra"] = a.name();
    out["counter_valuation"] = valuation_json(a, cex->second);
    out["value"] = a.label(evaluate(a, f, cex->second));
  }
  if (g_json) {
    emit(out);
  } else if (!cex) {
    std::cout << "valid\n";
  } else {
    const FiniteAlgebra& a = builtin(cex->first);
    std::cout << "not valid in " << a.name() << " at " << valuation_text(a, cex->second)
              << " (value " << out["value"].get<std::string>() << ")\n";
  }
  return cex ? kFails : kOk;
}

int logic_prove_check(const std::string& path) {
  Proof p;
  try {
    p = parse_proof(read_file(path));
  } catch (const ShapeError& e) {
    throw InputError(e.what());
  }
  const auto r = check_proof(p);
  json out = {{"ok", r.ok}, {"steps", p.steps.size()}};
  if (!p.steps.empty()) out["conclusion"] = to_string(p.steps.back().formula);
  if (r.first_bad_step) out["first_bad_step"] = *r.first_bad_step;
  if (!r.ok) out["reason"] = r.reason;
  if (g_json) {
    emit(out);
  } else if (r.ok) {
    std::cout << "ok: " << p.steps.size() << " steps, conclusion " << out["conclusion"].get<std::string>() << "\n";
  } else if (r.first_bad_step) {
    std::cout << "step " << *r.first_bad_step << ": " << r.reason << "\n";
  } else {
    std::cout << r.reason << "\n";
  }
  return r.ok ? kOk : kFails;
}

int logic_axioms() {
  json list = json::array();
  for (int i = 1; i <= kSchemaCount; ++i) list.push_back({{"id", i}, {"schema", to_string(axiom_schema(i))}});
  if (g_json) {
    emit({{"schemas", list}});
  } else {
    for (const auto& r : list) std::cout << r["id"] << ". " << r["schema"].get<std::string>() << "\n";
    std::cout << "rules: SMP (from a and a ->h b infer b), SCP (from a ->h b infer ~b ->h ~a)\n";
  }
  return kOk;
}

int logic_translate(const std::string& text, bool equation) {
  if (equation) {
    const Equation e = parse_equation(text);
    const auto [f, g] = rho(e);
    if (g_json)
      emit({{"equation", to_string(e)}, {"formulas", {to_string(f), to_string(g)}}});
    else
      std::cout << to_string(f) << "\n" << to_string(g) << "\n";
  } else {
    const Formula f = parse_formula(text);
    const Equation e = tau(f);
    if (g_json)
      emit({{"formula", to_string(f)}, {"equation", to_string(e)}});
    else
      std::cout << to_string(e) << "\n";
  }
  return kOk;
}

int logic_extensions() {
  const auto r = verify_extensions();
  std::cout << (g_json ? r.to_json() : r.to_text());
  return r.errata() == 0 ? kOk : kFails;
}

int report_cmd(const std::string& dir) {
  const auto names = write_report(dir);
  if (g_json) {
    emit({{"out", dir}, {"files", names}});
  } else {
    for (const auto& n : names) std::cout << dir << "/" << n << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite algebra and logic toolkit for the variety generated by A1..A5"};
  app.require_subcommand(1);
  bool serial = false;
  app.add_flag("--json", g_json, "Machine-readable output")->configurable(false);
  app.add_flag("--serial", serial, "Disable OpenMP sweeps");
  app.fallthrough();

  std::function<int()> action;
  // Strings bound to options must outlive parsing.
  std::string alg, text, path, set, method = "auto", out_dir, what;
  std::vector<std::string> vals, texts, names;
  int max_size = 4;
  std::size_t limit = kDefaultProductLimit;
  bool dot = false, equation = false, oracle = false;

  auto* algebra = app.add_subcommand("algebra", "Show or validate an algebra (builtin name or JSON file)");
  algebra->require_subcommand(1);
  auto* show = algebra->add_subcommand("show", "Print the operation tables");
  show->add_option("algebra", alg)->required();
  show->callback([&] { action = [&] { return algebra_show(alg); }; });
  auto* validate_cmd = algebra->add_subcommand("validate", "Check well-formedness and every axiom");
  validate_cmd->add_option("algebra", alg)->required();
  validate_cmd->callback([&] { action = [&] { return algebra_validate(alg); }; });

  auto* ev = app.add_subcommand("eval", "Evaluate a term");
  ev->add_option("-a,--algebra", alg)->required();
  ev->add_option("-t,--term", text)->required();
  ev->add_option("-v,--val", vals, "Assignments name=label")->delimiter(',');
  ev->callback([&] { action = [&] { return eval_cmd(alg, text, vals); }; });

  auto* cid = app.add_subcommand("check-id", "Decide whether an equation holds");
  cid->add_option("-a,--algebra", alg)->required();
  cid->add_option("-e,--equation", text)->required();
  cid->callback([&] { action = [&] { return check_id(alg, text); }; });

  auto* prof = app.add_subcommand("profile", "Builtins satisfying all the equations");
  prof->add_option("-e,--equation", texts)->required();
  prof->callback([&] { action = [&] { return profile_cmd(texts); }; });

  auto* cls = app.add_subcommand("classify", "Least subvariety containing an algebra");
  cls->add_option("algebra", alg)->required();
  cls->callback([&] { action = [&] { return classify_cmd(alg); }; });

  auto* st = app.add_subcommand("structure", "Structural analysis");
  st->require_subcommand(1);
  for (const char* w : {"sub", "aut", "con", "simple", "sc", "height", "disc", "primal"}) {
    auto* c = st->add_subcommand(w);
    c->add_option("-a,--algebra", alg)->required();
    if (std::string(w) == "primal") c->add_flag("--oracle", oracle, "Also run the clone closure (size <= 3)");
    c->callback([&, w] {
      what = w;
      action = [&] { return structure_cmd(what, alg, oracle); };
    });
  }
  st->get_subcommand("sub")->description("Subalgebras");
  st->get_subcommand("aut")->description("Automorphisms");
  st->get_subcommand("con")->description("Congruences, finest first");
  st->get_subcommand("simple")->description("Simplicity and subdirect irreducibility");
  st->get_subcommand("sc")->description("x /\\ x'* = 0 for every x != 1");
  st->get_subcommand("height")->description("Length of the longest chain");
  st->get_subcommand("disc")->description("Check the ternary discriminator term");
  st->get_subcommand("primal")->description("Primality via the quasiprimality criterion");

  auto* prod = app.add_subcommand("product", "Direct product");
  prod->add_option("algebras", names)->required();
  prod->add_option("-o,--output", path, "Write the product to a JSON file");
  prod->add_option("--limit", limit, "Largest allowed carrier");
  prod->callback([&] { action = [&] { return product_cmd(names, path, limit); }; });

  auto* dec = app.add_subcommand("decompose", "Split into simple factors");
  dec->add_option("algebra", alg)->required();
  dec->add_option("--method", method)->check(CLI::IsMember({"auto", "lattice", "central"}));
  dec->callback([&] { action = [&] { return decompose_cmd(alg, method); }; });

  auto* en = app.add_subcommand("enumerate", "All models up to isomorphism");
  en->add_option("--max-size", max_size)->check(CLI::Range(1, 4));
  en->callback([&] { action = [&] { return enumerate_cmd(max_size); }; });

  auto* var = app.add_subcommand("variety", "The lattice of subvarieties");
  var->require_subcommand(1);
  auto* vl = var->add_subcommand("lattice", "List the 32 subvarieties");
  vl->add_flag("--dot", dot, "Graphviz order diagram");
  vl->callback([&] { action = [&] { return variety_lattice(dot); }; });
  auto* vb = var->add_subcommand("base", "Equational base of a subvariety, e.g. 135");
  vb->add_option("S", set)->required();
  vb->callback([&] { action = [&] { return variety_base(set); }; });
  var->add_subcommand("verify", "Check all 30 bases")->callback([&] { action = variety_verify; });
  var->add_subcommand("catalog", "Check the identity catalog")->callback([&] { action = variety_catalog; });

  auto* lg = app.add_subcommand("logic", "Formulas, proofs and extensions");
  lg->require_subcommand(1);
  auto* dc = lg->add_subcommand("decide", "Validity in the extension for a set of matrices");
  dc->add_option("-S,--set", set, "Subvariety id; default all five");
  dc->add_option("formula", text)->required();
  dc->callback([&] { action = [&] { return logic_decide(text, set); }; });
  auto* pc = lg->add_subcommand("prove-check", "Check a Hilbert derivation in JSON");
  pc->add_option("proof", path)->required();
  pc->callback([&] { action = [&] { return logic_prove_check(path); }; });
  lg->add_subcommand("axioms", "List the axiom schemas")->callback([&] { action = logic_axioms; });
  auto* tr = lg->add_subcommand("translate", "Formula to equation, or with --equation the reverse");
  tr->add_option("input", text)->required();
  tr->add_flag("--equation", equation);
  tr->callback([&] { action = [&] { return logic_translate(text, equation); }; });
  lg->add_subcommand("extensions", "Check the 30 extension bases")->callback([&] { action = logic_extensions; });

  auto* rep = app.add_subcommand("report", "Write every verification table");
  rep->add_option("--out", out_dir)->required();
  rep->callback([&] { action = [&] { return report_cmd(out_dir); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (serial) sweep::set_parallel(false);

  try {
    return action();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const AlgebraError& e) {
    std::cerr << "malformed algebra: " << e.what() << "\n";
    return kMalformed;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnboundVariable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    // NotApplicable, SizeLimit, bad subvariety ids and the like
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
