#include "runo/logic.hpp"

#include <json.hpp>
#include <sstream>

#include "runo/builtin.hpp"
#include "runo/identity.hpp"
#include "runo/sweep.hpp"
#include "runo/variety.hpp"

namespace runo::data {
extern const std::string_view kExtensionsJson;
}

namespace runo {

namespace {

// Postfix program for a formula, evaluated directly on the matrix algebra.
// Deliberately separate from CompiledTerm so that theoremhood and the
// translated identity check do not share an evaluator.
class FormulaProgram {
 public:
  FormulaProgram(const Formula& f, const std::vector<std::string>& slots) {
    struct Frame {
      const Formula* f;
      bool expanded;
    };
    std::vector<Frame> todo{{&f, false}};
    while (!todo.empty()) {
      Frame fr = todo.back();
      todo.pop_back();
      if (!fr.expanded) {
        todo.push_back({fr.f, true});
        if (fr.f->is_binary()) todo.push_back({&fr.f->rhs(), false});
        if (fr.f->is_binary() || fr.f->is_unary()) todo.push_back({&fr.f->lhs(), false});
        continue;
      }
      std::uint32_t slot = 0;
      if (fr.f->op() == FormulaOp::Var) {
        const auto it = std::find(slots.begin(), slots.end(), fr.f->name());
        if (it == slots.end()) throw UnboundVariable(fr.f->name());
        slot = static_cast<std::uint32_t>(it - slots.begin());
      }
      code_.push_back({fr.f->op(), slot});
    }
  }

  Element eval(const FiniteAlgebra& a, std::span<const Element> v,
               std::vector<Element>& st) const {
    st.clear();
    auto pop = [&st] {
      const Element x = st.back();
      st.pop_back();
      return x;
    };
    for (const auto& in : code_) {
      switch (in.op) {
        case FormulaOp::Var: st.push_back(v[in.slot]); break;
        case FormulaOp::Bot: st.push_back(a.zero()); break;
        case FormulaOp::Top: st.push_back(a.one()); break;
        case FormulaOp::Dneg: st.back() = a.neg(st.back()); break;
        case FormulaOp::Neg: st.back() = a.imp(st.back(), a.zero()); break;
        default: {
          const Element y = pop(), x = pop();
          Element r = 0;
          switch (in.op) {
            case FormulaOp::Or: r = a.join(x, y); break;
            case FormulaOp::And: r = a.meet(x, y); break;
            case FormulaOp::Imp: r = a.imp(x, y); break;
            case FormulaOp::ImpH: r = a.imp(x, a.meet(x, y)); break;
            case FormulaOp::IffH:
              r = a.meet(a.imp(x, a.meet(x, y)), a.imp(y, a.meet(y, x)));
              break;
            default: break;
          }
          st.push_back(r);
        }
      }
    }
    return st.back();
  }

 private:
  struct Instr {
    FormulaOp op;
    std::uint32_t slot;
  };
  std::vector<Instr> code_;
};

std::vector<std::string> sorted_vars(std::span<const Formula> fs) {
  std::set<std::string> s;
  for (const auto& f : fs) s.merge(f.variables());
  return {s.begin(), s.end()};
}

Valuation to_valuation(const std::vector<std::string>& vars, std::span<const Element> t) {
  Valuation v;
  for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = t[i];
  return v;
}

template <bool Parallel>
Validity check_validity(const Formula& f, const Matrix& m) {
  const auto vars = sorted_vars(std::span<const Formula>(&f, 1));
  const FormulaProgram prog(f, vars);
  const FiniteAlgebra& a = *m.algebra;
  auto ok = [&](std::span<const Element> t) {
    thread_local std::vector<Element> st;
    return prog.eval(a, t, st) == m.designated();
  };
  auto bad = Parallel ? sweep::first_failure(a.size(), vars.size(), ok)
                      : sweep::first_failure_serial(a.size(), vars.size(), ok);
  if (!bad) return {};
  return {false, to_valuation(vars, *bad)};
}

const char* const kSchemaText[kSchemaCount] = {
    "alpha ->h alpha \\/ beta",
    "beta ->h alpha \\/ beta",
    "(alpha ->h gamma) ->h ((beta ->h gamma) ->h (alpha \\/ beta ->h gamma))",
    "alpha /\\ beta ->h alpha",
    "(gamma ->h alpha) ->h ((gamma ->h beta) ->h (gamma ->h alpha /\\ beta))",
    "top",
    "bot ->h alpha",
    "(alpha /\\ beta ->h gamma) ->h (alpha ->h (beta ->h gamma))",
    "(alpha ->h (beta ->h gamma)) ->h (alpha /\\ beta ->h gamma)",
    "(alpha ->h beta) ->h ((beta ->h alpha) ->h ((alpha -> gamma) ->h (beta -> gamma)))",
    "(alpha ->h beta) ->h ((beta ->h alpha) ->h ((gamma -> beta) ->h (gamma -> alpha)))",
    "top <->h ~bot",
    "~(alpha /\\ beta) <->h ~alpha \\/ ~beta",
    "~(alpha \\/ beta) <->h ~alpha /\\ ~beta",
    "~~alpha <->h alpha",
    "~(bot -> top) <->h bot -> top",
    "(alpha /\\ ~!~alpha) \\/ (beta \\/ !beta) <->h beta \\/ !beta",
    "!~(alpha /\\ !~alpha) <->h alpha /\\ !~alpha",
};

struct Schemas {
  std::vector<Formula> plain, desugared;
  Schemas() {
    for (const char* s : kSchemaText) {
      plain.push_back(parse_formula(s));
      desugared.push_back(desugar(plain.back()));
    }
  }
};

const Schemas& schemas() {
  static const Schemas s;
  return s;
}

void check_schema_id(int id) {
  if (id < 1 || id > kSchemaCount) throw std::out_of_range("schema id must be in 1..18");
}

std::vector<ExtensionInfo> build_extensions() {
  const auto doc = nlohmann::json::parse(data::kExtensionsJson);
  std::map<std::uint8_t, ExtensionInfo> by_mask;
  for (const auto& j : doc.at("extensions")) {
    ExtensionInfo e;
    e.id = SubvarietyId::parse(j.at("id").get<std::string>());
    e.source = j.value("source", "");
    e.note = j.value("note", "");
    for (const auto& t : j.at("formulas")) {
      e.base_text.push_back(t.get<std::string>());
      e.base.push_back(parse_formula(e.base_text.back()));
    }
    if (j.contains("printed")) e.printed = j.at("printed").get<std::vector<std::string>>();
    if (!by_mask.emplace(e.id.mask(), e).second)
      throw std::logic_error("duplicate extension " + e.id.digits());
  }
  std::vector<ExtensionInfo> out;
  for (const auto& v : lattice()) {
    if (v.height == 0) {
      out.push_back({v.id, {Formula::var("p")}, {"p"}, {}, "inconsistent extension", {}});
    } else if (v.height == 5) {
      out.push_back({v.id, {}, {}, {}, "the base logic itself", {}});
    } else {
      const auto it = by_mask.find(v.id.mask());
      if (it == by_mask.end()) throw std::logic_error("no extension base for " + v.id.digits());
      out.push_back(it->second);
    }
  }
  return out;
}

}  // namespace

Matrix matrix(const FiniteAlgebra& a) { return Matrix{&a}; }

Element evaluate(const FiniteAlgebra& a, const Formula& f, const Valuation& v) {
  std::vector<std::string> slots;
  std::vector<Element> values;
  for (const auto& [k, x] : v) {
    if (x >= a.size()) throw std::out_of_range("value of " + k + " is not an element");
    slots.push_back(k);
    values.push_back(x);
  }
  std::vector<Element> st;
  return FormulaProgram(f, slots).eval(a, values, st);
}

Validity is_valid(const Formula& f, const Matrix& m) { return check_validity<true>(f, m); }
Validity is_valid_serial(const Formula& f, const Matrix& m) { return check_validity<false>(f, m); }

bool is_theorem(const Formula& f) { return decide_in_extension(f, SubvarietyId::all()); }

Consequence consequence(std::span<const Formula> gamma, const Formula& phi) {
  std::vector<Formula> all(gamma.begin(), gamma.end());
  all.push_back(phi);
  const auto vars = sorted_vars(all);
  std::vector<FormulaProgram> premises;
  for (const auto& g : gamma) premises.emplace_back(g, vars);
  const FormulaProgram goal(phi, vars);

  for (int i = 1; i <= 5; ++i) {
    const FiniteAlgebra& a = builtin(i);
    auto bad = sweep::first_failure(a.size(), vars.size(), [&](std::span<const Element> t) {
      thread_local std::vector<Element> st;
      for (const auto& p : premises)
        if (p.eval(a, t, st) != a.one()) return true;
      return goal.eval(a, t, st) == a.one();
    });
    if (bad) return {false, std::make_pair(i, to_valuation(vars, *bad))};
  }
  return {};
}

Equation tau(const Formula& f) { return {to_term(f), Term::one()}; }

std::pair<Formula, Formula> rho(const Equation& e) {
  const Formula s = from_term(e.lhs), t = from_term(e.rhs);
  return {Formula::imp_h(s, t), Formula::imp_h(t, s)};
}

const Formula& axiom_schema(int id) {
  check_schema_id(id);
  return schemas().plain[static_cast<std::size_t>(id - 1)];
}

std::optional<std::pair<int, std::map<std::string, Formula>>> axiom_instance(const Formula& f) {
  const Formula d = desugar(f);
  const auto& ds = schemas().desugared;
  for (int i = 0; i < kSchemaCount; ++i)
    if (auto sigma = match(ds[static_cast<std::size_t>(i)], d)) return std::make_pair(i + 1, *sigma);
  return std::nullopt;
}

bool is_instance_of(const Formula& f, int id, const std::map<std::string, Formula>& subst) {
  check_schema_id(id);
  const auto sigma = match(schemas().desugared[static_cast<std::size_t>(id - 1)], desugar(f));
  if (!sigma) return false;
  for (const auto& [k, v] : subst) {
    const auto it = sigma->find(k);
    if (it == sigma->end() || it->second != desugar(v)) return false;
  }
  return true;
}

Formula schema_instance(int id) {
  return substitute(axiom_schema(id), {{"alpha", Formula::var("p")},
                                       {"beta", Formula::var("q")},
                                       {"gamma", Formula::var("r")}});
}

const std::vector<ExtensionInfo>& extensions() {
  static const std::vector<ExtensionInfo> e = build_extensions();
  return e;
}

const ExtensionInfo& extension(SubvarietyId s) {
  for (const auto& e : extensions())
    if (e.id == s) return e;
  throw std::logic_error("unreachable: every subvariety has an extension");
}

bool decide_in_extension(const Formula& f, SubvarietyId s) {
  for (int i = 1; i <= 5; ++i)
    if (s.contains(i) && !is_valid(f, matrix(builtin(i))).valid) return false;
  return true;
}

SubvarietyId validity_profile(std::span<const Formula> fs) {
  SubvarietyId out;
  for (int i = 1; i <= 5; ++i) {
    bool all = true;
    for (const auto& f : fs)
      if (!is_valid(f, matrix(builtin(i))).valid) {
        all = false;
        break;
      }
    if (all) out = out.with(i);
  }
  return out;
}

std::size_t ExtensionReport::errata() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += !c.exact();
  return n;
}

std::size_t ExtensionReport::printed_errata() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += !c.printed_exact();
  return n;
}

std::string ExtensionReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json r = {{"extension", c.info->id.digits()},
                        {"source", c.info->source},
                        {"base", c.info->base_text},
                        {"computed", c.computed.digits()},
                        {"status", c.exact() ? "exact" : "erratum"}};
    nlohmann::json per = nlohmann::json::array();
    for (auto p : c.per_formula) per.push_back(p.digits());
    r["per_formula"] = per;
    if (c.info->printed) {
      r["printed"] = *c.info->printed;
      r["printed_computed"] = c.printed_computed->digits();
      r["printed_status"] = c.printed_exact() ? "exact" : "erratum";
    }
    if (!c.info->note.empty()) r["note"] = c.info->note;
    rows.push_back(std::move(r));
  }
  nlohmann::json out = {{"extensions", rows},
                        {"total", checks.size()},
                        {"errata", errata()},
                        {"printed_errata", printed_errata()}};
  return out.dump(2) + "\n";
}

std::string ExtensionReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.exact() ? "exact   " : "ERRATUM ") << c.info->id.digits() << "  (" << c.info->source
       << ")  computed " << c.computed.digits();
    if (c.info->printed)
      os << "  [printed base computes " << c.printed_computed->digits()
         << (c.printed_exact() ? "" : ", not exact") << "]";
    os << "\n";
  }
  os << checks.size() - errata() << "/" << checks.size() << " extension bases exact";
  if (printed_errata()) os << ", " << printed_errata() << " printed base(s) incomplete";
  os << "\n";
  return os.str();
}

ExtensionReport verify_extensions() {
  ExtensionReport r;
  for (const auto& e : extensions()) {
    if (e.id.empty() || e.id == SubvarietyId::all()) continue;
    ExtensionCheck c;
    c.info = &e;
    c.computed = SubvarietyId::all();
    for (const auto& f : e.base) {
      const auto p = validity_profile(std::span<const Formula>(&f, 1));
      c.per_formula.push_back(p);
      c.computed = c.computed & p;
    }
    if (e.printed) {
      std::vector<Formula> fs;
      for (const auto& t : *e.printed) fs.push_back(parse_formula(t));
      c.printed_computed = validity_profile(fs);
    }
    r.checks.push_back(std::move(c));
  }
  return r;
}

bool SoundnessReport::ok() const {
  for (const auto& row : schema_valid)
    for (bool b : row)
      if (!b) return false;
  for (int i = 0; i < 5; ++i)
    if (!smp[i] || !scp[i]) return false;
  return true;
}

std::string SoundnessReport::to_text() const {
  std::ostringstream os;
  os << "schema  A1 A2 A3 A4 A5\n";
  for (int s = 0; s < kSchemaCount; ++s) {
    os << (s + 1 < 10 ? " " : "") << s + 1 << "     ";
    for (bool b : schema_valid[static_cast<std::size_t>(s)]) os << (b ? "  +" : "  -");
    os << "\n";
  }
  os << "SMP     ";
  for (bool b : smp) os << (b ? "  +" : "  -");
  os << "\nSCP     ";
  for (bool b : scp) os << (b ? "  +" : "  -");
  os << "\n";
  return os.str();
}

SoundnessReport soundness_report() {
  SoundnessReport r;
  for (int s = 1; s <= kSchemaCount; ++s) {
    const Formula f = schema_instance(s);
    for (int i = 1; i <= 5; ++i)
      r.schema_valid[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(i - 1)] =
          is_valid(f, matrix(builtin(i))).valid;
  }
  for (int i = 1; i <= 5; ++i) {
    const FiniteAlgebra& a = builtin(i);
    bool smp = true, scp = true;
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < a.size(); ++y) {
        const auto ex = static_cast<Element>(x), ey = static_cast<Element>(y);
        const bool premise = a.imp_h(ex, ey) == a.one();
        if (ex == a.one() && premise && ey != a.one()) smp = false;
        if (premise && a.imp_h(a.neg(ey), a.neg(ex)) != a.one()) scp = false;
      }
    r.smp[static_cast<std::size_t>(i - 1)] = smp;
    r.scp[static_cast<std::size_t>(i - 1)] = scp;
  }
  return r;
}

bool AlgebraizabilityReport::ok() const {
  for (const auto& f : formulas)
    if (f.theorem != f.tau_identity) return false;
  for (const auto& e : equations)
    for (bool b : e.same_satisfaction)
      if (!b) return false;
  return true;
}

AlgebraizabilityReport cross_check_algebraizability(std::span<const Formula> formulas,
                                                    std::span<const Equation> equations) {
  AlgebraizabilityReport r;
  for (const auto& f : formulas)
    r.formulas.push_back({f, is_theorem(f), profile(tau(f)) == SubvarietyId::all()});
  for (const auto& e : equations) {
    const auto vars = e.variables();
    const auto [fwd, bwd] = rho(e);
    const Equation e1 = tau(fwd), e2 = tau(bwd);
    AlgebraizabilityReport::EquationRow row{e, {}};
    for (int i = 1; i <= 5; ++i) {
      const FiniteAlgebra& a = builtin(i);
      const auto direct = satisfaction_set(a, e, vars);
      auto s1 = satisfaction_set(a, e1, vars);
      const auto s2 = satisfaction_set(a, e2, vars);
      for (std::size_t k = 0; k < s1.size(); ++k) s1[k] = s1[k] && s2[k];
      row.same_satisfaction[static_cast<std::size_t>(i - 1)] = s1 == direct;
    }
    r.equations.push_back(std::move(row));
  }
  return r;
}

std::vector<Formula> sample_formulas() {
  std::vector<Formula> out;
  for (int s = 1; s <= kSchemaCount; ++s) out.push_back(schema_instance(s));
  for (const char* t : {"p \\/ ~p", "p -> q", "p ->h p", "~p <->h !p", "!!p ->h p",
                        "@alpha -> top"})
    out.push_back(parse_formula(t));
  return out;
}

std::vector<Equation> sample_equations() {
  std::vector<Equation> out;
  for (const char* t : {"x -> x = 1", "x = y", "x /\\ y = x", "x'' = x", "(0 -> 1)' = 0 -> 1",
                        "x /\\ (x -> y) = x /\\ y", "x* \\/ x** = 1"})
    out.push_back(parse_equation(t));
  return out;
}

}  // namespace runo
