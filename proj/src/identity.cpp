#include "runo/identity.hpp"

#include <set>

#include "runo/builtin.hpp"
#include "runo/sweep.hpp"

namespace runo {

namespace {

Valuation to_valuation(const std::vector<std::string>& vars, std::span<const Element> t) {
  Valuation v;
  for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = t[i];
  return v;
}

struct CompiledEq {
  CompiledTerm lhs, rhs;
  CompiledEq(const Equation& e, const std::vector<std::string>& vars)
      : lhs(e.lhs, vars), rhs(e.rhs, vars) {}
  bool eval(const FiniteAlgebra& a, std::span<const Element> t, std::vector<Element>& stack) const {
    return lhs.eval(a, t, stack) == rhs.eval(a, t, stack);
  }
};

template <bool Parallel>
Verdict check_equation(const FiniteAlgebra& a, const Equation& eq) {
  const auto vars = eq.variables();
  const CompiledEq ceq(eq, vars);
  auto ok = [&](std::span<const Element> t) {
    thread_local std::vector<Element> stack;
    return ceq.eval(a, t, stack);
  };
  auto bad = Parallel ? sweep::first_failure(a.size(), vars.size(), ok)
                      : sweep::first_failure_serial(a.size(), vars.size(), ok);
  if (!bad) return {};
  return {false, to_valuation(vars, *bad)};
}

template <bool Parallel>
Verdict check_quasi(const FiniteAlgebra& a, const QuasiIdentity& q) {
  std::set<std::string> names;
  for (const auto& p : q.premises)
    for (const auto& v : p.variables()) names.insert(v);
  for (const auto& v : q.conclusion.variables()) names.insert(v);
  const std::vector<std::string> vars(names.begin(), names.end());

  std::vector<CompiledEq> premises;
  premises.reserve(q.premises.size());
  for (const auto& p : q.premises) premises.emplace_back(p, vars);
  const CompiledEq conclusion(q.conclusion, vars);

  auto ok = [&](std::span<const Element> t) {
    thread_local std::vector<Element> stack;
    for (const auto& p : premises)
      if (!p.eval(a, t, stack)) return true;
    return conclusion.eval(a, t, stack);
  };
  auto bad = Parallel ? sweep::first_failure(a.size(), vars.size(), ok)
                      : sweep::first_failure_serial(a.size(), vars.size(), ok);
  if (!bad) return {};
  return {false, to_valuation(vars, *bad)};
}

}  // namespace

Verdict holds(const FiniteAlgebra& a, const Equation& eq) { return check_equation<true>(a, eq); }
Verdict holds_serial(const FiniteAlgebra& a, const Equation& eq) {
  return check_equation<false>(a, eq);
}

Verdict holds_quasi(const FiniteAlgebra& a, const QuasiIdentity& q) {
  return check_quasi<true>(a, q);
}
Verdict holds_quasi_serial(const FiniteAlgebra& a, const QuasiIdentity& q) {
  return check_quasi<false>(a, q);
}

SubvarietyId profile(std::span<const Equation> eqs) {
  SubvarietyId out;
  for (int i = 1; i <= 5; ++i) {
    bool all = true;
    for (const auto& e : eqs) {
      if (!holds(builtin(i), e).holds) {
        all = false;
        break;
      }
    }
    if (all) out = out.with(i);
  }
  return out;
}

SubvarietyId profile(const Equation& eq) { return profile(std::span<const Equation>(&eq, 1)); }

std::vector<std::uint8_t> satisfaction_set(const FiniteAlgebra& a, const Equation& eq,
                                           const std::vector<std::string>& vars) {
  const CompiledEq ceq(eq, vars);
  return sweep::map_all(a.size(), vars.size(), [&](std::span<const Element> t) {
    thread_local std::vector<Element> stack;
    return ceq.eval(a, t, stack);
  });
}

}  // namespace runo
