#pragma once
// Independent reference implementations used by the tests. Nothing here calls
// into the library's evaluators, sweeps or structure code.

#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "runo/formula.hpp"
#include "runo/term.hpp"

namespace oracle {

// The five tables typed in again by hand, with labels equal to indices.
struct Tables {
  int n;
  std::vector<std::vector<int>> imp;
  std::vector<int> neg;
  std::vector<int> rank;  // chain position, or -1 for the two atoms of A5
  int join(int x, int y) const {
    if (n == 4) {
      if (x == y) return x;
      if (x == 0) return y;
      if (y == 0) return x;
      return 1;
    }
    return rank[x] >= rank[y] ? x : y;
  }
  int meet(int x, int y) const {
    if (n == 4) {
      if (x == y) return x;
      if (x == 1) return y;
      if (y == 1) return x;
      return 0;
    }
    return rank[x] <= rank[y] ? x : y;
  }
  bool leq(int x, int y) const { return meet(x, y) == x; }
};

inline const Tables& table(int i) {
  static const std::array<Tables, 5> t = {{
      {3, {{1, 2, 1}, {0, 1, 2}, {0, 1, 1}}, {1, 0, 2}, {0, 2, 1}},
      {3, {{1, 2, 1}, {0, 1, 2}, {0, 2, 1}}, {1, 0, 2}, {0, 2, 1}},
      {3, {{1, 2, 2}, {0, 1, 2}, {0, 1, 1}}, {1, 0, 2}, {0, 2, 1}},
      {3, {{1, 2, 2}, {0, 1, 2}, {0, 2, 1}}, {1, 0, 2}, {0, 2, 1}},
      {4, {{1, 2, 1, 2}, {0, 1, 2, 3}, {3, 2, 1, 0}, {2, 1, 2, 1}}, {1, 0, 2, 3}, {}},
  }};
  return t.at(static_cast<std::size_t>(i - 1));
}

// Plain recursion over the term tree, straight from the definitions.
inline int eval(const Tables& a, const runo::Term& t, const std::map<std::string, int>& v) {
  using runo::TermOp;
  switch (t.op()) {
    case TermOp::Var: return v.at(t.name());
    case TermOp::Zero: return 0;
    case TermOp::One: return 1;
    case TermOp::Join: return a.join(eval(a, t.lhs(), v), eval(a, t.rhs(), v));
    case TermOp::Meet: return a.meet(eval(a, t.lhs(), v), eval(a, t.rhs(), v));
    case TermOp::Imp: return a.imp[eval(a, t.lhs(), v)][eval(a, t.rhs(), v)];
    case TermOp::Neg: return a.neg[eval(a, t.lhs(), v)];
    case TermOp::Star: return a.imp[eval(a, t.lhs(), v)][0];
    case TermOp::Plus: return a.neg[a.imp[a.neg[eval(a, t.lhs(), v)]][0]];
    case TermOp::ImpH: {
      const int x = eval(a, t.lhs(), v), y = eval(a, t.rhs(), v);
      return a.imp[x][a.meet(x, y)];
    }
  }
  return -1;
}

inline int eval(const Tables& a, const runo::Formula& f, const std::map<std::string, int>& v) {
  using runo::FormulaOp;
  auto L = [&] { return eval(a, f.lhs(), v); };
  auto R = [&] { return eval(a, f.rhs(), v); };
  switch (f.op()) {
    case FormulaOp::Var: return v.at(f.name());
    case FormulaOp::Bot: return 0;
    case FormulaOp::Top: return 1;
    case FormulaOp::Or: return a.join(L(), R());
    case FormulaOp::And: return a.meet(L(), R());
    case FormulaOp::Imp: return a.imp[L()][R()];
    case FormulaOp::Dneg: return a.neg[L()];
    case FormulaOp::Neg: return a.imp[L()][0];
    case FormulaOp::ImpH: {
      const int x = L(), y = R();
      return a.imp[x][a.meet(x, y)];
    }
    case FormulaOp::IffH: {
      const int x = L(), y = R();
      return a.meet(a.imp[x][a.meet(x, y)], a.imp[y][a.meet(x, y)]);
    }
  }
  return -1;
}

// Calls f on every assignment of `vars` into {0..n-1}.
inline void for_each_valuation(int n, const std::vector<std::string>& vars,
                               const std::function<void(const std::map<std::string, int>&)>& f) {
  std::map<std::string, int> v;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == vars.size()) {
      f(v);
      return;
    }
    for (int x = 0; x < n; ++x) {
      v[vars[k]] = x;
      rec(k + 1);
    }
  };
  rec(0);
}

inline bool valid(int i, const runo::Formula& f) {
  const auto& a = table(i);
  const auto vs = f.variables();
  bool ok = true;
  for_each_valuation(a.n, {vs.begin(), vs.end()}, [&](const auto& v) { ok = ok && eval(a, f, v) == 1; });
  return ok;
}

inline bool holds(int i, const runo::Equation& e) {
  const auto& a = table(i);
  bool ok = true;
  for_each_valuation(a.n, e.variables(),
                     [&](const auto& v) { ok = ok && eval(a, e.lhs, v) == eval(a, e.rhs, v); });
  return ok;
}

// All set partitions of {0..n-1} as restricted growth strings.
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int k, int maxb) {
    if (k == n) {
      out.push_back(rgs);
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      rgs[static_cast<std::size_t>(k)] = b;
      rec(k + 1, std::max(maxb, b));
    }
  };
  if (n == 0) return {{}};
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

}  // namespace oracle
