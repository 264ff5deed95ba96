#include "runo/variety.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <sstream>

#include "runo/builtin.hpp"
#include "runo/catalog.hpp"
#include "runo/identity.hpp"

namespace runo {

namespace {

std::vector<VarietyInfo> build_lattice() {
  std::map<std::uint8_t, const CatalogEntry*> bases;
  for (const auto& e : catalog())
    if (e.kind == EntryKind::Base) bases[e.claimed.mask()] = &e;

  std::vector<VarietyInfo> out;
  for (std::uint8_t m = 0; m < 32; ++m) {
    VarietyInfo v;
    v.id = SubvarietyId::from_mask(m);
    v.height = static_cast<std::size_t>(v.id.size());
    if (m == 0) {
      v.base = {parse_equation("x = y")};
    } else if (m != 31) {
      const auto it = bases.find(m);
      if (it == bases.end())
        throw std::logic_error("catalog has no base for " + v.id.pretty());
      v.base = it->second->eqs();
      v.source = it->second->id;
    }
    out.push_back(std::move(v));
  }
  std::stable_sort(out.begin(), out.end(), [](const VarietyInfo& a, const VarietyInfo& b) {
    return a.height < b.height;
  });
  return out;
}

template <bool Parallel>
BaseReport verify() {
  std::vector<const VarietyInfo*> proper;
  for (const auto& v : lattice())
    if (v.height > 0 && v.height < 5) proper.push_back(&v);
  BaseReport r;
  r.checks.resize(proper.size());
  const auto n = static_cast<std::int64_t>(proper.size());
#pragma omp parallel for schedule(dynamic) if (Parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto* v = proper[static_cast<std::size_t>(i)];
    r.checks[static_cast<std::size_t>(i)] = BaseCheck{v->id, v->source, profile(v->base)};
  }
  return r;
}

}  // namespace

const std::vector<VarietyInfo>& lattice() {
  static const std::vector<VarietyInfo> l = build_lattice();
  return l;
}

const VarietyInfo& variety_info(SubvarietyId s) {
  for (const auto& v : lattice())
    if (v.id == s) return v;
  throw std::logic_error("unreachable: every mask is in the lattice");
}

std::vector<Equation> base_of(SubvarietyId s) { return variety_info(s).base; }

std::vector<SubvarietyId> covers(SubvarietyId s) {
  std::vector<SubvarietyId> out;
  for (int i = 1; i <= 5; ++i)
    if (!s.contains(i)) out.push_back(s.with(i));
  return out;
}

std::string lattice_dot() {
  std::ostringstream os;
  os << "digraph subvarieties {\n  rankdir=BT;\n  node [shape=box];\n";
  auto node = [](SubvarietyId s) { return "v" + std::to_string(s.mask()); };
  for (const auto& v : lattice())
    os << "  " << node(v.id) << " [label=\"" << v.id.digits() << "\"];\n";
  for (const auto& v : lattice())
    for (auto c : covers(v.id)) os << "  " << node(v.id) << " -> " << node(c) << ";\n";
  os << "}\n";
  return os.str();
}

std::size_t BaseReport::errata() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const BaseCheck& c) { return !c.exact(); }));
}

std::string BaseReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : checks)
    rows.push_back({{"subvariety", c.id.digits()},
                    {"source", c.source},
                    {"computed", c.computed.digits()},
                    {"status", c.exact() ? "exact" : "erratum"}});
  nlohmann::json out = {{"bases", rows}, {"total", checks.size()}, {"errata", errata()}};
  return out.dump(2) + "\n";
}

std::string BaseReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.exact() ? "exact   " : "ERRATUM ") << c.id.digits() << "  (" << c.source
       << ")  computed " << c.computed.digits() << "\n";
  }
  os << checks.size() - errata() << "/" << checks.size() << " bases exact\n";
  return os.str();
}

BaseReport verify_bases() { return verify<true>(); }
BaseReport verify_bases_serial() { return verify<false>(); }

SubvarietyId classify(const FiniteAlgebra& a) {
  SubvarietyId s;
  for (int i : decompose(a).builtin) s = s.with(i);
  return s;
}

ImplicationReport check_unit_implies_zero_star(std::size_t limit) {
  const Equation premise = parse_equation("(0 -> 1) -> 1 = 1");
  const Equation conclusion = parse_equation("(0 -> 1)* = 0");
  ImplicationReport r;
  auto check = [&](const FiniteAlgebra& a) {
    ++r.checked;
    if (!holds(a, premise).holds) return;
    ++r.premise_holds;
    if (!holds(a, conclusion).holds) r.failures.push_back(a.name());
  };

  // multisets of builtins, as nondecreasing index sequences
  std::vector<int> seq;
  auto rec = [&](auto&& self, int from, std::size_t size) -> void {
    if (!seq.empty()) {
      std::vector<FiniteAlgebra> fs;
      for (int i : seq) fs.push_back(builtin(i));
      check(direct_product(fs, limit));
    }
    for (int i = from; i <= 5; ++i) {
      const std::size_t next = size * builtin(i).size();
      if (next > limit) continue;
      seq.push_back(i);
      self(self, i, next);
      seq.pop_back();
    }
  };
  rec(rec, 1, 1);
  for (const auto& a : enumerate_runo1(4)) check(a);
  return r;
}

}  // namespace runo
