#include "runo/catalog.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "runo/identity.hpp"

namespace runo::data {
extern const std::string_view kCatalogJson;
}

namespace runo {

using nlohmann::json;

std::vector<Equation> CatalogEntry::eqs() const {
  std::vector<Equation> out;
  out.reserve(equations.size());
  for (const auto& e : equations) out.push_back(e.eq);
  return out;
}

std::string_view entry_kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::Axiom: return "axiom";
    case EntryKind::Base: return "base";
    case EntryKind::Identity: return "identity";
  }
  return "?";
}

namespace {

EntryKind kind_from(const std::string& s) {
  if (s == "axiom") return EntryKind::Axiom;
  if (s == "base") return EntryKind::Base;
  if (s == "identity") return EntryKind::Identity;
  throw ShapeError("catalog: unknown kind '" + s + "'");
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ShapeError(std::string("catalog: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    throw ShapeError("catalog: expected an object with an 'entries' array");

  std::vector<CatalogEntry> out;
  std::set<std::string> ids, labels;
  try {
    for (const auto& j : doc["entries"]) {
      CatalogEntry e;
      e.id = j.at("id").get<std::string>();
      e.kind = kind_from(j.at("kind").get<std::string>());
      e.source = j.value("source", "");
      e.claimed = SubvarietyId::parse(j.at("claimed").get<std::string>());
      e.exact = j.value("exact", false);
      e.note = j.value("note", "");
      if (!ids.insert(e.id).second) throw ShapeError("catalog: duplicate id " + e.id);
      for (const auto& q : j.at("equations")) {
        CatalogEquation ce;
        ce.label = q.at("label").get<std::string>();
        ce.text = q.at("text").get<std::string>();
        ce.eq = parse_equation(ce.text);
        if (ce.label != e.id && !labels.insert(ce.label).second)
          throw ShapeError("catalog: duplicate label " + ce.label);
        e.equations.push_back(std::move(ce));
      }
      if (e.equations.empty()) throw ShapeError("catalog: entry " + e.id + " has no equations");
      out.push_back(std::move(e));
    }
  } catch (const json::exception& ex) {
    throw ShapeError(std::string("catalog: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ShapeError(std::string("catalog: ") + ex.what());
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = parse_catalog(data::kCatalogJson);
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw std::out_of_range("no catalog entry '" + std::string(id) + "'");
}

std::optional<CatalogEquation> catalog_equation(std::string_view label) {
  for (const auto& e : catalog())
    for (const auto& q : e.equations)
      if (q.label == label) return q;
  return std::nullopt;
}

std::string CatalogCheck::describe() const {
  std::ostringstream os;
  if (!holds_on_claimed)
    os << "fails on " << (entry->claimed & computed.complement()).pretty();
  if (!exact_ok) {
    if (!holds_on_claimed) os << "; ";
    os << "claimed exactly " << entry->claimed.pretty() << ", computed " << computed.pretty();
  }
  return os.str();
}

std::size_t CatalogReport::errata() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.erratum();
  return n;
}

std::string CatalogReport::to_json() const {
  json out = json::object();
  json rows = json::array();
  for (const auto& c : checks) {
    json r = {{"id", c.entry->id},
              {"kind", entry_kind_name(c.entry->kind)},
              {"claimed", c.entry->claimed.digits()},
              {"computed", c.computed.digits()},
              {"exact", c.entry->exact},
              {"status", c.erratum() ? "erratum" : "ok"}};
    json per = json::array();
    for (std::size_t i = 0; i < c.per_equation.size(); ++i)
      per.push_back({{"label", c.entry->equations[i].label},
                     {"equation", c.entry->equations[i].text},
                     {"profile", c.per_equation[i].digits()}});
    r["equations"] = per;
    if (c.erratum()) r["erratum"] = c.describe();
    if (!c.entry->note.empty()) r["note"] = c.entry->note;
    rows.push_back(std::move(r));
  }
  out["entries"] = rows;
  out["total"] = checks.size();
  out["errata"] = errata();
  return out.dump(2) + "\n";
}

std::string CatalogReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.erratum() ? "ERRATUM " : "ok      ") << c.entry->id << "  claimed "
       << c.entry->claimed.digits() << (c.entry->exact ? " (exact)" : "") << "  computed "
       << c.computed.digits();
    if (c.erratum()) os << "  -- " << c.describe();
    os << "\n";
  }
  os << checks.size() - errata() << "/" << checks.size() << " entries consistent, " << errata()
     << " errata\n";
  return os.str();
}

CatalogReport verify_catalog(const std::vector<CatalogEntry>& entries) {
  CatalogReport rep;
  rep.checks.resize(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    auto& c = rep.checks[k];
    c.entry = &e;
    c.computed = SubvarietyId::all();
    for (const auto& q : e.equations) {
      const auto p = profile(q.eq);
      c.per_equation.push_back(p);
      c.computed = c.computed & p;
    }
    c.holds_on_claimed = e.claimed.subset_of(c.computed);
    c.exact_ok = !e.exact || c.computed == e.claimed;
  }
  return rep;
}

CatalogReport verify_catalog() { return verify_catalog(catalog()); }

}  // namespace runo
