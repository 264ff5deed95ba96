#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "runo/subvariety.hpp"
#include "runo/term.hpp"

namespace runo {

enum class EntryKind { Axiom, Base, Identity };

struct CatalogEquation {
  std::string label;
  std::string text;
  Equation eq;
};

/// A named equation set with the subvariety it is claimed to hold in.
/// `exact` entries claim the computed profile equals `claimed`; the others
/// only claim it holds on every algebra in `claimed`.
struct CatalogEntry {
  std::string id;
  EntryKind kind = EntryKind::Identity;
  std::string source;
  std::vector<CatalogEquation> equations;
  SubvarietyId claimed;
  bool exact = false;
  std::string note;

  std::vector<Equation> eqs() const;
};

/// Parses the catalog JSON document. Throws ShapeError (or ParseError for a
/// bad equation) on malformed input, and on duplicate ids or labels.
std::vector<CatalogEntry> parse_catalog(std::string_view json);

/// The shipped catalog (data/catalog.json), parsed once.
const std::vector<CatalogEntry>& catalog();

/// Lookup by entry id ("T5.2-2iv", "C6.1-9"). Throws std::out_of_range.
const CatalogEntry& catalog_entry(std::string_view id);
/// Lookup of a single equation by label ("T5.2-1iii-a").
std::optional<CatalogEquation> catalog_equation(std::string_view label);

struct CatalogCheck {
  const CatalogEntry* entry = nullptr;
  SubvarietyId computed;
  std::vector<SubvarietyId> per_equation;
  bool holds_on_claimed = true;  // claimed ⊆ computed
  bool exact_ok = true;          // computed == claimed, when the entry is exact

  bool erratum() const { return !holds_on_claimed || !exact_ok; }
  std::string describe() const;
};

struct CatalogReport {
  std::vector<CatalogCheck> checks;

  std::size_t errata() const;
  std::string to_json() const;
  std::string to_text() const;
};

CatalogReport verify_catalog(const std::vector<CatalogEntry>& entries);
CatalogReport verify_catalog();

std::string_view entry_kind_name(EntryKind k);

}  // namespace runo
