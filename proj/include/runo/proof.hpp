#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "runo/formula.hpp"

namespace runo {

struct Assume {
  friend bool operator==(const Assume&, const Assume&) = default;
};
struct AxiomUse {
  int schema = 0;
  /// Metavariable bindings; may be partial or empty.
  std::map<std::string, Formula> subst;
  friend bool operator==(const AxiomUse&, const AxiomUse&) = default;
};
/// From step i (phi) and step j (phi ->h gamma), gamma. Indices are 1-based.
struct Smp {
  std::size_t i = 0, j = 0;
  friend bool operator==(const Smp&, const Smp&) = default;
};
/// From step i (phi ->h gamma), ~gamma ->h ~phi.
struct Scp {
  std::size_t i = 0;
  friend bool operator==(const Scp&, const Scp&) = default;
};

using Justification = std::variant<Assume, AxiomUse, Smp, Scp>;

struct ProofStep {
  Formula formula;
  Justification just;
  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

struct Proof {
  /// Assumptions Gamma. When read from a bare step list these are the
  /// formulas of the "assume" steps, in order.
  std::vector<Formula> assumptions;
  std::vector<ProofStep> steps;
  friend bool operator==(const Proof&, const Proof&) = default;
};

struct ProofCheck {
  bool ok = true;
  /// 1-based index of the first step whose justification fails.
  std::optional<std::size_t> first_bad_step;
  std::string reason;
};

/// Structural check of every justification; rules compare desugared forms.
/// An empty proof is rejected.
ProofCheck check_proof(const Proof& p);

/// Reads either a JSON list of steps or {"assumptions": [...], "steps": [...]}.
/// Step: {"formula": str, "just": "assume" | {"axiom": n, "subst": {..}} |
/// {"smp": [i, j]} | {"scp": i}}. Throws ShapeError for anything malformed,
/// including unparsable formulas.
Proof parse_proof(std::string_view json_text);

/// Object form, with formulas printed by to_string.
std::string proof_to_json(const Proof& p);

}  // namespace runo
