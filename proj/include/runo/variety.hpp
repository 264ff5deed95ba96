#pragma once

#include <string>
#include <vector>

#include "runo/algebra.hpp"
#include "runo/structure.hpp"
#include "runo/subvariety.hpp"
#include "runo/term.hpp"

namespace runo {

struct VarietyInfo {
  SubvarietyId id;
  /// Relative to the axioms of the whole variety: empty for the top,
  /// {x = y} for the trivial variety.
  std::vector<Equation> base;
  /// Catalog entry the base comes from; empty for top and bottom.
  std::string source;
  /// Number of generators, i.e. the rank in the lattice.
  std::size_t height = 0;
};

/// All 32 subvarieties, ordered by height and then by generator mask.
const std::vector<VarietyInfo>& lattice();
const VarietyInfo& variety_info(SubvarietyId s);

std::vector<Equation> base_of(SubvarietyId s);

/// Upper covers in the inclusion order.
std::vector<SubvarietyId> covers(SubvarietyId s);

/// Order diagram of the lattice, bottom to top.
std::string lattice_dot();

struct BaseCheck {
  SubvarietyId id;
  std::string source;
  SubvarietyId computed;
  bool exact() const { return computed == id; }
};

struct BaseReport {
  std::vector<BaseCheck> checks;

  std::size_t errata() const;
  std::string to_json() const;
  std::string to_text() const;
};

/// profile(base_of(S)) == S for the 30 proper nontrivial subvarieties.
BaseReport verify_bases();
BaseReport verify_bases_serial();

/// Least subvariety containing `a`, from its decomposition into simple
/// factors. Throws NotInVariety.
SubvarietyId classify(const FiniteAlgebra& a);

struct ImplicationReport {
  std::size_t checked = 0;
  std::size_t premise_holds = 0;
  /// Names of algebras satisfying the premise but not the conclusion.
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Every product of builtins with at most `limit` elements, and every
/// enumerated model of size <= 4, that satisfies (0 -> 1) -> 1 = 1 also
/// satisfies (0 -> 1)* = 0.
ImplicationReport check_unit_implies_zero_star(std::size_t limit = kDefaultProductLimit);

}  // namespace runo
