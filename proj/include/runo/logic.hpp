#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "runo/algebra.hpp"
#include "runo/formula.hpp"
#include "runo/subvariety.hpp"
#include "runo/term.hpp"

namespace runo {

/// An algebra with {1} as the designated set.
struct Matrix {
  const FiniteAlgebra* algebra;
  Element designated() const { return algebra->one(); }
};

Matrix matrix(const FiniteAlgebra& a);

/// Value of `f` under `v`. Throws UnboundVariable.
Element evaluate(const FiniteAlgebra& a, const Formula& f, const Valuation& v);

struct Validity {
  bool valid = true;
  /// First valuation (variables sorted, elements by index) not sent to 1.
  std::optional<Valuation> counter_valuation;
};

Validity is_valid(const Formula& f, const Matrix& m);
Validity is_valid_serial(const Formula& f, const Matrix& m);

/// Valid in all five builtin matrices.
bool is_theorem(const Formula& f);

struct Consequence {
  bool holds = true;
  /// Builtin index and valuation sending every premise to 1 but not the goal.
  std::optional<std::pair<int, Valuation>> counterexample;
};

/// Local matrix consequence over A1..A5: every valuation sending all of
/// `gamma` to 1 sends `phi` to 1. This is the semantic relation of the five
/// matrices; for gamma empty it is theoremhood.
Consequence consequence(std::span<const Formula> gamma, const Formula& phi);

/// (phi ≈ 1) under the signature translation.
Equation tau(const Formula& f);
/// (s ->h t, t ->h s).
std::pair<Formula, Formula> rho(const Equation& e);

// ---- axiom schemas -------------------------------------------------------------

/// Schema `id` (1..18) with metavariables alpha, beta, gamma.
const Formula& axiom_schema(int id);
inline constexpr int kSchemaCount = 18;

/// First schema (in numeric order) the formula instantiates, comparing
/// desugared forms.
std::optional<std::pair<int, std::map<std::string, Formula>>> axiom_instance(const Formula& f);

/// Is `f` an instance of schema `id`? With a nonempty `subst`, the instance
/// schema[subst] must equal f; otherwise any substitution is accepted.
bool is_instance_of(const Formula& f, int id, const std::map<std::string, Formula>& subst = {});

/// Schema `id` with alpha, beta, gamma replaced by p, q, r.
Formula schema_instance(int id);

// ---- axiomatic extensions ------------------------------------------------------

struct ExtensionInfo {
  SubvarietyId id;
  std::vector<Formula> base;
  std::vector<std::string> base_text;
  std::string source;
  std::string note;
  /// The base as printed in the source, when it differs from `base`.
  std::optional<std::vector<std::string>> printed;
};

/// 32 extensions, one per subvariety; ordered like lattice(). The extension for
/// the empty set has base {p} (inconsistent), the one for all five has none.
const std::vector<ExtensionInfo>& extensions();
const ExtensionInfo& extension(SubvarietyId s);

/// Valid in the matrix of Ai for every i in s.
bool decide_in_extension(const Formula& f, SubvarietyId s);

/// Builtins in whose matrices every formula is valid.
SubvarietyId validity_profile(std::span<const Formula> fs);

struct ExtensionCheck {
  const ExtensionInfo* info = nullptr;
  SubvarietyId computed;
  std::vector<SubvarietyId> per_formula;
  std::optional<SubvarietyId> printed_computed;
  bool exact() const { return computed == info->id; }
  bool printed_exact() const { return !printed_computed || *printed_computed == info->id; }
};

struct ExtensionReport {
  std::vector<ExtensionCheck> checks;
  std::size_t errata() const;          // used bases that are not exact
  std::size_t printed_errata() const;  // printed bases that are not exact
  std::string to_json() const;
  std::string to_text() const;
};

/// The 30 proper nontrivial extensions.
ExtensionReport verify_extensions();

// ---- soundness and algebraizability --------------------------------------------

struct SoundnessReport {
  /// schema_valid[s-1][i-1]: schema s valid in Ai.
  std::array<std::array<bool, 5>, kSchemaCount> schema_valid{};
  std::array<bool, 5> smp{};
  std::array<bool, 5> scp{};
  bool ok() const;
  std::string to_text() const;
};

/// Schemas with fresh variables in every matrix, and pointwise preservation
/// of truth by SMP (a = 1, a ->h b = 1 give b = 1) and SCP (a ->h b = 1 gives
/// ~b ->h ~a = 1).
SoundnessReport soundness_report();

struct AlgebraizabilityReport {
  struct FormulaRow {
    Formula formula;
    bool theorem;
    bool tau_identity;
  };
  struct EquationRow {
    Equation equation;
    std::array<bool, 5> same_satisfaction;
  };
  std::vector<FormulaRow> formulas;
  std::vector<EquationRow> equations;
  bool ok() const;
};

/// is_theorem(phi) against profile(tau(phi)) == all five; and, for each
/// equation s = t, the satisfaction set of {s ->h t = 1, t ->h s = 1} against
/// that of s = t in every builtin.
AlgebraizabilityReport cross_check_algebraizability(std::span<const Formula> formulas,
                                                    std::span<const Equation> equations);

/// The 18 schema instances plus non-theorems, and a few equations.
std::vector<Formula> sample_formulas();
std::vector<Equation> sample_equations();

}  // namespace runo
