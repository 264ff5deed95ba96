#pragma once

#include <optional>
#include <span>
#include <vector>

#include "runo/algebra.hpp"
#include "runo/subvariety.hpp"
#include "runo/term.hpp"

namespace runo {

struct Verdict {
  bool holds = true;
  /// First failing valuation: variables sorted by name, elements by index.
  std::optional<Valuation> counterexample;
};

struct QuasiIdentity {
  std::vector<Equation> premises;
  Equation conclusion;
};

/// A |= eq, by sweeping all |A|^#vars valuations.
Verdict holds(const FiniteAlgebra& a, const Equation& eq);
Verdict holds_serial(const FiniteAlgebra& a, const Equation& eq);

/// Every valuation satisfying all premises satisfies the conclusion.
Verdict holds_quasi(const FiniteAlgebra& a, const QuasiIdentity& q);
Verdict holds_quasi_serial(const FiniteAlgebra& a, const QuasiIdentity& q);

/// Builtins A1..A5 in which every given equation holds.
SubvarietyId profile(std::span<const Equation> eqs);
SubvarietyId profile(const Equation& eq);

/// Per-valuation truth of `eq` over all valuations of `vars` (sorted order).
std::vector<std::uint8_t> satisfaction_set(const FiniteAlgebra& a, const Equation& eq,
                                           const std::vector<std::string>& vars);

}  // namespace runo
