#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace runo {

/// Dense carrier index. Labels such as "2" or "(1,0)" are display metadata.
using Element = std::uint16_t;

/// Largest carrier the library will build (products refuse beyond it).
inline constexpr std::size_t kMaxCarrier = 1u << 15;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ragged, missing or out-of-range table entries.
class ShapeError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// A lattice law fails; `witness` holds the offending tuple.
class NotALattice : public AlgebraError {
 public:
  NotALattice(std::string law, std::vector<Element> witness);
  const std::string& law() const noexcept { return law_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  std::string law_;
  std::vector<Element> witness_;
};

/// zero/one are not the least/greatest element of the induced order.
class BoundsError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Operation tables as read from a file or written by hand, before checking.
struct RawTables {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> join;
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> imp;
  std::vector<int> neg;
  int zero = 0;
  int one = 0;
};

/// A finite algebra of type <join, meet, imp, neg, 0, 1> with total tables.
///
/// Instances only come out of validate() (or constructions built on it), so the
/// lattice laws and the bounds always hold. Immutable and safe to share.
class FiniteAlgebra {
 public:
  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return n_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }

  /// Index of the element carrying `label`, if any.
  std::optional<Element> find(std::string_view label) const;
  /// Like find() but throws std::out_of_range.
  Element element(std::string_view label) const;

  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return one_; }

  Element join(Element x, Element y) const noexcept { return join_[x * n_ + y]; }
  Element meet(Element x, Element y) const noexcept { return meet_[x * n_ + y]; }
  Element imp(Element x, Element y) const noexcept { return imp_[x * n_ + y]; }
  Element neg(Element x) const noexcept { return neg_[x]; }

  /// Pseudocomplement x -> 0.
  Element star(Element x) const noexcept { return imp(x, zero_); }
  /// x'*'
  Element plus(Element x) const noexcept { return neg(star(neg(x))); }
  /// Heyting implication x -> (x /\ y).
  Element imp_h(Element x, Element y) const noexcept { return imp(x, meet(x, y)); }

  bool leq(Element x, Element y) const noexcept { return order_[x * n_ + y] != 0; }

  std::span<const Element> join_table() const noexcept { return join_; }
  std::span<const Element> meet_table() const noexcept { return meet_; }
  std::span<const Element> imp_table() const noexcept { return imp_; }
  std::span<const Element> neg_table() const noexcept { return neg_; }

  /// Same tables, different display name.
  FiniteAlgebra renamed(std::string name) const;
  RawTables raw() const;

  /// Tables and distinguished constants equal (names and labels ignored).
  bool same_tables(const FiniteAlgebra& other) const noexcept;

 private:
  friend FiniteAlgebra validate(const RawTables& raw);
  friend FiniteAlgebra from_flat_tables(std::string, std::vector<std::string>, std::vector<Element>,
                                        std::vector<Element>, std::vector<Element>,
                                        std::vector<Element>, Element, Element);
  friend FiniteAlgebra detail_assemble(std::string, std::vector<std::string>, std::vector<Element>,
                                       std::vector<Element>, std::vector<Element>,
                                       std::vector<Element>, Element, Element, bool);
  FiniteAlgebra() = default;

  std::string name_;
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Element> join_, meet_, imp_, neg_;
  std::vector<std::uint8_t> order_;
  Element zero_ = 0, one_ = 0;
};

/// Check structural completeness, lattice laws and bounds.
/// Throws ShapeError, NotALattice or BoundsError.
FiniteAlgebra validate(const RawTables& raw);

/// Same checks as validate() on already-flat row-major tables.
FiniteAlgebra from_flat_tables(std::string name, std::vector<std::string> labels,
                               std::vector<Element> join, std::vector<Element> meet,
                               std::vector<Element> imp, std::vector<Element> neg, Element zero,
                               Element one);

/// For constructions that preserve the lattice laws (products, quotients):
/// shape and bounds are still checked, the O(n^3) associativity sweep is not.
FiniteAlgebra from_trusted_tables(std::string name, std::vector<std::string> labels,
                                  std::vector<Element> join, std::vector<Element> meet,
                                  std::vector<Element> imp, std::vector<Element> neg, Element zero,
                                  Element one);

/// The one-element algebra.
FiniteAlgebra trivial_algebra();

/// Names of the checked axioms, in report order.
enum class Axiom { SH1, SH2, SH3, SH4, E2, E3, E4, DM, Unorthodox, Regular, Level1 };
inline constexpr Axiom kAllAxioms[] = {Axiom::SH1, Axiom::SH2,        Axiom::SH3,     Axiom::SH4,
                                       Axiom::E2,  Axiom::E3,         Axiom::E4,      Axiom::DM,
                                       Axiom::Unorthodox, Axiom::Regular, Axiom::Level1};

std::string_view axiom_name(Axiom a) noexcept;
std::optional<Axiom> axiom_from_name(std::string_view name) noexcept;

struct AxiomResult {
  bool holds = true;
  /// Lexicographically first failing tuple (variables x, y, z in that order).
  std::optional<std::vector<Element>> counterexample;
};

struct AxiomReport {
  std::map<Axiom, AxiomResult> results;

  bool all_hold() const noexcept;
  bool holds(Axiom a) const { return results.at(a).holds; }
};

/// Exhaustive check of every axiom over all tuples of the carrier.
AxiomReport axiom_profile(const FiniteAlgebra& a);

/// Length of the longest chain in the lattice order.
std::size_t height(const FiniteAlgebra& a);

}  // namespace runo
