#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "runo/algebra.hpp"
#include "runo/term.hpp"

namespace runo {

/// The question has no meaning for this input (e.g. simplicity of |A| = 1).
class NotApplicable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A term has the wrong set of variables for the requested check.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction would exceed the configured carrier bound.
class SizeLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The algebra is not a member of the variety generated by A1..A5.
class NotInVariety : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ---- subalgebras, automorphisms, isomorphisms -------------------------------

/// Sorted element list.
using Subuniverse = std::vector<Element>;

/// Least subuniverse containing `seeds`, zero and one.
Subuniverse generated(const FiniteAlgebra& a, std::span<const Element> seeds);

/// Every subuniverse, sorted by size then lexicographically.
std::vector<Subuniverse> subalgebras(const FiniteAlgebra& a);

/// perm[x] is the image of x.
using Permutation = std::vector<Element>;

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const Element> f);

/// First isomorphism a -> b in lexicographic search order, if any.
std::optional<Permutation> iso(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// All automorphisms; the identity comes first.
std::vector<Permutation> automorphisms(const FiniteAlgebra& a);

/// Index i in 1..5 with a ≅ Ai, or 0.
int builtin_index(const FiniteAlgebra& a);

// ---- congruences --------------------------------------------------------------

/// Block number per element, numbered by first occurrence (so equal
/// partitions compare equal).
using Partition = std::vector<Element>;

Partition identity_partition(std::size_t n);
Partition all_partition(std::size_t n);
Partition canonical(std::span<const Element> blocks);
std::size_t block_count(const Partition& p);
bool refines(const Partition& finer, const Partition& coarser);
Partition partition_meet(const Partition& p, const Partition& q);
Partition partition_join(const Partition& p, const Partition& q);
std::vector<std::vector<Element>> blocks(const Partition& p);

/// Compatible with join, meet, imp and neg.
bool is_congruence(const FiniteAlgebra& a, const Partition& p);

/// Cg(x, y).
Partition principal_congruence(const FiniteAlgebra& a, Element x, Element y);

struct CongruenceLattice {
  /// Sorted by number of blocks, descending: Δ first, ∇ last.
  std::vector<Partition> partitions;

  std::size_t size() const { return partitions.size(); }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return partitions.size() - 1; }
  bool leq(std::size_t i, std::size_t j) const { return refines(partitions[i], partitions[j]); }
  std::size_t index_of(const Partition& p) const;
  std::size_t meet(std::size_t i, std::size_t j) const;
  std::size_t join(std::size_t i, std::size_t j) const;
  std::vector<std::size_t> atoms() const;
  std::vector<std::size_t> coatoms() const;
};

/// Joins of principal congruences. Cost grows like |A|^4.
CongruenceLattice congruences(const FiniteAlgebra& a);

// ---- simplicity ---------------------------------------------------------------

struct ScResult {
  bool ok = true;
  std::optional<Element> witness;  // first x != 1 with x /\ x'* != 0
};

ScResult sc_check(const FiniteAlgebra& a);

/// Exactly two congruences. Throws NotApplicable when |A| = 1.
bool is_simple(const FiniteAlgebra& a);
/// The congruence lattice has a single atom. Throws NotApplicable when |A| = 1.
bool is_si(const FiniteAlgebra& a);

// ---- discriminator and primality --------------------------------------------

struct DiscriminatorReport {
  Term term;
  std::string algebra;
  bool ok = true;
  std::optional<std::array<Element, 3>> failing_triple;  // (x, y, z)
};

/// [z /\ d((x \/ y) -> (x /\ y))] \/ [x /\ d((x \/ y) -> (x /\ y))*] with
/// d(w) = w /\ w'*.
Term discriminator_term();

/// Checks t(a,b,c) = c when a = b and a otherwise, over all triples.
/// Throws ArityError unless the variables of t are exactly x, y, z.
DiscriminatorReport discriminator_check(const FiniteAlgebra& a, const Term& t);

/// Number of binary term operations of `a`, by closing the projections and
/// constants under the basic operations. Only for |A| <= 3.
std::size_t binary_clone_size(const FiniteAlgebra& a);
std::size_t binary_clone_size_serial(const FiniteAlgebra& a);

inline constexpr std::size_t kPrimalityCountLimit = 32;

struct PrimalityEvidence {
  DiscriminatorReport discriminator;
  /// Counted only for |A| <= kPrimalityCountLimit.
  std::optional<std::size_t> subalgebras;
  std::size_t automorphisms = 0;
  std::optional<Permutation> nontrivial_automorphism;
  std::optional<Subuniverse> proper_subalgebra;
  /// Present when the clone oracle ran: all |A|^(|A|^2) binary ops generated.
  std::optional<bool> clone_full;
};

struct PrimalityResult {
  bool primal = false;
  PrimalityEvidence evidence;
};

/// Quasiprimality criterion: discriminator term works, no proper subalgebra,
/// no nontrivial automorphism. With `run_oracle` and |A| <= 3 the clone
/// closure is run as well and a disagreement throws std::logic_error.
/// The trivial algebra is not primal.
PrimalityResult is_primal(const FiniteAlgebra& a, bool run_oracle = false);

// ---- products, quotients, decomposition ------------------------------------

inline constexpr std::size_t kDefaultProductLimit = 4096;

/// Componentwise tables; element (a1,...,ak) has index with a1 most
/// significant. Labels are tuples "(l1,...,lk)". Throws SizeLimit.
FiniteAlgebra direct_product(std::span<const FiniteAlgebra> factors,
                             std::size_t limit = kDefaultProductLimit);
FiniteAlgebra power(const FiniteAlgebra& a, std::size_t k,
                    std::size_t limit = kDefaultProductLimit);

/// A/p; block labels list their members, e.g. "{0,2}". The partition must be a
/// congruence (std::invalid_argument otherwise).
FiniteAlgebra quotient(const FiniteAlgebra& a, const Partition& p);

enum class DecomposeMethod {
  /// Lattice for small carriers, Central otherwise.
  Auto,
  /// Greedy meet of coatoms of the full congruence lattice.
  Lattice,
  /// Kernels of x |-> x /\ e for the atoms e of the image of d(x) = x /\ x'*.
  Central,
};

struct Decomposition {
  std::vector<Partition> kernels;
  std::vector<FiniteAlgebra> factors;
  /// builtin[i] = j means factors[i] ≅ Aj.
  std::vector<int> builtin;
};

/// Splits a member of the variety into simple factors, each isomorphic to a
/// builtin. Verifies that x |-> (x/θ1, ..., x/θk) is a bijection. The trivial
/// algebra has no factors. Throws NotInVariety.
Decomposition decompose(const FiniteAlgebra& a, DecomposeMethod m = DecomposeMethod::Auto);

// ---- enumeration --------------------------------------------------------------

/// All algebras of size <= max_size (1..4) satisfying every axiom, one per
/// isomorphism class, sorted by size. Includes the trivial algebra.
std::vector<FiniteAlgebra> enumerate_runo1(int max_size);
std::vector<FiniteAlgebra> enumerate_runo1_serial(int max_size);

}  // namespace runo
