#ifndef PLONKA_SYSTEM_HPP
#define PLONKA_SYSTEM_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plonka/finbool.hpp"
#include "plonka/semilattice.hpp"

namespace plonka {

/// Default cap on the carrier of a materialized sum; the exhaustive axiom
/// sweeps are O(N^3).  Overridable per call (and via PLONKA_CAP in the CLI).
inline constexpr std::size_t kDefaultCarrierCap = 64;

/// Element of a Płonka sum: an element of one component, tagged by the
/// index of the component that owns it.
struct PlonkaElement {
  int index = 0;
  Elem inner = 0;

  bool operator==(const PlonkaElement&) const = default;
  auto operator<=>(const PlonkaElement&) const = default;
};

/** A semilattice direct system of finite Boolean algebras: one component per
 * index of a join-semilattice, and one transition homomorphism p_ij per
 * comparable pair, with p_ii = id and p_ik = p_jk ∘ p_ij on every chain.
 * Only validate_system creates instances, so coherence can be assumed. */
class DirectSystem {
 public:
  const JoinSemilattice& index() const { return index_; }
  int component_count() const { return index_.size(); }
  const BooleanAlgebra& component(int i) const;
  /// p_ij for i ≤ j; throws HomMismatch on an incomparable pair.
  const BooleanHom& hom(int i, int j) const;

  bool has_trivial_component() const;
  std::size_t carrier_size() const;

  bool operator==(const DirectSystem&) const = default;

 private:
  friend struct SystemCheck;
  DirectSystem(JoinSemilattice index, std::vector<BooleanAlgebra> components,
               std::vector<std::optional<BooleanHom>> homs)
      : index_(std::move(index)), components_(std::move(components)), homs_(std::move(homs)) {}

  JoinSemilattice index_;
  std::vector<BooleanAlgebra> components_;
  std::vector<std::optional<BooleanHom>> homs_;  // flattened i*size+j, engaged iff i ≤ j
};

struct HomSpec {
  int source = 0;
  int target = 0;
  BooleanHom hom;
};

enum class SystemFault {
  None,
  WrongComponentCount,
  UnknownIndexPair,      // hom supplied for an incomparable or out-of-range pair
  DuplicateHom,
  HomSignatureMismatch,  // endpoints disagree with the named components
  MissingHom,
  NotIdentityOnDiagonal,
  BrokenCoherence,
};

struct SystemCheck {
  std::optional<DirectSystem> system;
  SystemFault fault = SystemFault::None;
  int i = -1, j = -1, k = -1;  // failing pair/chain
  int atom = -1;               // witnessing atom of A_k whose duals disagree

  bool ok() const { return system.has_value(); }
  std::string describe() const;

  static SystemCheck valid(JoinSemilattice index, std::vector<BooleanAlgebra> components,
                           std::vector<std::optional<BooleanHom>> homs);
};

/// Validates identity on the diagonal (p_ii may be omitted) and coherence
/// p_ik = p_jk ∘ p_ij on all chains, comparing dual maps.
SystemCheck validate_system(const JoinSemilattice& index, std::vector<BooleanAlgebra> components,
                            std::vector<HomSpec> homs);

/// Constants of the sum live in the component at the least index.
PlonkaElement plonka_zero(const DirectSystem& system);
PlonkaElement plonka_one(const DirectSystem& system);

/// Pushes all arguments into the component at the join of their indices and
/// evaluates there.  Throws MalformedElement on an ill-formed argument.
PlonkaElement plonka_eval(const DirectSystem& system, BoolOp op,
                          std::span<const PlonkaElement> args);

/** An algebra of type ⟨∨,∧,′,0,1⟩ given by explicit operation tables over
 * carrier {0,...,size-1}.  No law is assumed; check_ibsl and friends decide
 * them. */
struct RawAlgebra {
  std::size_t size = 0;
  std::vector<std::uint32_t> join_table;  // size*size, row-major
  std::vector<std::uint32_t> meet_table;
  std::vector<std::uint32_t> comp_table;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;

  std::uint32_t join(std::uint32_t a, std::uint32_t b) const {
    return join_table[a * size + b];
  }
  std::uint32_t meet(std::uint32_t a, std::uint32_t b) const {
    return meet_table[a * size + b];
  }
  std::uint32_t comp(std::uint32_t a) const { return comp_table[a]; }

  /// Tables total over the carrier and all entries in range.
  bool well_formed() const;

  bool operator==(const RawAlgebra&) const = default;
};

/** A materialized Płonka sum: raw tables over the disjoint union, plus the
 * labelling between raw ids and tagged elements.  Raw ids are assigned
 * component-major: component i occupies [offsets[i], offsets[i] + |A_i|). */
struct PlonkaSum {
  RawAlgebra raw;
  std::vector<PlonkaElement> labels;   // raw id -> element
  std::vector<std::size_t> offsets;    // component -> first raw id

  std::uint32_t id_of(PlonkaElement e) const {
    return static_cast<std::uint32_t>(offsets[static_cast<std::size_t>(e.index)] + e.inner);
  }
};

PlonkaSum plonka_sum(const DirectSystem& system, std::size_t carrier_cap = kDefaultCarrierCap);

struct IbslCheck {
  bool pass = true;
  std::string axiom;                  // "I1".."I8"
  std::uint32_t x = 0, y = 0, z = 0;  // witness binding (slots beyond the arity unused)

  std::string describe() const;
};

/// Exhaustively verifies axioms I1-I8; the first violation (in axiom order,
/// then lexicographic binding) wins.
IbslCheck check_ibsl(const RawAlgebra& algebra);

/// x·y := x ∧ (x ∨ y), the partition-function term of the decomposition.
std::uint32_t partition_apply(const RawAlgebra& algebra, std::uint32_t a, std::uint32_t b);

struct PartitionCheck {
  bool pass = true;
  std::string law;  // "PF1".."PF6", with the instantiated operation for PF4/PF5
  std::uint32_t x = 0, y = 0, z = 0;

  std::string describe() const;
};

/// PF1-PF6 for x·y, with PF4/PF5 instantiated at the basic operations
/// ∨, ∧, ′ and PF6 at the constants 0, 1.
PartitionCheck check_partition_function(const RawAlgebra& algebra);

/// Boolean algebras satisfy absorption x∧(x∨y) = x; proper sums do not.
/// Returns the least counterexample, or nothing.
std::optional<std::pair<std::uint32_t, std::uint32_t>> absorption_counterexample(
    const RawAlgebra& algebra);

/** Result of decomposing a raw IBSL along its partition function: the
 * reconstructed direct system and the bijective relabelling.  Components are
 * canonicalized by (size, least raw id).  Transporting the input tables along
 * `labeling` yields exactly the Płonka-sum tables of `system` (verified on
 * construction). */
struct Decomposition {
  DirectSystem system;
  std::vector<PlonkaElement> labeling;                 // raw id -> element of system
  std::vector<std::vector<std::uint32_t>> component_raw;  // component -> raw ids, sorted

  std::uint32_t raw_id(PlonkaElement e) const;
  int component_of(std::uint32_t raw) const;
  std::uint32_t local_zero(int component) const;
  std::uint32_t local_one(int component) const;
  bool is_local_zero(std::uint32_t raw) const;
};

/// Partition-function decomposition.  Requires check_ibsl to pass (NotIBSL
/// otherwise); internal cross-checks that cannot fail on genuine IBSLs throw
/// InternalInconsistency.
Decomposition decompose(const RawAlgebra& algebra);

struct InjectivityResult {
  bool injective = false;
  bool quasi_identity_route = false;  // x·y≈x & y·x≈y & x·z≈y·z ⇒ x≈y, all triples
  bool hom_route = false;             // every transition hom of the decomposition injective
  std::uint32_t x = 0, y = 0, z = 0;  // witness when the quasi-identity fails
};

/// Evaluates both routes and checks that they agree.
InjectivityResult is_injective_ibsl(const RawAlgebra& algebra);

/// Hom-level route on an already-validated system.
bool is_injective_system(const DirectSystem& system);

/// The quasi-identity x ≈ x' ⇒ y ≈ z.  On carriers of size > 1 this is
/// equivalent to "no component of the decomposition is trivial"; the
/// one-element algebra satisfies it vacuously.
bool is_ngib(const RawAlgebra& algebra);

/// Isomorphism of direct systems: a join-table-preserving index bijection
/// together with per-component atom bijections commuting with all homs,
/// found by exhaustive matching.
bool systems_isomorphic(const DirectSystem& a, const DirectSystem& b);

}  // namespace plonka

#endif
