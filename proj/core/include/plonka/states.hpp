#ifndef PLONKA_STATES_HPP
#define PLONKA_STATES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plonka/booleanisation.hpp"
#include "plonka/system.hpp"

namespace plonka {

/** A state on a Płonka sum, stored canonically as its measure on the top
 * component (lossless by the state/measure correspondence).  Component
 * restrictions and element values are derived views; the componentwise
 * checker re-derives the defining conditions independently. */
struct State {
  Measure top;

  bool operator==(const State&) const = default;
};

/// Wraps a measure on the top component as a state.  The system must carry
/// states at all (TrivialComponent otherwise) and the measure must live on
/// the top component.
State make_state(const DirectSystem& system, Measure top_measure);
State uniform_state(const DirectSystem& system);

/// s(x) for x in component i is m_⊤(p_{i⊤}(x)).
Rat state_value(const DirectSystem& system, const State& state, PlonkaElement element);

/// Full value table indexed by the raw ids of the materialized sum.
std::vector<Rat> state_table(const DirectSystem& system, const PlonkaSum& sum,
                             const State& state);

/// The restriction s_i, as a measure on component i.
Measure restrict_state(const DirectSystem& system, const State& state, int component);

enum class StateCondition {
  Arity,
  ValueRange,
  UnitValue,          // s(1) = 1
  LocalAdditivity,    // s(a∨b) = s(a)+s(b) whenever a∧b is a local zero
  ZeroValue,          // consequence: s(0) = 0
  LocalUnit,          // consequence: s(1_i) = 1
  LocalZero,          // consequence: s(0_i) = 0
  Involution,         // consequence: s(a') = 1 - s(a)
  MeasureInvalid,     // componentwise route: some restriction is no measure
  PreservationFailed  // componentwise route: m_j(p_ij(atom)) != m_i(atom)
};

struct StateViolation {
  StateCondition condition;
  std::uint32_t a = 0, b = 0;  // raw-element witnesses (direct route)
  int i = -1, j = -1;          // component witnesses (componentwise route)
  int atom = -1;
  std::string detail;

  std::string describe() const;
};

struct StateReport {
  bool valid = false;
  bool faithful = false;
  std::vector<StateViolation> violations;

  std::string describe() const;
};

/// Validates a raw value table against the defining conditions (unit value +
/// additivity over pairs whose meet is a local zero), exhaustively, and
/// records the basic-property consequences alongside.
StateReport check_state_direct(const RawAlgebra& algebra, const Decomposition& decomposition,
                               std::span<const Rat> values);

/// Validates one weight vector per component: every restriction a measure and
/// every transition hom measure-preserving (checked on atoms, which suffices
/// by additivity).  Independent of the top-measure shortcut.
StateReport check_state_componentwise(const DirectSystem& system,
                                      std::span<const std::vector<Rat>> component_weights);

/// Φ: the measure on the Booleanisation corresponding to a state; concretely
/// the top-component measure.
Measure quotient_measure(const DirectSystem& system, const State& state);

/// Φ for a state given as a raw value table: reads the weights off the atoms
/// of the quotient through the class representatives.
Measure quotient_measure_from_table(const PlonkaSum& sum, const Booleanisation& booleanisation,
                                    std::span<const Rat> values);

/// Φ⁻¹: s_i(a) := m(p_{i⊤}(a)).  Exact inverse of quotient_measure.
State state_from_quotient_measure(const DirectSystem& system, Measure m);

struct CarriesState {
  bool carries = false;
  int trivial_component = -1;        // witness when not
  std::optional<State> witness;      // the uniform-atom state when carried

  bool operator==(const CarriesState&) const = default;
};

/// A state exists iff no component is trivial; the positive branch returns a
/// constructive witness.
CarriesState carries_state(const DirectSystem& system);

bool is_faithful(const DirectSystem& system, const State& state);

/** Faithfulness diagnosis: the direct test together with the two structural
 * halves it is equivalent to (every restriction regular, every transition hom
 * injective).  A mismatch between the sides cannot occur for canonically
 * stored states and throws InternalInconsistency. */
struct FaithfulDiagnosis {
  bool faithful = false;
  bool restrictions_regular = false;
  bool homs_injective = false;
};

FaithfulDiagnosis faithful_diagnosis(const DirectSystem& system, const State& state);

/// Finite integral representation: s(b) equals the μ-mass of the atoms below
/// π(b), with μ = Φ(state); checked exactly for every element of the sum.
bool integral_representation_check(const DirectSystem& system, const PlonkaSum& sum,
                                   const Booleanisation& booleanisation, const State& state);

struct AltStateCheck {
  bool satisfies = true;
  std::string reason;          // "unit" or "additivity"
  std::uint32_t a = 0, b = 0;  // violating pair

  std::string describe() const;
};

/// The alternative notion: additivity demanded only when a∧b equals the
/// global constant 0 (not a local zero).
AltStateCheck check_alt_state(const RawAlgebra& algebra, const Decomposition& decomposition,
                              std::span<const Rat> values);

/** Instance certificate for the alternative-state characterisation, both
 * ways.  Direction (⇐) is constructive: every measure on the bottom
 * component extended by a constant α ∈ (0,1) satisfies the alternative
 * condition.  Direction (⇒) quantifies over all real tables, which is not
 * finitely checkable; it is tested over a documented candidate family (the
 * vertex states, random convex combinations, and random constant-off-bottom
 * tables); a limitation, not an exhaustive proof. */
struct AltEquivalenceCertificate {
  int extensions_tested = 0;
  int extension_failures = 0;
  int candidates_tested = 0;
  int candidates_satisfying = 0;
  int restriction_failures = 0;

  bool ok() const { return extension_failures == 0 && restriction_failures == 0; }
};

AltEquivalenceCertificate alt_state_equivalence(const DirectSystem& system, const PlonkaSum& sum,
                                                std::uint64_t seed);

/// The extreme points of the state space: one Dirac state per atom of the
/// Booleanisation.
std::vector<State> state_space_vertices(const DirectSystem& system);

}  // namespace plonka

#endif
