#ifndef PLONKA_TOPOLOGY_HPP
#define PLONKA_TOPOLOGY_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plonka/metric.hpp"

namespace plonka {

/** A section of π: one representative raw id per quotient element, i.e. per
 * fiber.  σ([b]) = rep[b]. */
struct Section {
  std::vector<std::uint32_t> rep;  // quotient element -> raw id
};

using SectionChooser =
    std::function<std::uint32_t(Elem quotient_element, std::span<const std::uint32_t> fiber)>;

/// Canonical section: the least raw id of each fiber.
Section make_section(const Booleanisation& booleanisation);
/// Section through an explicit chooser; a pick outside its fiber throws
/// BadChooser.
Section make_section(const Booleanisation& booleanisation, const SectionChooser& chooser);

struct SectionCertificate {
  bool retraction = false;       // π ∘ σ = id
  bool continuous = false;       // σ-preimage of every open is open
  bool dense = false;            // closure of the image is the whole space
  bool preserves_state = false;  // s ∘ σ = Φ(s)

  bool all() const { return retraction && continuous && dense && preserves_state; }
};

/// Verifies the four section properties against the pseudometric topologies
/// on the sum and on the Booleanisation.  Continuity and saturation facts are
/// checked on single zero-classes; unions distribute, so this covers every
/// open exactly.
SectionCertificate verify_section(const Section& section, const Booleanisation& booleanisation,
                                  const PseudometricSpace& space,
                                  const PseudometricSpace& quotient_space,
                                  std::span<const Rat> values, const Measure& quotient_measure);

struct TopologyCaps {
  int interior_bruteforce_bits = 20;  // brute force all 2^|B| subsets up to here
  int reg_full_table_classes = 10;    // all pairs of opens up to 2^c opens
};

struct InteriorPreservation {
  bool preserving = false;
  bool brute_forced = false;               // all subsets, vs the witness family
  std::vector<std::uint32_t> witness;      // failing subset (empty when preserving)
  bool matches_singleton_criterion = false;  // preserving == all fibers singleton
};

struct RegComparison {
  bool isomorphic = false;
  bool full_table_checked = false;
  std::size_t opens_checked = 0;
};

struct TopologyReport {
  bool hypotheses_met = false;  // injective system + faithful state
  bool opens_saturated = false;
  bool projection_open = false;
  bool projection_closed = false;
  InteriorPreservation interior;
  RegComparison reg;
  bool capped = false;
  std::string cap_note;
};

/** The quotient-topology facts, decided computationally on the partition
 * topologies: saturation of opens and closedness/openness of π, interior
 * preservation with an explicit witness subset when it fails (criterion: all
 * fibers singleton), and the isomorphism between the regular open algebras
 * of the sum and of the Booleanisation.  With the hypotheses unmet
 * everything is still computed and reported, nothing is assumed. */
TopologyReport topology_report(const PseudometricSpace& space,
                               const PseudometricSpace& quotient_space,
                               const Booleanisation& booleanisation, bool hypotheses_met,
                               const TopologyCaps& caps = {});

/// Whether a specific subset witnesses the failure of interior preservation:
/// π(Int(X)) != Int(π(X)).
bool interior_violated_by(const PseudometricSpace& space,
                          const PseudometricSpace& quotient_space,
                          const Booleanisation& booleanisation,
                          std::span<const std::uint32_t> subset);

/// Continuous maps into [0,1] on a finite partition space are exactly the
/// class-constant tables.
bool is_class_constant(const PseudometricSpace& space, std::span<const Rat> values);

struct UniquenessCertificate {
  bool exists_unique = false;  // exactly one continuous t with t∘σ = Φ(s)
  bool equals_state = false;   // and it is s itself
};

/// For a faithful state on an injective system: the unique class-constant
/// table agreeing with Φ(s) on the canonical section is s.  Throws
/// HypothesesUnmet otherwise.
UniquenessCertificate state_uniqueness_check(const DirectSystem& system, const PlonkaSum& sum,
                                             const Booleanisation& booleanisation,
                                             const State& state);

}  // namespace plonka

#endif
