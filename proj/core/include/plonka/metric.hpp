#ifndef PLONKA_METRIC_HPP
#define PLONKA_METRIC_HPP

#include <vector>

#include "plonka/booleanisation.hpp"
#include "plonka/states.hpp"
#include "plonka/system.hpp"

namespace plonka {

/** A finite pseudometric space over the raw ids of a materialized sum (or
 * any finite carrier), with the distance-zero partition precomputed.  The
 * induced topology is the partition topology: opens are exactly the unions
 * of zero classes.  Construction re-verifies all four pseudometric axioms
 * exhaustively; a violation throws InternalInconsistency.
 *
 * Finite pseudometric spaces are complete (a Cauchy sequence eventually
 * stays inside one zero class), so no completion machinery exists here;
 * the completion of any space built by this module is the space itself. */
struct PseudometricSpace {
  std::size_t size = 0;
  std::vector<Rat> distances;                       // size*size
  std::vector<std::vector<std::uint32_t>> zero_classes;  // sorted partition
  std::vector<int> class_of;                         // element -> zero class

  const Rat& d(std::size_t a, std::size_t b) const { return distances[a * size + b]; }
};

/// d_s = s ∘ △, with △ evaluated in the Płonka sum.
PseudometricSpace pseudometric(const DirectSystem& system, const PlonkaSum& sum,
                               const State& state);

/// The same construction from an explicit value table on the sum.
PseudometricSpace pseudometric_from_table(const PlonkaSum& sum, std::span<const Rat> values);

/// d_∞ = Φ(s) ∘ △ on the Booleanisation's carrier.
PseudometricSpace quotient_pseudometric(const Booleanisation& booleanisation, const Measure& m);

/// A pseudometric is a metric iff every zero class is a singleton.
bool is_metric(const PseudometricSpace& space);

/** is_metric together with the structural criterion it matches for faithful
 * states: the space is metric iff the sum is (isomorphic to) its
 * Booleanisation, i.e. every fiber of π is a singleton. */
struct MetricCertificate {
  bool metric = false;
  bool quotient_fibers_singleton = false;
  bool state_faithful = false;
  bool criterion_matches = false;  // metric == fibers-singleton; guaranteed when faithful
};

MetricCertificate is_metric_certificate(const PseudometricSpace& space,
                                        const DirectSystem& system,
                                        const Booleanisation& booleanisation, const State& state);

/** Kolmogorov quotient of the pseudometric topology: indistinguishability
 * classes are exactly the zero classes.  When the system is injective and the
 * state faithful, the classes must coincide with the ∼-classes of the
 * Booleanisation (verified class-by-class); otherwise the comparison is
 * reported informationally. */
struct KolmogorovResult {
  std::vector<std::vector<std::uint32_t>> classes;
  bool hypotheses_met = false;
  bool matches_booleanisation = false;
};

KolmogorovResult kolmogorov_quotient(const PseudometricSpace& space, const DirectSystem& system,
                                     const Booleanisation& booleanisation, const State& state);

}  // namespace plonka

#endif
