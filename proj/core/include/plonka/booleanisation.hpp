#ifndef PLONKA_BOOLEANISATION_HPP
#define PLONKA_BOOLEANISATION_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plonka/system.hpp"

namespace plonka {

/** The direct limit of a finite system, realized concretely as its top
 * component: π(a) = p_{i⊤}(a).
 *
 * Construction cross-checks this shortcut against the abstract quotient
 * (union-find over the pairs {(a, p_ij(a))}); a divergence would be a bug and
 * throws InternalInconsistency.  Classes are named by their representative in
 * the top component.
 */
struct Booleanisation {
  int top_index = 0;
  BooleanAlgebra quotient{0};
  std::vector<Elem> pi;                             // raw id of the sum -> quotient element
  std::vector<std::vector<std::uint32_t>> classes;  // quotient element -> raw ids, sorted

  /// Number of distinct sections of π: the product of the fiber sizes.
  Int section_count() const;
};

Booleanisation booleanise(const DirectSystem& system, const PlonkaSum& sum);

/// [0]~ = [1]~; verified equivalent to "some component is trivial".
bool is_trivial_booleanisation(const DirectSystem& system);

struct IbslHomCheck {
  bool ok = true;
  std::string law;  // "0", "1", "∨", "∧", "′", or "range"
  std::uint32_t x = 0, y = 0;

  std::string describe() const;
};

/// Validates an element-level map between two raw IBSLs against all basic
/// operations and constants.
IbslHomCheck check_ibsl_hom(const RawAlgebra& source, const RawAlgebra& target,
                            std::span<const std::uint32_t> map);

/** The Booleanisation morphism induced by an IBSL homomorphism h:
 * h̄[a] = [h(a)], with well-definedness and the commuting square
 * π₂ ∘ h = h̄ ∘ π₁ verified on every element.  When state value tables are
 * supplied, also records whether h preserves the pair and whether h̄
 * preserves the corresponding quotient measures. */
struct InducedHom {
  BooleanHom bar;
  bool square_commutes = false;
  std::optional<bool> input_states_preserved;    // engaged when tables supplied
  std::optional<bool> induced_measures_preserved;
};

InducedHom induce_hom(const PlonkaSum& source_sum, const Booleanisation& source_bool,
                      const PlonkaSum& target_sum, const Booleanisation& target_bool,
                      std::span<const std::uint32_t> element_map,
                      std::span<const Rat> source_values = {},
                      std::span<const Rat> target_values = {});

}  // namespace plonka

#endif
