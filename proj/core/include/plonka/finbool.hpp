#ifndef PLONKA_FINBOOL_HPP
#define PLONKA_FINBOOL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plonka/errors.hpp"
#include "plonka/rational.hpp"

namespace plonka {

/// Element of a finite Boolean algebra: the set of atoms below it, packed as
/// a bit mask.
using Elem = std::uint32_t;

/// Atom-count cap keeping 2^n carriers enumerable (and Elem wide enough).
inline constexpr int kMaxAtoms = 16;

/** A finite Boolean algebra presented by its atom count.
 *
 * The carrier is the power set of {0,...,atom_count-1}: 0 is the empty set,
 * 1 the full set, and meet/join/complement are intersection/union/set
 * complement, so all Boolean laws hold by construction.  atom_count = 0 gives
 * the one-element (trivial) algebra, where 0 = 1.
 */
class BooleanAlgebra {
 public:
  explicit BooleanAlgebra(int atom_count);

  int atom_count() const { return atoms_; }
  std::size_t size() const { return std::size_t{1} << atoms_; }
  bool is_trivial() const { return atoms_ == 0; }

  Elem zero() const { return 0; }
  Elem one() const { return mask_; }
  bool contains(Elem a) const { return (a & ~mask_) == 0; }

  Elem meet(Elem a, Elem b) const { return checked(a) & checked(b); }
  Elem join(Elem a, Elem b) const { return checked(a) | checked(b); }
  Elem complement(Elem a) const { return ~checked(a) & mask_; }
  /// (a ∧ b') ∨ (a' ∧ b)
  Elem symdiff(Elem a, Elem b) const;

  bool leq(Elem a, Elem b) const { return meet(a, b) == a; }
  bool is_atom(Elem a) const { return contains(a) && a != 0 && (a & (a - 1)) == 0; }
  Elem atom(int i) const;
  std::vector<Elem> atoms() const;

  bool operator==(const BooleanAlgebra&) const = default;

 private:
  Elem checked(Elem a) const;

  int atoms_;
  Elem mask_;
};

enum class BoolOp { Meet, Join, Complement, Symdiff };

/// Evaluates op on args in A.  Meet/Join fold over two or more arguments,
/// Complement/Symdiff are strictly unary/binary.
Elem bool_eval(const BooleanAlgebra& algebra, BoolOp op, std::span<const Elem> args);

/** A homomorphism between finite Boolean algebras, stored as its dual map on
 * atoms.
 *
 * apply(a) = { t ∈ atoms(target) : dual(t) ∈ a }.  Any total dual map yields
 * a 0,1,∨,∧,'-preserving map, so homomorphism-ness is structural; the hom is
 * injective exactly when the dual map is surjective.
 */
class BooleanHom {
 public:
  BooleanHom(BooleanAlgebra source, BooleanAlgebra target, std::vector<int> dual_map);

  static BooleanHom identity(const BooleanAlgebra& algebra);

  /// Accepts an element-level map (image of every source element, in carrier
  /// order), recovers the dual map and cross-validates the two presentations.
  /// Throws NotAHomomorphism if the map breaks a homomorphism law.
  static BooleanHom from_element_map(const BooleanAlgebra& source, const BooleanAlgebra& target,
                                     std::span<const Elem> images);

  const BooleanAlgebra& source() const { return source_; }
  const BooleanAlgebra& target() const { return target_; }
  int dual(int target_atom) const;
  const std::vector<int>& dual_map() const { return dual_; }

  Elem apply(Elem a) const;
  bool is_injective() const;

  bool operator==(const BooleanHom&) const = default;

 private:
  BooleanAlgebra source_;
  BooleanAlgebra target_;
  std::vector<int> dual_;
};

/// g ∘ h.  Requires h.target() == g.source(); on duals the order reverses:
/// dual(g∘h) = dual(h) ∘ dual(g).
BooleanHom compose(const BooleanHom& g, const BooleanHom& h);

enum class MeasureFault { None, NoMeasureOnTrivial, WrongArity, NegativeWeight, BadTotal };

struct MeasureCheck {
  MeasureFault fault = MeasureFault::None;
  int atom = -1;  // offending atom for NegativeWeight

  bool ok() const { return fault == MeasureFault::None; }
  std::string describe() const;
};

/// Valid iff one weight per atom, all ≥ 0, summing to exactly 1.  The trivial
/// algebra carries no measure.
MeasureCheck measure_check(const BooleanAlgebra& algebra, std::span<const Rat> weights);

/** A finitely additive probability measure on a finite Boolean algebra: one
 * exact rational weight per atom.  value(e) is the sum of the weights of the
 * atoms in e; the measure is regular when every weight is positive. */
class Measure {
 public:
  Measure(BooleanAlgebra algebra, std::vector<Rat> weights);

  static Measure uniform(const BooleanAlgebra& algebra);
  static Measure dirac(const BooleanAlgebra& algebra, int atom);

  const BooleanAlgebra& algebra() const { return algebra_; }
  const Rat& weight(int atom) const { return weights_[static_cast<std::size_t>(atom)]; }
  const std::vector<Rat>& weights() const { return weights_; }

  Rat value(Elem a) const;
  bool is_regular() const;

  bool operator==(const Measure&) const = default;

 private:
  BooleanAlgebra algebra_;
  std::vector<Rat> weights_;
};

/// value ∘ symdiff: the pseudometric a measure induces on its algebra.
Rat measure_distance(const Measure& m, Elem a, Elem b);

}  // namespace plonka

#endif
