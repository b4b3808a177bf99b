#include "plonka/finbool.hpp"

#include <algorithm>

namespace plonka {

BooleanAlgebra::BooleanAlgebra(int atom_count) : atoms_(atom_count) {
  if (atom_count < 0) throw ElementOutOfRange("atom count must be nonnegative");
  if (atom_count > kMaxAtoms)
    throw CapacityExceeded("atom count " + std::to_string(atom_count) + " exceeds cap " +
                           std::to_string(kMaxAtoms));
  mask_ = static_cast<Elem>((std::uint64_t{1} << atoms_) - 1);
}

Elem BooleanAlgebra::checked(Elem a) const {
  if (!contains(a))
    throw ElementOutOfRange("element " + std::to_string(a) + " not in a " +
                            std::to_string(atoms_) + "-atom algebra");
  return a;
}

Elem BooleanAlgebra::symdiff(Elem a, Elem b) const {
  return join(meet(a, complement(b)), meet(complement(a), b));
}

Elem BooleanAlgebra::atom(int i) const {
  if (i < 0 || i >= atoms_) throw ElementOutOfRange("no atom " + std::to_string(i));
  return Elem{1} << i;
}

std::vector<Elem> BooleanAlgebra::atoms() const {
  std::vector<Elem> result;
  result.reserve(static_cast<std::size_t>(atoms_));
  for (int i = 0; i < atoms_; ++i) result.push_back(atom(i));
  return result;
}

Elem bool_eval(const BooleanAlgebra& algebra, BoolOp op, std::span<const Elem> args) {
  switch (op) {
    case BoolOp::Meet:
    case BoolOp::Join: {
      if (args.size() < 2) throw MalformedElement("meet/join need at least two arguments");
      Elem acc = args[0];
      for (std::size_t i = 1; i < args.size(); ++i)
        acc = op == BoolOp::Meet ? algebra.meet(acc, args[i]) : algebra.join(acc, args[i]);
      return acc;
    }
    case BoolOp::Complement:
      if (args.size() != 1) throw MalformedElement("complement is unary");
      return algebra.complement(args[0]);
    case BoolOp::Symdiff:
      if (args.size() != 2) throw MalformedElement("symmetric difference is binary");
      return algebra.symdiff(args[0], args[1]);
  }
  throw MalformedElement("unknown operation");
}

BooleanHom::BooleanHom(BooleanAlgebra source, BooleanAlgebra target, std::vector<int> dual_map)
    : source_(source), target_(target), dual_(std::move(dual_map)) {
  if (dual_.size() != static_cast<std::size_t>(target_.atom_count()))
    throw HomMismatch("dual map must cover every atom of the target");
  for (int s : dual_)
    if (s < 0 || s >= source_.atom_count())
      throw HomMismatch("dual map hits atom " + std::to_string(s) + " outside the source");
}

BooleanHom BooleanHom::identity(const BooleanAlgebra& algebra) {
  std::vector<int> dual(static_cast<std::size_t>(algebra.atom_count()));
  for (int i = 0; i < algebra.atom_count(); ++i) dual[static_cast<std::size_t>(i)] = i;
  return BooleanHom(algebra, algebra, std::move(dual));
}

int BooleanHom::dual(int target_atom) const {
  if (target_atom < 0 || target_atom >= target_.atom_count())
    throw ElementOutOfRange("no target atom " + std::to_string(target_atom));
  return dual_[static_cast<std::size_t>(target_atom)];
}

Elem BooleanHom::apply(Elem a) const {
  if (!source_.contains(a)) throw ElementOutOfRange("argument outside the source algebra");
  Elem image = 0;
  for (int t = 0; t < target_.atom_count(); ++t)
    if (a >> dual_[static_cast<std::size_t>(t)] & 1) image |= Elem{1} << t;
  return image;
}

bool BooleanHom::is_injective() const {
  std::vector<bool> hit(static_cast<std::size_t>(source_.atom_count()), false);
  for (int s : dual_) hit[static_cast<std::size_t>(s)] = true;
  return std::ranges::all_of(hit, [](bool b) { return b; });
}

BooleanHom BooleanHom::from_element_map(const BooleanAlgebra& source,
                                        const BooleanAlgebra& target,
                                        std::span<const Elem> images) {
  if (images.size() != source.size())
    throw NotAHomomorphism("element map must cover the whole source carrier");
  for (Elem y : images)
    if (!target.contains(y)) throw NotAHomomorphism("element map leaves the target carrier");
  if (images[source.zero()] != target.zero()) throw NotAHomomorphism("map does not fix 0");
  if (images[source.one()] != target.one()) throw NotAHomomorphism("map does not fix 1");

  // dual(t) = the unique source atom whose image contains t; uniqueness and
  // existence follow from the hom laws, so their failure is a witness.
  std::vector<int> dual(static_cast<std::size_t>(target.atom_count()), -1);
  for (int s = 0; s < source.atom_count(); ++s) {
    Elem image = images[source.atom(s)];
    for (int t = 0; t < target.atom_count(); ++t) {
      if (!(image >> t & 1)) continue;
      if (dual[static_cast<std::size_t>(t)] != -1)
        throw NotAHomomorphism("images of distinct atoms overlap; map cannot preserve meets");
      dual[static_cast<std::size_t>(t)] = s;
    }
  }
  for (int t = 0; t < target.atom_count(); ++t)
    if (dual[static_cast<std::size_t>(t)] == -1)
      throw NotAHomomorphism("atom images do not cover the target unit; map cannot preserve joins");

  BooleanHom hom(source, target, std::move(dual));
  for (Elem a = 0; a < source.size(); ++a)
    if (hom.apply(a) != images[a])
      throw NotAHomomorphism("element map disagrees with the hom generated by its atom images at " +
                             std::to_string(a));
  return hom;
}

BooleanHom compose(const BooleanHom& g, const BooleanHom& h) {
  if (h.target() != g.source())
    throw HomMismatch("cannot compose: target of the inner hom differs from source of the outer");
  std::vector<int> dual(static_cast<std::size_t>(g.target().atom_count()));
  for (int t = 0; t < g.target().atom_count(); ++t)
    dual[static_cast<std::size_t>(t)] = h.dual(g.dual(t));
  return BooleanHom(h.source(), g.target(), std::move(dual));
}

std::string MeasureCheck::describe() const {
  switch (fault) {
    case MeasureFault::None:
      return "valid measure";
    case MeasureFault::NoMeasureOnTrivial:
      return "invalid: the trivial algebra carries no probability measure";
    case MeasureFault::WrongArity:
      return "invalid: one weight per atom required";
    case MeasureFault::NegativeWeight:
      return "invalid: negative weight at atom " + std::to_string(atom);
    case MeasureFault::BadTotal:
      return "invalid: weights do not sum to 1";
  }
  return "?";
}

MeasureCheck measure_check(const BooleanAlgebra& algebra, std::span<const Rat> weights) {
  if (algebra.is_trivial()) return {MeasureFault::NoMeasureOnTrivial};
  if (weights.size() != static_cast<std::size_t>(algebra.atom_count()))
    return {MeasureFault::WrongArity};
  Rat total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) return {MeasureFault::NegativeWeight, static_cast<int>(i)};
    total += weights[i];
  }
  if (total != 1) return {MeasureFault::BadTotal};
  return {};
}

Measure::Measure(BooleanAlgebra algebra, std::vector<Rat> weights)
    : algebra_(algebra), weights_(std::move(weights)) {
  MeasureCheck check = measure_check(algebra_, weights_);
  if (!check.ok()) throw InvalidMeasure(check.describe());
}

Measure Measure::uniform(const BooleanAlgebra& algebra) {
  if (algebra.is_trivial()) throw TrivialComponent("no measure on the trivial algebra");
  std::vector<Rat> weights(static_cast<std::size_t>(algebra.atom_count()),
                           Rat(1, algebra.atom_count()));
  return Measure(algebra, std::move(weights));
}

Measure Measure::dirac(const BooleanAlgebra& algebra, int atom) {
  if (atom < 0 || atom >= algebra.atom_count())
    throw ElementOutOfRange("no atom " + std::to_string(atom));
  std::vector<Rat> weights(static_cast<std::size_t>(algebra.atom_count()), Rat(0));
  weights[static_cast<std::size_t>(atom)] = 1;
  return Measure(algebra, std::move(weights));
}

Rat Measure::value(Elem a) const {
  if (!algebra_.contains(a)) throw ElementOutOfRange("element outside the measured algebra");
  Rat total = 0;
  for (int i = 0; i < algebra_.atom_count(); ++i)
    if (a >> i & 1) total += weights_[static_cast<std::size_t>(i)];
  return total;
}

bool Measure::is_regular() const {
  return std::ranges::all_of(weights_, [](const Rat& w) { return w > 0; });
}

Rat measure_distance(const Measure& m, Elem a, Elem b) {
  return m.value(m.algebra().symdiff(a, b));
}

}  // namespace plonka
