#include "plonka/booleanisation.hpp"

#include <algorithm>
#include <numeric>

namespace plonka {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Int Booleanisation::section_count() const {
  Int total = 1;
  for (const auto& fiber : classes) total *= Int(fiber.size());
  return total;
}

Booleanisation booleanise(const DirectSystem& system, const PlonkaSum& sum) {
  Booleanisation result;
  result.top_index = system.index().top();
  result.quotient = system.component(result.top_index);
  result.pi.resize(sum.raw.size);
  result.classes.resize(result.quotient.size());
  for (std::uint32_t raw = 0; raw < sum.raw.size; ++raw) {
    const PlonkaElement e = sum.labels[raw];
    const Elem image = system.hom(e.index, result.top_index).apply(e.inner);
    result.pi[raw] = image;
    result.classes[image].push_back(raw);
  }

  // abstract route: union-find over {(a, p_ij(a)) : i ≤ j}
  UnionFind uf(sum.raw.size);
  for (int i = 0; i < system.component_count(); ++i)
    for (int j = 0; j < system.component_count(); ++j) {
      if (i == j || !system.index().leq(i, j)) continue;
      const BooleanHom& hom = system.hom(i, j);
      for (Elem a = 0; a < system.component(i).size(); ++a)
        uf.unite(sum.id_of({i, a}), sum.id_of({j, hom.apply(a)}));
    }
  for (std::uint32_t a = 0; a < sum.raw.size; ++a)
    for (std::uint32_t b = 0; b < sum.raw.size; ++b)
      if ((uf.find(a) == uf.find(b)) != (result.pi[a] == result.pi[b]))
        throw InternalInconsistency("union-find quotient disagrees with the top-component map");

  // π must be a surjective homomorphism
  for (const auto& fiber : result.classes)
    if (fiber.empty()) throw InternalInconsistency("π is not surjective");
  const RawAlgebra& raw = sum.raw;
  for (std::uint32_t a = 0; a < raw.size; ++a) {
    if (result.pi[raw.comp(a)] != result.quotient.complement(result.pi[a]))
      throw InternalInconsistency("π does not preserve complement");
    for (std::uint32_t b = 0; b < raw.size; ++b)
      if (result.pi[raw.join(a, b)] != result.quotient.join(result.pi[a], result.pi[b]) ||
          result.pi[raw.meet(a, b)] != result.quotient.meet(result.pi[a], result.pi[b]))
        throw InternalInconsistency("π does not preserve a binary operation");
  }
  if (result.pi[raw.zero] != result.quotient.zero() ||
      result.pi[raw.one] != result.quotient.one())
    throw InternalInconsistency("π does not preserve the constants");
  return result;
}

bool is_trivial_booleanisation(const DirectSystem& system) {
  const int top = system.index().top();
  const bool top_trivial = system.component(top).is_trivial();
  if (top_trivial != system.has_trivial_component()) {
    // a trivial component forces a trivial top through p_{k⊤}
    throw InternalInconsistency("trivial component without trivial top");
  }
  return top_trivial;
}

std::string IbslHomCheck::describe() const {
  if (ok) return "IBSL homomorphism";
  return "not a homomorphism: breaks " + law + " at (" + std::to_string(x) + ", " +
         std::to_string(y) + ")";
}

IbslHomCheck check_ibsl_hom(const RawAlgebra& source, const RawAlgebra& target,
                            std::span<const std::uint32_t> map) {
  IbslHomCheck bad;
  bad.ok = false;
  if (map.size() != source.size) {
    bad.law = "range";
    return bad;
  }
  for (std::uint32_t x = 0; x < source.size; ++x)
    if (map[x] >= target.size) {
      bad.law = "range", bad.x = x;
      return bad;
    }
  if (map[source.zero] != target.zero) {
    bad.law = "0", bad.x = source.zero;
    return bad;
  }
  if (map[source.one] != target.one) {
    bad.law = "1", bad.x = source.one;
    return bad;
  }
  for (std::uint32_t x = 0; x < source.size; ++x) {
    if (map[source.comp(x)] != target.comp(map[x])) {
      bad.law = "′", bad.x = x;
      return bad;
    }
    for (std::uint32_t y = 0; y < source.size; ++y) {
      if (map[source.join(x, y)] != target.join(map[x], map[y])) {
        bad.law = "∨", bad.x = x, bad.y = y;
        return bad;
      }
      if (map[source.meet(x, y)] != target.meet(map[x], map[y])) {
        bad.law = "∧", bad.x = x, bad.y = y;
        return bad;
      }
    }
  }
  return {};
}

InducedHom induce_hom(const PlonkaSum& source_sum, const Booleanisation& source_bool,
                      const PlonkaSum& target_sum, const Booleanisation& target_bool,
                      std::span<const std::uint32_t> element_map,
                      std::span<const Rat> source_values, std::span<const Rat> target_values) {
  if (IbslHomCheck check = check_ibsl_hom(source_sum.raw, target_sum.raw, element_map); !check.ok)
    throw NotAHomomorphism(check.describe());

  // well-definedness on classes: π₁(a) = π₁(b) must force π₂(h(a)) = π₂(h(b))
  for (const auto& fiber : source_bool.classes) {
    const Elem image = target_bool.pi[element_map[fiber.front()]];
    for (std::uint32_t member : fiber)
      if (target_bool.pi[element_map[member]] != image)
        throw InternalInconsistency("induced map not well-defined on classes");
  }

  std::vector<Elem> images(source_bool.quotient.size());
  for (Elem q = 0; q < source_bool.quotient.size(); ++q)
    images[q] = target_bool.pi[element_map[source_bool.classes[q].front()]];
  InducedHom result{BooleanHom::from_element_map(source_bool.quotient, target_bool.quotient,
                                                 images),
                    false, {}, {}};

  result.square_commutes = true;
  for (std::uint32_t a = 0; a < source_sum.raw.size; ++a)
    if (target_bool.pi[element_map[a]] != result.bar.apply(source_bool.pi[a])) {
      result.square_commutes = false;
      break;
    }
  if (!result.square_commutes)
    throw InternalInconsistency("square π₂∘h = h̄∘π₁ does not commute");

  if (!source_values.empty() && !target_values.empty()) {
    bool input_preserved = true;
    for (std::uint32_t a = 0; a < source_sum.raw.size; ++a)
      if (source_values[a] != target_values[element_map[a]]) {
        input_preserved = false;
        break;
      }
    result.input_states_preserved = input_preserved;
    bool induced_preserved = true;
    for (Elem q = 0; q < source_bool.quotient.size(); ++q) {
      const Rat lhs = source_values[source_bool.classes[q].front()];
      const Rat rhs = target_values[target_bool.classes[result.bar.apply(q)].front()];
      if (lhs != rhs) {
        induced_preserved = false;
        break;
      }
    }
    result.induced_measures_preserved = induced_preserved;
  }
  return result;
}

}  // namespace plonka
