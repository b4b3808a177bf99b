#include "plonka/system.hpp"

#include <algorithm>
#include <numeric>

namespace plonka {

const BooleanAlgebra& DirectSystem::component(int i) const {
  if (i < 0 || i >= index_.size()) throw IndexOutOfRange("no component " + std::to_string(i));
  return components_[static_cast<std::size_t>(i)];
}

const BooleanHom& DirectSystem::hom(int i, int j) const {
  if (i < 0 || i >= index_.size() || j < 0 || j >= index_.size())
    throw IndexOutOfRange("hom endpoint out of range");
  if (!index_.leq(i, j))
    throw HomMismatch("no transition hom: " + std::to_string(i) + " is not below " +
                      std::to_string(j));
  return *homs_[static_cast<std::size_t>(i) * static_cast<std::size_t>(index_.size()) +
                static_cast<std::size_t>(j)];
}

bool DirectSystem::has_trivial_component() const {
  return std::ranges::any_of(components_, [](const BooleanAlgebra& a) { return a.is_trivial(); });
}

std::size_t DirectSystem::carrier_size() const {
  std::size_t total = 0;
  for (const BooleanAlgebra& a : components_) total += a.size();
  return total;
}

std::string SystemCheck::describe() const {
  switch (fault) {
    case SystemFault::None:
      return "valid direct system";
    case SystemFault::WrongComponentCount:
      return "one component per index required";
    case SystemFault::UnknownIndexPair:
      return "hom given for the non-comparable pair (" + std::to_string(i) + ", " +
             std::to_string(j) + ")";
    case SystemFault::DuplicateHom:
      return "duplicate hom for (" + std::to_string(i) + ", " + std::to_string(j) + ")";
    case SystemFault::HomSignatureMismatch:
      return "hom endpoints disagree with the components at (" + std::to_string(i) + ", " +
             std::to_string(j) + ")";
    case SystemFault::MissingHom:
      return "missing hom for the comparable pair (" + std::to_string(i) + ", " +
             std::to_string(j) + ")";
    case SystemFault::NotIdentityOnDiagonal:
      return "p_" + std::to_string(i) + std::to_string(i) + " is not the identity";
    case SystemFault::BrokenCoherence:
      return "coherence broken on the chain (" + std::to_string(i) + " ≤ " + std::to_string(j) +
             " ≤ " + std::to_string(k) + ") at atom " + std::to_string(atom);
  }
  return "?";
}

SystemCheck SystemCheck::valid(JoinSemilattice index, std::vector<BooleanAlgebra> components,
                               std::vector<std::optional<BooleanHom>> homs) {
  SystemCheck check;
  check.system = DirectSystem(std::move(index), std::move(components), std::move(homs));
  return check;
}

SystemCheck validate_system(const JoinSemilattice& index, std::vector<BooleanAlgebra> components,
                            std::vector<HomSpec> homs) {
  const int n = index.size();
  SystemCheck bad;
  if (components.size() != static_cast<std::size_t>(n)) {
    bad.fault = SystemFault::WrongComponentCount;
    return bad;
  }
  auto slot = [n](int i, int j) {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
  };
  std::vector<std::optional<BooleanHom>> table(static_cast<std::size_t>(n) *
                                               static_cast<std::size_t>(n));
  for (HomSpec& spec : homs) {
    if (spec.source < 0 || spec.source >= n || spec.target < 0 || spec.target >= n ||
        !index.leq(spec.source, spec.target)) {
      bad.fault = SystemFault::UnknownIndexPair;
      bad.i = spec.source, bad.j = spec.target;
      return bad;
    }
    if (table[slot(spec.source, spec.target)]) {
      bad.fault = SystemFault::DuplicateHom;
      bad.i = spec.source, bad.j = spec.target;
      return bad;
    }
    if (spec.hom.source() != components[static_cast<std::size_t>(spec.source)] ||
        spec.hom.target() != components[static_cast<std::size_t>(spec.target)]) {
      bad.fault = SystemFault::HomSignatureMismatch;
      bad.i = spec.source, bad.j = spec.target;
      return bad;
    }
    table[slot(spec.source, spec.target)] = std::move(spec.hom);
  }
  for (int i = 0; i < n; ++i) {
    auto& diagonal = table[slot(i, i)];
    const BooleanHom id = BooleanHom::identity(components[static_cast<std::size_t>(i)]);
    if (!diagonal) {
      diagonal = id;
    } else if (*diagonal != id) {
      bad.fault = SystemFault::NotIdentityOnDiagonal;
      bad.i = i;
      return bad;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && index.leq(i, j) && !table[slot(i, j)]) {
        bad.fault = SystemFault::MissingHom;
        bad.i = i, bad.j = j;
        return bad;
      }
  // coherence on all chains, checked on dual maps: dual(p_ik) = dual(p_ij) ∘ dual(p_jk)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!(index.leq(i, j) && index.leq(j, k))) continue;
        const BooleanHom& pij = *table[slot(i, j)];
        const BooleanHom& pjk = *table[slot(j, k)];
        const BooleanHom& pik = *table[slot(i, k)];
        for (int t = 0; t < components[static_cast<std::size_t>(k)].atom_count(); ++t)
          if (pik.dual(t) != pij.dual(pjk.dual(t))) {
            bad.fault = SystemFault::BrokenCoherence;
            bad.i = i, bad.j = j, bad.k = k, bad.atom = t;
            return bad;
          }
      }
  return SystemCheck::valid(index, std::move(components), std::move(table));
}

PlonkaElement plonka_zero(const DirectSystem& system) {
  return {system.index().least(), system.component(system.index().least()).zero()};
}

PlonkaElement plonka_one(const DirectSystem& system) {
  return {system.index().least(), system.component(system.index().least()).one()};
}

namespace {

void check_element(const DirectSystem& system, PlonkaElement e) {
  if (e.index < 0 || e.index >= system.component_count() ||
      !system.component(e.index).contains(e.inner))
    throw MalformedElement("element (" + std::to_string(e.index) + ", " +
                           std::to_string(e.inner) + ") does not belong to the sum");
}

}  // namespace

PlonkaElement plonka_eval(const DirectSystem& system, BoolOp op,
                          std::span<const PlonkaElement> args) {
  if (args.empty()) throw MalformedElement("no arguments");
  for (PlonkaElement e : args) check_element(system, e);
  int j = args[0].index;
  for (std::size_t i = 1; i < args.size(); ++i) j = system.index().join(j, args[i].index);
  std::vector<Elem> pushed;
  pushed.reserve(args.size());
  for (PlonkaElement e : args) pushed.push_back(system.hom(e.index, j).apply(e.inner));
  return {j, bool_eval(system.component(j), op, pushed)};
}

bool RawAlgebra::well_formed() const {
  if (join_table.size() != size * size || meet_table.size() != size * size ||
      comp_table.size() != size)
    return false;
  auto in_range = [this](std::uint32_t v) { return v < size; };
  return std::ranges::all_of(join_table, in_range) && std::ranges::all_of(meet_table, in_range) &&
         std::ranges::all_of(comp_table, in_range) && in_range(zero) && in_range(one);
}

PlonkaSum plonka_sum(const DirectSystem& system, std::size_t carrier_cap) {
  const std::size_t total = system.carrier_size();
  if (total > carrier_cap)
    throw CapacityExceeded("sum carrier " + std::to_string(total) + " exceeds cap " +
                           std::to_string(carrier_cap));
  PlonkaSum sum;
  sum.offsets.resize(static_cast<std::size_t>(system.component_count()));
  std::size_t offset = 0;
  for (int i = 0; i < system.component_count(); ++i) {
    sum.offsets[static_cast<std::size_t>(i)] = offset;
    for (Elem a = 0; a < system.component(i).size(); ++a) sum.labels.push_back({i, a});
    offset += system.component(i).size();
  }
  RawAlgebra& raw = sum.raw;
  raw.size = total;
  raw.join_table.resize(total * total);
  raw.meet_table.resize(total * total);
  raw.comp_table.resize(total);
  for (std::size_t a = 0; a < total; ++a) {
    const PlonkaElement ea = sum.labels[a];
    raw.comp_table[a] =
        sum.id_of({ea.index, system.component(ea.index).complement(ea.inner)});
    for (std::size_t b = 0; b < total; ++b) {
      const PlonkaElement args[2] = {ea, sum.labels[b]};
      raw.join_table[a * total + b] = sum.id_of(plonka_eval(system, BoolOp::Join, args));
      raw.meet_table[a * total + b] = sum.id_of(plonka_eval(system, BoolOp::Meet, args));
    }
  }
  raw.zero = sum.id_of(plonka_zero(system));
  raw.one = sum.id_of(plonka_one(system));
  return sum;
}

std::string IbslCheck::describe() const {
  if (pass) return "passes I1–I8";
  return "fails " + axiom + " at (" + std::to_string(x) + ", " + std::to_string(y) + ", " +
         std::to_string(z) + ")";
}

IbslCheck check_ibsl(const RawAlgebra& r) {
  IbslCheck fail;
  fail.pass = false;
  const std::uint32_t n = static_cast<std::uint32_t>(r.size);
  for (std::uint32_t x = 0; x < n; ++x)  // I1: x∨x = x
    if (r.join(x, x) != x) {
      fail.axiom = "I1", fail.x = x;
      return fail;
    }
  for (std::uint32_t x = 0; x < n; ++x)  // I2: x∨y = y∨x
    for (std::uint32_t y = 0; y < n; ++y)
      if (r.join(x, y) != r.join(y, x)) {
        fail.axiom = "I2", fail.x = x, fail.y = y;
        return fail;
      }
  for (std::uint32_t x = 0; x < n; ++x)  // I3: x∨(y∨z) = (x∨y)∨z
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z)
        if (r.join(x, r.join(y, z)) != r.join(r.join(x, y), z)) {
          fail.axiom = "I3", fail.x = x, fail.y = y, fail.z = z;
          return fail;
        }
  for (std::uint32_t x = 0; x < n; ++x)  // I4: x'' = x
    if (r.comp(r.comp(x)) != x) {
      fail.axiom = "I4", fail.x = x;
      return fail;
    }
  for (std::uint32_t x = 0; x < n; ++x)  // I5: x∧y = (x'∨y')'
    for (std::uint32_t y = 0; y < n; ++y)
      if (r.meet(x, y) != r.comp(r.join(r.comp(x), r.comp(y)))) {
        fail.axiom = "I5", fail.x = x, fail.y = y;
        return fail;
      }
  for (std::uint32_t x = 0; x < n; ++x)  // I6: x∧(x'∨y) = x∧y
    for (std::uint32_t y = 0; y < n; ++y)
      if (r.meet(x, r.join(r.comp(x), y)) != r.meet(x, y)) {
        fail.axiom = "I6", fail.x = x, fail.y = y;
        return fail;
      }
  for (std::uint32_t x = 0; x < n; ++x)  // I7: 0∨x = x
    if (r.join(r.zero, x) != x) {
      fail.axiom = "I7", fail.x = x;
      return fail;
    }
  if (r.one != r.comp(r.zero)) {  // I8: 1 = 0'
    fail.axiom = "I8";
    return fail;
  }
  return {};
}

std::uint32_t partition_apply(const RawAlgebra& r, std::uint32_t a, std::uint32_t b) {
  return r.meet(a, r.join(a, b));
}

std::string PartitionCheck::describe() const {
  if (pass) return "partition function laws PF1–PF6 hold";
  return "fails " + law + " at (" + std::to_string(x) + ", " + std::to_string(y) + ", " +
         std::to_string(z) + ")";
}

PartitionCheck check_partition_function(const RawAlgebra& r) {
  PartitionCheck fail;
  fail.pass = false;
  const std::uint32_t n = static_cast<std::uint32_t>(r.size);
  auto dot = [&r](std::uint32_t a, std::uint32_t b) { return partition_apply(r, a, b); };
  for (std::uint32_t a = 0; a < n; ++a)  // PF1: a·a = a
    if (dot(a, a) != a) {
      fail.law = "PF1", fail.x = a;
      return fail;
    }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c) {
        if (dot(a, dot(b, c)) != dot(dot(a, b), c)) {  // PF2
          fail.law = "PF2", fail.x = a, fail.y = b, fail.z = c;
          return fail;
        }
        if (dot(a, dot(b, c)) != dot(a, dot(c, b))) {  // PF3
          fail.law = "PF3", fail.x = a, fail.y = b, fail.z = c;
          return fail;
        }
      }
  // PF4 for g ∈ {∨, ∧, ′}: g(a...)·b = g(a·b, ...)
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t c = 0; c < n; ++c)
      for (std::uint32_t b = 0; b < n; ++b) {
        if (dot(r.join(a, c), b) != r.join(dot(a, b), dot(c, b))) {
          fail.law = "PF4(∨)", fail.x = a, fail.y = c, fail.z = b;
          return fail;
        }
        if (dot(r.meet(a, c), b) != r.meet(dot(a, b), dot(c, b))) {
          fail.law = "PF4(∧)", fail.x = a, fail.y = c, fail.z = b;
          return fail;
        }
      }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (dot(r.comp(a), b) != r.comp(dot(a, b))) {
        fail.law = "PF4(′)", fail.x = a, fail.y = b;
        return fail;
      }
  // PF5 for g ∈ {∨, ∧, ′}: b·g(a...) = b·a_1·...·a_n
  for (std::uint32_t b = 0; b < n; ++b)
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t c = 0; c < n; ++c) {
        const std::uint32_t chained = dot(dot(b, a), c);
        if (dot(b, r.join(a, c)) != chained) {
          fail.law = "PF5(∨)", fail.x = b, fail.y = a, fail.z = c;
          return fail;
        }
        if (dot(b, r.meet(a, c)) != chained) {
          fail.law = "PF5(∧)", fail.x = b, fail.y = a, fail.z = c;
          return fail;
        }
      }
  for (std::uint32_t b = 0; b < n; ++b)
    for (std::uint32_t a = 0; a < n; ++a)
      if (dot(b, r.comp(a)) != dot(b, a)) {
        fail.law = "PF5(′)", fail.x = b, fail.y = a;
        return fail;
      }
  for (std::uint32_t a = 0; a < n; ++a) {  // PF6: a·0 = a, a·1 = a
    if (dot(a, r.zero) != a) {
      fail.law = "PF6(0)", fail.x = a;
      return fail;
    }
    if (dot(a, r.one) != a) {
      fail.law = "PF6(1)", fail.x = a;
      return fail;
    }
  }
  return {};
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> absorption_counterexample(
    const RawAlgebra& r) {
  for (std::uint32_t x = 0; x < r.size; ++x)
    for (std::uint32_t y = 0; y < r.size; ++y)
      if (r.meet(x, r.join(x, y)) != x) return std::pair{x, y};
  return std::nullopt;
}

std::uint32_t Decomposition::raw_id(PlonkaElement e) const {
  for (std::uint32_t raw = 0; raw < labeling.size(); ++raw)
    if (labeling[raw] == e) return raw;
  throw MalformedElement("element not in the decomposition");
}

int Decomposition::component_of(std::uint32_t raw) const {
  if (raw >= labeling.size()) throw ElementOutOfRange("raw element out of range");
  return labeling[raw].index;
}

std::uint32_t Decomposition::local_zero(int component) const {
  return raw_id({component, system.component(component).zero()});
}

std::uint32_t Decomposition::local_one(int component) const {
  return raw_id({component, system.component(component).one()});
}

bool Decomposition::is_local_zero(std::uint32_t raw) const {
  return labeling[raw].inner == system.component(labeling[raw].index).zero();
}

namespace {

/// One component class of a raw IBSL with its derived Boolean structure.
struct ComponentClass {
  std::vector<std::uint32_t> members;  // sorted raw ids
  std::uint32_t zero = 0, one = 0;
  std::vector<std::uint32_t> atoms;      // raw ids of the atoms
  std::vector<Elem> to_bits;             // position in members -> bit pattern
  BooleanAlgebra algebra{0};
};

}  // namespace

Decomposition decompose(const RawAlgebra& r) {
  if (!r.well_formed()) throw NotIBSL("malformed operation tables");
  if (IbslCheck check = check_ibsl(r); !check.pass) throw NotIBSL(check.describe());
  const std::uint32_t n = static_cast<std::uint32_t>(r.size);
  auto dot = [&r](std::uint32_t a, std::uint32_t b) { return partition_apply(r, a, b); };

  // components: a ≡ b iff a·b = a and b·a = b
  std::vector<int> cls(n, -1);
  std::vector<ComponentClass> classes;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (cls[a] != -1) continue;
    const int id = static_cast<int>(classes.size());
    classes.emplace_back();
    for (std::uint32_t b = a; b < n; ++b)
      if (dot(a, b) == a && dot(b, a) == b) {
        if (cls[b] != -1) throw InternalInconsistency("component relation is not a partition");
        cls[b] = id;
        classes[static_cast<std::size_t>(id)].members.push_back(b);
      }
  }

  // canonical order: by size, then by least raw element
  std::vector<int> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::ranges::sort(order, [&classes](int lhs, int rhs) {
    const auto& a = classes[static_cast<std::size_t>(lhs)];
    const auto& b = classes[static_cast<std::size_t>(rhs)];
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members.front() < b.members.front();
  });
  {
    std::vector<ComponentClass> sorted;
    sorted.reserve(classes.size());
    std::vector<int> position(classes.size());
    for (std::size_t p = 0; p < order.size(); ++p) {
      position[static_cast<std::size_t>(order[p])] = static_cast<int>(p);
      sorted.push_back(std::move(classes[static_cast<std::size_t>(order[p])]));
    }
    classes = std::move(sorted);
    for (std::uint32_t a = 0; a < n; ++a) cls[a] = position[static_cast<std::size_t>(cls[a])];
  }
  const int k = static_cast<int>(classes.size());

  // the index semilattice: join(i, j) = class of a·b for a ∈ A_i, b ∈ A_j
  std::vector<int> join_table(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const std::uint32_t rep = dot(classes[static_cast<std::size_t>(i)].members.front(),
                                    classes[static_cast<std::size_t>(j)].members.front());
      join_table[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
                 static_cast<std::size_t>(j)] = cls[rep];
    }
  SemilatticeCheck index_check = validate_semilattice(k, join_table);
  if (!index_check.ok())
    throw InternalInconsistency("induced index structure is not a semilattice: " +
                                index_check.describe());
  const JoinSemilattice& index = *index_check.lattice;

  // cross-check the order against "i ≤ j iff some b ∈ A_j absorbs some a ∈ A_i"
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      bool exists = false;
      for (std::uint32_t a : classes[static_cast<std::size_t>(i)].members) {
        for (std::uint32_t b : classes[static_cast<std::size_t>(j)].members)
          if (dot(b, a) == b) {
            exists = true;
            break;
          }
        if (exists) break;
      }
      if (exists != index.leq(i, j))
        throw InternalInconsistency("absorption order disagrees with the join table");
    }

  // Boolean structure of each component, via the atom bit map
  for (ComponentClass& c : classes) {
    auto find_unit = [&r, &c](bool zero) {
      for (std::uint32_t z : c.members) {
        bool unit = true;
        for (std::uint32_t x : c.members)
          if ((zero ? r.join(z, x) : r.meet(z, x)) != x) {
            unit = false;
            break;
          }
        if (unit) return z;
      }
      throw InternalInconsistency("component without local 0/1");
    };
    c.zero = find_unit(true);
    c.one = find_unit(false);
    for (std::uint32_t x : c.members) {
      if (x == c.zero) continue;
      bool minimal = true;
      for (std::uint32_t y : c.members) {
        if (y == c.zero || y == x) continue;
        if (r.join(y, x) == x) {  // y < x within the component
          minimal = false;
          break;
        }
      }
      if (minimal) c.atoms.push_back(x);
    }
    if (c.atoms.size() > static_cast<std::size_t>(kMaxAtoms))
      throw CapacityExceeded("component with more than " + std::to_string(kMaxAtoms) + " atoms");
    if (c.members.size() != (std::size_t{1} << c.atoms.size()))
      throw InternalInconsistency("component size is not a power of two over its atoms");
    c.algebra = BooleanAlgebra(static_cast<int>(c.atoms.size()));
    c.to_bits.resize(c.members.size());
    for (std::size_t p = 0; p < c.members.size(); ++p) {
      Elem bits = 0;
      for (std::size_t t = 0; t < c.atoms.size(); ++t)
        if (r.join(c.atoms[t], c.members[p]) == c.members[p]) bits |= Elem{1} << t;
      c.to_bits[p] = bits;
    }
    // the atom map must be a bijection onto the bit-pattern carrier
    std::vector<bool> seen(c.members.size(), false);
    for (Elem bits : c.to_bits) {
      if (bits >= c.members.size() || seen[bits])
        throw InternalInconsistency("component is not Boolean: atom map not bijective");
      seen[bits] = true;
    }
  }

  auto bits_of = [&classes, &cls](std::uint32_t raw) {
    const ComponentClass& c = classes[static_cast<std::size_t>(cls[raw])];
    const auto pos = std::ranges::lower_bound(c.members, raw) - c.members.begin();
    return c.to_bits[static_cast<std::size_t>(pos)];
  };

  // exhaustive Boolean-law check: the raw tables must transport to set operations
  for (int i = 0; i < k; ++i) {
    const ComponentClass& c = classes[static_cast<std::size_t>(i)];
    for (std::uint32_t a : c.members) {
      if (bits_of(r.comp(a)) != c.algebra.complement(bits_of(a)))
        throw InternalInconsistency("component is not Boolean: complement mismatch");
      for (std::uint32_t b : c.members) {
        if (bits_of(r.join(a, b)) != c.algebra.join(bits_of(a), bits_of(b)) ||
            bits_of(r.meet(a, b)) != c.algebra.meet(bits_of(a), bits_of(b)))
          throw InternalInconsistency("component is not Boolean: lattice mismatch");
      }
    }
  }

  // transition homs p_ij(x) = x·1_j, with independence from the choice of b ∈ A_j
  std::vector<HomSpec> homs;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !index.leq(i, j)) continue;
      const ComponentClass& ci = classes[static_cast<std::size_t>(i)];
      const ComponentClass& cj = classes[static_cast<std::size_t>(j)];
      std::vector<Elem> images(ci.members.size());
      for (std::uint32_t x : ci.members) {
        const std::uint32_t image = dot(x, cj.one);
        if (cls[image] != j)
          throw InternalInconsistency("x·1_j leaves the target component");
        for (std::uint32_t b : cj.members)
          if (dot(x, b) != image)
            throw InternalInconsistency("p_ij depends on the choice of target element");
        images[static_cast<std::size_t>(bits_of(x))] = bits_of(image);
      }
      try {
        homs.push_back({i, j, BooleanHom::from_element_map(ci.algebra, cj.algebra, images)});
      } catch (const NotAHomomorphism& e) {
        throw InternalInconsistency(std::string("x·1_j is not a homomorphism: ") + e.what());
      }
    }

  std::vector<BooleanAlgebra> components;
  components.reserve(static_cast<std::size_t>(k));
  for (const ComponentClass& c : classes) components.push_back(c.algebra);
  SystemCheck system_check = validate_system(index, std::move(components), std::move(homs));
  if (!system_check.ok())
    throw InternalInconsistency("reconstructed system invalid: " + system_check.describe());

  Decomposition result{std::move(*system_check.system), {}, {}};
  result.labeling.resize(n);
  result.component_raw.resize(static_cast<std::size_t>(k));
  for (std::uint32_t a = 0; a < n; ++a) {
    result.labeling[a] = {cls[a], bits_of(a)};
    result.component_raw[static_cast<std::size_t>(cls[a])].push_back(a);
  }

  // the raw tables, transported along the labelling, must equal the sum tables
  const PlonkaSum rebuilt = plonka_sum(result.system, r.size);
  for (std::uint32_t a = 0; a < n; ++a) {
    const std::uint32_t sa = rebuilt.id_of(result.labeling[a]);
    if (rebuilt.labels[rebuilt.raw.comp(sa)] != result.labeling[r.comp(a)])
      throw InternalInconsistency("complement table does not transport");
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t sb = rebuilt.id_of(result.labeling[b]);
      if (rebuilt.labels[rebuilt.raw.join(sa, sb)] != result.labeling[r.join(a, b)] ||
          rebuilt.labels[rebuilt.raw.meet(sa, sb)] != result.labeling[r.meet(a, b)])
        throw InternalInconsistency("binary tables do not transport");
    }
  }
  if (result.labeling[r.zero] != plonka_zero(result.system) ||
      result.labeling[r.one] != plonka_one(result.system))
    throw InternalInconsistency("constants do not transport");
  return result;
}

InjectivityResult is_injective_ibsl(const RawAlgebra& r) {
  if (IbslCheck check = check_ibsl(r); !check.pass) throw NotIBSL(check.describe());
  const std::uint32_t n = static_cast<std::uint32_t>(r.size);
  auto dot = [&r](std::uint32_t a, std::uint32_t b) { return partition_apply(r, a, b); };
  InjectivityResult result;
  result.quasi_identity_route = true;
  for (std::uint32_t x = 0; x < n && result.quasi_identity_route; ++x)
    for (std::uint32_t y = 0; y < n && result.quasi_identity_route; ++y) {
      if (dot(x, y) != x || dot(y, x) != y) continue;
      for (std::uint32_t z = 0; z < n; ++z)
        if (dot(x, z) == dot(y, z) && x != y) {
          result.quasi_identity_route = false;
          result.x = x, result.y = y, result.z = z;
          break;
        }
    }
  result.hom_route = is_injective_system(decompose(r).system);
  if (result.quasi_identity_route != result.hom_route)
    throw InternalInconsistency("injectivity routes disagree");
  result.injective = result.quasi_identity_route;
  return result;
}

bool is_injective_system(const DirectSystem& system) {
  for (int i = 0; i < system.component_count(); ++i)
    for (int j = 0; j < system.component_count(); ++j)
      if (system.index().leq(i, j) && !system.hom(i, j).is_injective()) return false;
  return true;
}

bool is_ngib(const RawAlgebra& r) {
  if (IbslCheck check = check_ibsl(r); !check.pass) throw NotIBSL(check.describe());
  bool premise_instance = false;
  for (std::uint32_t x = 0; x < r.size; ++x)
    if (r.comp(x) == x) {
      premise_instance = true;
      break;
    }
  return !premise_instance || r.size == 1;
}

namespace {

bool atoms_commute(const DirectSystem& a, const DirectSystem& b, const std::vector<int>& phi,
                   const std::vector<std::vector<int>>& psi) {
  // psi[i] maps atoms of a.component(i) to atoms of b.component(phi[i]); the
  // hom squares must commute on dual maps: psi_i(dual_a(t)) = dual_b(psi_j(t)).
  for (int i = 0; i < a.component_count(); ++i)
    for (int j = 0; j < a.component_count(); ++j) {
      if (!a.index().leq(i, j)) continue;
      const BooleanHom& pa = a.hom(i, j);
      const BooleanHom& pb = b.hom(phi[static_cast<std::size_t>(i)],
                                   phi[static_cast<std::size_t>(j)]);
      for (int t = 0; t < a.component(j).atom_count(); ++t)
        if (psi[static_cast<std::size_t>(i)][static_cast<std::size_t>(pa.dual(t))] !=
            pb.dual(psi[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)]))
          return false;
    }
  return true;
}

bool extend_atom_maps(const DirectSystem& a, const DirectSystem& b, const std::vector<int>& phi,
                      std::vector<std::vector<int>>& psi, std::size_t next) {
  if (next == psi.size()) return atoms_commute(a, b, phi, psi);
  std::vector<int> perm(static_cast<std::size_t>(a.component(static_cast<int>(next)).atom_count()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    psi[next] = perm;
    if (extend_atom_maps(a, b, phi, psi, next + 1)) return true;
  } while (std::ranges::next_permutation(perm).found);
  return false;
}

}  // namespace

bool systems_isomorphic(const DirectSystem& a, const DirectSystem& b) {
  if (a.component_count() != b.component_count()) return false;
  const int k = a.component_count();
  std::vector<int> phi(static_cast<std::size_t>(k));
  std::iota(phi.begin(), phi.end(), 0);
  do {
    bool structure = true;
    for (int i = 0; i < k && structure; ++i) {
      if (a.component(i).atom_count() !=
          b.component(phi[static_cast<std::size_t>(i)]).atom_count())
        structure = false;
      for (int j = 0; j < k && structure; ++j)
        if (phi[static_cast<std::size_t>(a.index().join(i, j))] !=
            b.index().join(phi[static_cast<std::size_t>(i)], phi[static_cast<std::size_t>(j)]))
          structure = false;
    }
    if (!structure) continue;
    std::vector<std::vector<int>> psi(static_cast<std::size_t>(k));
    if (extend_atom_maps(a, b, phi, psi, 0)) return true;
  } while (std::ranges::next_permutation(phi).found);
  return false;
}

}  // namespace plonka
