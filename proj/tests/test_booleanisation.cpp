#include <doctest.h>

#include <algorithm>
#include <set>

#include "plonka/booleanisation.hpp"
#include "plonka/states.hpp"
#include "support.hpp"

using namespace plonka;
using namespace plonka::test;

namespace {

/// Oracle: ∼-classes by union-find over the defining pairs (a, p_ij(a)).
std::set<std::set<std::uint32_t>> oracle_classes(const DirectSystem& system,
                                                 const PlonkaSum& sum) {
  OracleUnionFind uf(sum.raw.size);
  for (int i = 0; i < system.component_count(); ++i)
    for (int j = 0; j < system.component_count(); ++j) {
      if (i == j || !system.index().leq(i, j)) continue;
      for (Elem a = 0; a < system.component(i).size(); ++a)
        uf.unite(sum.id_of({i, a}), sum.id_of({j, system.hom(i, j).apply(a)}));
    }
  std::map<std::uint32_t, std::set<std::uint32_t>> grouped;
  for (std::uint32_t x = 0; x < sum.raw.size; ++x) grouped[uf.find(x)].insert(x);
  std::set<std::set<std::uint32_t>> classes;
  for (auto& [root, members] : grouped) classes.insert(members);
  return classes;
}

std::set<std::set<std::uint32_t>> as_sets(const std::vector<std::vector<std::uint32_t>>& fibers) {
  std::set<std::set<std::uint32_t>> classes;
  for (const auto& fiber : fibers) classes.insert({fiber.begin(), fiber.end()});
  return classes;
}

}  // namespace

TEST_CASE("the 2-chain example quotients onto two classes") {
  const DirectSystem system = chain_system();
  const PlonkaSum sum = plonka_sum(system);
  const Booleanisation b = booleanise(system, sum);
  CHECK(b.quotient.size() == 2);
  CHECK(as_sets(b.classes) ==
        std::set<std::set<std::uint32_t>>{{chn::one, chn::a, chn::b},
                                          {chn::zero, chn::a_c, chn::b_c}});
  CHECK(as_sets(b.classes) == oracle_classes(system, sum));
  CHECK(!is_trivial_booleanisation(system));
}

TEST_CASE("a singleton system is its own Booleanisation") {
  SemilatticeCheck index = validate_semilattice(1, std::vector<int>{0});
  SystemCheck check = validate_system(*index.lattice, {BooleanAlgebra(2)}, {});
  const PlonkaSum sum = plonka_sum(*check.system);
  const Booleanisation b = booleanise(*check.system, sum);
  CHECK(b.quotient.size() == 4);
  for (std::uint32_t x = 0; x < sum.raw.size; ++x) {
    CHECK(b.pi[x] == sum.labels[x].inner);
    CHECK(b.classes[b.pi[x]].size() == 1);
  }
}

TEST_CASE("the diamond example projects a to c and b to e") {
  const DirectSystem system = diamond_system();
  const PlonkaSum sum = plonka_sum(system);
  const Booleanisation b = booleanise(system, sum);
  CHECK(b.quotient.size() == 8);
  CHECK(b.pi[dia::a] == 1);  // [a] is named by c
  CHECK(b.pi[dia::b] == 4);  // [b] is named by e
  CHECK(as_sets(b.classes) == oracle_classes(system, sum));
  CHECK(b.section_count() == 256);
}

TEST_CASE("triviality of the limit equals triviality of a component") {
  SemilatticeCheck index = validate_semilattice(2, std::vector<int>{0, 1, 1, 1});
  std::vector<BooleanAlgebra> components{BooleanAlgebra(2), BooleanAlgebra(0)};
  SystemCheck check = validate_system(
      *index.lattice, components, {{0, 1, BooleanHom(components[0], components[1], {})}});
  REQUIRE(check.ok());
  CHECK(is_trivial_booleanisation(*check.system));
  CHECK(!is_trivial_booleanisation(diamond_system()));
}

TEST_CASE("injective systems meet each class exactly once per up-set index") {
  SystemGenerator gen(31);
  for (int round = 0; round < 25; ++round) {
    const DirectSystem system = gen.next(true, false);
    const PlonkaSum sum = plonka_sum(system);
    const Booleanisation b = booleanise(system, sum);
    for (const auto& fiber : b.classes) {
      std::set<int> met;
      for (std::uint32_t raw : fiber) {
        const int index = sum.labels[raw].index;
        CHECK(!met.contains(index));  // exactly one element per met index
        met.insert(index);
      }
      for (int i : met)  // the met indices form an up-set
        for (int j = 0; j < system.component_count(); ++j)
          if (system.index().leq(i, j)) CHECK(met.contains(j));
    }
  }
}

namespace {

/// The 2-element IBSL as a one-component system, with its sum.
struct TwoElementTarget {
  DirectSystem system;
  PlonkaSum sum;
  Booleanisation quotient;

  static TwoElementTarget make() {
    SemilatticeCheck index = validate_semilattice(1, std::vector<int>{0});
    SystemCheck check = validate_system(*index.lattice, {BooleanAlgebra(1)}, {});
    DirectSystem system = *check.system;
    PlonkaSum sum = plonka_sum(system);
    Booleanisation quotient = booleanise(system, sum);
    return {std::move(system), std::move(sum), std::move(quotient)};
  }
};

}  // namespace

TEST_CASE("induced morphisms: identity, the collapse of the 2-chain, functoriality") {
  const DirectSystem chain = chain_system();
  const PlonkaSum chain_sum = plonka_sum(chain);
  const Booleanisation chain_bool = booleanise(chain, chain_sum);

  SUBCASE("identity induces the identity") {
    std::vector<std::uint32_t> id(chain_sum.raw.size);
    for (std::uint32_t x = 0; x < chain_sum.raw.size; ++x) id[x] = x;
    const InducedHom induced =
        induce_hom(chain_sum, chain_bool, chain_sum, chain_bool, id);
    CHECK(induced.bar == BooleanHom::identity(chain_bool.quotient));
    CHECK(induced.square_commutes);
  }

  SUBCASE("collapsing onto the top subalgebra induces an isomorphism") {
    const TwoElementTarget target = TwoElementTarget::make();
    // x ↦ its image in the top component, read as the 2-element algebra
    std::vector<std::uint32_t> map = {0, 1, 0, 1, 0, 1};
    const InducedHom induced =
        induce_hom(chain_sum, chain_bool, target.sum, target.quotient, map);
    CHECK(induced.square_commutes);
    CHECK(induced.bar.is_injective());

    // with the unique states on both sides the pair is preserved
    const std::vector<Rat> source_values =
        state_table(chain, chain_sum, chain_state(chain));
    const std::vector<Rat> target_values =
        state_table(target.system, target.sum, State{Measure(BooleanAlgebra(1), {Rat(1)})});
    const InducedHom with_states = induce_hom(chain_sum, chain_bool, target.sum,
                                              target.quotient, map, source_values, target_values);
    REQUIRE(with_states.input_states_preserved.has_value());
    CHECK(*with_states.input_states_preserved);
    CHECK(*with_states.induced_measures_preserved);
  }

  SUBCASE("composition is preserved") {
    const TwoElementTarget target = TwoElementTarget::make();
    const std::vector<std::uint32_t> h = {0, 1, 0, 1, 0, 1};  // chain -> 2
    const std::vector<std::uint32_t> g = {0, 3};              // 2 -> chain (0, 1)
    std::vector<std::uint32_t> gh(chain_sum.raw.size);
    for (std::uint32_t x = 0; x < chain_sum.raw.size; ++x) gh[x] = g[h[x]];
    const InducedHom ih = induce_hom(chain_sum, chain_bool, target.sum, target.quotient, h);
    const InducedHom ig = induce_hom(target.sum, target.quotient, chain_sum, chain_bool, g);
    const InducedHom igh = induce_hom(chain_sum, chain_bool, chain_sum, chain_bool, gh);
    CHECK(igh.bar == compose(ig.bar, ih.bar));
  }

  SUBCASE("non-homomorphisms are rejected with a witness") {
    std::vector<std::uint32_t> broken = {0, 1, 0, 1, 0, 0};  // drops the unit of the top
    CHECK_THROWS_AS(
        induce_hom(chain_sum, chain_bool, chain_sum, chain_bool, broken),
        NotAHomomorphism);
    const IbslHomCheck check = check_ibsl_hom(chain_sum.raw, chain_sum.raw, broken);
    CHECK(!check.ok);
  }
}
