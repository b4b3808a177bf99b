#include <doctest.h>

#include <algorithm>

#include "plonka/topology.hpp"
#include "support.hpp"

using namespace plonka;
using namespace plonka::test;

namespace {

struct Instance {
  DirectSystem system;
  PlonkaSum sum;
  Booleanisation quotient;
  State state;
  std::vector<Rat> values;
  Measure mu;
  PseudometricSpace space;
  PseudometricSpace quotient_space;
  bool hypotheses;

  static Instance make(DirectSystem system_in, State state_in) {
    PlonkaSum sum = plonka_sum(system_in);
    Booleanisation quotient = booleanise(system_in, sum);
    std::vector<Rat> values = state_table(system_in, sum, state_in);
    Measure mu = quotient_measure(system_in, state_in);
    PseudometricSpace space = pseudometric(system_in, sum, state_in);
    PseudometricSpace quotient_space = quotient_pseudometric(quotient, mu);
    const bool hypotheses =
        is_injective_system(system_in) && is_faithful(system_in, state_in);
    return {std::move(system_in), std::move(sum),   std::move(quotient),
            std::move(state_in),  std::move(values), std::move(mu),
            std::move(space),     std::move(quotient_space), hypotheses};
  }
};

Instance diamond_instance() {
  DirectSystem system = diamond_system();
  State state = diamond_state(system);
  return Instance::make(std::move(system), std::move(state));
}

Instance chain_instance() {
  DirectSystem system = chain_system();
  State state = chain_state(system);
  return Instance::make(std::move(system), std::move(state));
}

}  // namespace

TEST_CASE("the canonical section of the example is fully certified") {
  const Instance ex = diamond_instance();
  const Section section = make_section(ex.quotient);
  const SectionCertificate cert =
      verify_section(section, ex.quotient, ex.space, ex.quotient_space, ex.values, ex.mu);
  CHECK(cert.retraction);
  CHECK(cert.continuous);
  CHECK(cert.dense);
  CHECK(cert.preserves_state);
  CHECK(ex.quotient.section_count() == 256);  // the product of the fiber sizes
}

TEST_CASE("on a Boolean algebra the canonical section is the identity") {
  SemilatticeCheck index = validate_semilattice(1, std::vector<int>{0});
  SystemCheck boolean = validate_system(*index.lattice, {BooleanAlgebra(2)}, {});
  const Instance ex = Instance::make(*boolean.system, uniform_state(*boolean.system));
  const Section section = make_section(ex.quotient);
  for (Elem q = 0; q < ex.quotient.quotient.size(); ++q)
    CHECK(ex.sum.labels[section.rep[q]].inner == q);
  CHECK(verify_section(section, ex.quotient, ex.space, ex.quotient_space, ex.values, ex.mu)
            .all());
}

TEST_CASE("choosers are validated, and any in-fiber chooser certifies") {
  const Instance ex = diamond_instance();
  const SectionChooser last = [](Elem, std::span<const std::uint32_t> fiber) {
    return fiber.back();
  };
  const Section section = make_section(ex.quotient, last);
  CHECK(verify_section(section, ex.quotient, ex.space, ex.quotient_space, ex.values, ex.mu)
            .all());

  const SectionChooser outside = [](Elem, std::span<const std::uint32_t>) {
    return std::uint32_t{0};
  };
  CHECK_THROWS_AS(make_section(ex.quotient, outside), BadChooser);
}

TEST_CASE("topology report on the example: hypotheses met") {
  const Instance ex = diamond_instance();
  REQUIRE(ex.hypotheses);
  const TopologyReport report =
      topology_report(ex.space, ex.quotient_space, ex.quotient, ex.hypotheses);
  CHECK(report.opens_saturated);
  CHECK(report.projection_open);
  CHECK(report.projection_closed);
  CHECK(!report.interior.preserving);  // fibers {a,c} etc. are fat
  CHECK(report.interior.matches_singleton_criterion);
  CHECK(report.interior.brute_forced);
  CHECK(!report.interior.witness.empty());
  CHECK(interior_violated_by(ex.space, ex.quotient_space, ex.quotient,
                             report.interior.witness));
  CHECK(report.reg.isomorphic);
  CHECK(report.reg.full_table_checked);
  CHECK(report.reg.opens_checked == 256);
}

TEST_CASE("the 2-chain: the stated witness B minus {b} breaks interior preservation") {
  const Instance ex = chain_instance();
  CHECK(!ex.hypotheses);
  const TopologyReport report =
      topology_report(ex.space, ex.quotient_space, ex.quotient, ex.hypotheses);
  CHECK(report.opens_saturated);
  CHECK(!report.interior.preserving);
  CHECK(report.interior.matches_singleton_criterion);

  std::vector<std::uint32_t> without_b;
  for (std::uint32_t x = 0; x < ex.sum.raw.size; ++x)
    if (x != chn::b) without_b.push_back(x);
  CHECK(interior_violated_by(ex.space, ex.quotient_space, ex.quotient, without_b));
  CHECK(interior_violated_by(ex.space, ex.quotient_space, ex.quotient,
                             report.interior.witness));
  CHECK(report.reg.isomorphic);  // two clopen classes on either side
}

TEST_CASE("Boolean case: interior preserving and Reg isomorphism is the identity") {
  SemilatticeCheck index = validate_semilattice(1, std::vector<int>{0});
  SystemCheck boolean = validate_system(*index.lattice, {BooleanAlgebra(2)}, {});
  const Instance ex = Instance::make(*boolean.system, uniform_state(*boolean.system));
  const TopologyReport report =
      topology_report(ex.space, ex.quotient_space, ex.quotient, ex.hypotheses);
  CHECK(report.interior.preserving);
  CHECK(report.interior.witness.empty());
  CHECK(report.interior.matches_singleton_criterion);
  CHECK(report.reg.isomorphic);

  // uniqueness is immediate when the section is the identity
  const UniquenessCertificate unique =
      state_uniqueness_check(ex.system, ex.sum, ex.quotient, ex.state);
  CHECK(unique.exists_unique);
  CHECK(unique.equals_state);
}

TEST_CASE("witness-family mode still decides the example correctly") {
  const Instance ex = diamond_instance();
  TopologyCaps caps;
  caps.interior_bruteforce_bits = 4;  // force the family fallback (|B| = 18)
  const TopologyReport report =
      topology_report(ex.space, ex.quotient_space, ex.quotient, ex.hypotheses, caps);
  CHECK(!report.interior.brute_forced);
  CHECK(report.capped);
  CHECK(!report.interior.preserving);
  CHECK(report.interior.matches_singleton_criterion);
  CHECK(interior_violated_by(ex.space, ex.quotient_space, ex.quotient,
                             report.interior.witness));
}

TEST_CASE("the unique continuous extension is the state itself") {
  const Instance ex = diamond_instance();
  const UniquenessCertificate cert =
      state_uniqueness_check(ex.system, ex.sum, ex.quotient, ex.state);
  CHECK(cert.exists_unique);
  CHECK(cert.equals_state);

  // continuity means class-constancy; perturbing a non-representative breaks it
  CHECK(is_class_constant(ex.space, ex.values));
  std::vector<Rat> perturbed = ex.values;
  perturbed[dia::c] = Rat(9, 10);  // a stays put, so the class {a, c} is no longer constant
  CHECK(!is_class_constant(ex.space, perturbed));

  const Instance chain = chain_instance();
  CHECK_THROWS_AS(state_uniqueness_check(chain.system, chain.sum, chain.quotient, chain.state),
                  HypothesesUnmet);
}

TEST_CASE("generated injective instances satisfy the whole topology suite") {
  SystemGenerator gen(77);
  for (int round = 0; round < 12; ++round) {
    const DirectSystem system = gen.next(true, false);
    const Instance ex = Instance::make(system, uniform_state(system));
    REQUIRE(ex.hypotheses);

    const PseudometricSpace space = ex.space;
    const KolmogorovResult kolmogorov =
        kolmogorov_quotient(space, ex.system, ex.quotient, ex.state);
    CHECK(kolmogorov.matches_booleanisation);

    TopologyCaps caps;
    caps.interior_bruteforce_bits = 12;
    const TopologyReport report =
        topology_report(space, ex.quotient_space, ex.quotient, ex.hypotheses, caps);
    CHECK(report.opens_saturated);
    CHECK(report.projection_open);
    CHECK(report.projection_closed);
    CHECK(report.interior.matches_singleton_criterion);
    if (!report.interior.preserving)
      CHECK(interior_violated_by(space, ex.quotient_space, ex.quotient,
                                 report.interior.witness));
    CHECK(report.reg.isomorphic);

    const Section section = make_section(ex.quotient);
    CHECK(verify_section(section, ex.quotient, space, ex.quotient_space, ex.values, ex.mu)
              .all());
    const UniquenessCertificate unique =
        state_uniqueness_check(ex.system, ex.sum, ex.quotient, ex.state);
    CHECK(unique.equals_state);
  }
}
