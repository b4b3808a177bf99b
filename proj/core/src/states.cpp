#include "plonka/states.hpp"

#include <algorithm>
#include <random>

namespace plonka {

State make_state(const DirectSystem& system, Measure top_measure) {
  if (system.has_trivial_component())
    throw TrivialComponent("a system with a trivial component carries no state");
  if (top_measure.algebra() != system.component(system.index().top()))
    throw InvalidMeasure("state storage must be a measure on the top component");
  return State{std::move(top_measure)};
}

State uniform_state(const DirectSystem& system) {
  if (system.has_trivial_component())
    throw TrivialComponent("a system with a trivial component carries no state");
  return State{Measure::uniform(system.component(system.index().top()))};
}

Rat state_value(const DirectSystem& system, const State& state, PlonkaElement element) {
  const int top = system.index().top();
  return state.top.value(system.hom(element.index, top).apply(element.inner));
}

std::vector<Rat> state_table(const DirectSystem& system, const PlonkaSum& sum,
                             const State& state) {
  std::vector<Rat> values;
  values.reserve(sum.raw.size);
  for (std::uint32_t raw = 0; raw < sum.raw.size; ++raw)
    values.push_back(state_value(system, state, sum.labels[raw]));
  return values;
}

Measure restrict_state(const DirectSystem& system, const State& state, int component) {
  const BooleanAlgebra& algebra = system.component(component);
  const int top = system.index().top();
  const BooleanHom& to_top = system.hom(component, top);
  std::vector<Rat> weights;
  weights.reserve(static_cast<std::size_t>(algebra.atom_count()));
  for (int a = 0; a < algebra.atom_count(); ++a)
    weights.push_back(state.top.value(to_top.apply(algebra.atom(a))));
  return Measure(algebra, std::move(weights));
}

std::string StateViolation::describe() const {
  switch (condition) {
    case StateCondition::Arity:
      return "one value per element required";
    case StateCondition::ValueRange:
      return "value at " + std::to_string(a) + " outside [0,1]";
    case StateCondition::UnitValue:
      return "s(1) != 1";
    case StateCondition::LocalAdditivity:
      return "additivity fails at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
    case StateCondition::ZeroValue:
      return "s(0) != 0";
    case StateCondition::LocalUnit:
      return "s(1_i) != 1 for component " + std::to_string(i);
    case StateCondition::LocalZero:
      return "s(0_i) != 0 for component " + std::to_string(i);
    case StateCondition::Involution:
      return "s(x') != 1 - s(x) at " + std::to_string(a);
    case StateCondition::MeasureInvalid:
      return "component " + std::to_string(i) + ": " + detail;
    case StateCondition::PreservationFailed:
      return "hom " + std::to_string(i) + " -> " + std::to_string(j) +
             " does not preserve the measures at atom " + std::to_string(atom);
  }
  return "?";
}

std::string StateReport::describe() const {
  if (valid) return faithful ? "valid, faithful" : "valid, not faithful";
  std::string text = "invalid";
  for (const StateViolation& v : violations) text += "\n  " + v.describe();
  return text;
}

namespace {

bool definitional(StateCondition c) {
  switch (c) {
    case StateCondition::Arity:
    case StateCondition::ValueRange:
    case StateCondition::UnitValue:
    case StateCondition::LocalAdditivity:
    case StateCondition::MeasureInvalid:
    case StateCondition::PreservationFailed:
      return true;
    default:
      return false;
  }
}

void finish(StateReport& report) {
  report.valid = std::ranges::none_of(
      report.violations, [](const StateViolation& v) { return definitional(v.condition); });
  if (!report.valid) report.faithful = false;
}

}  // namespace

StateReport check_state_direct(const RawAlgebra& algebra, const Decomposition& decomposition,
                               std::span<const Rat> values) {
  StateReport report;
  if (values.size() != algebra.size) {
    report.violations.push_back({StateCondition::Arity});
    finish(report);
    return report;
  }
  for (std::uint32_t a = 0; a < algebra.size; ++a)
    if (values[a] < 0 || values[a] > 1)
      report.violations.push_back({StateCondition::ValueRange, a});
  if (values[algebra.one] != 1) report.violations.push_back({StateCondition::UnitValue});

  std::vector<bool> local_zero(algebra.size, false);
  for (int i = 0; i < decomposition.system.component_count(); ++i)
    local_zero[decomposition.local_zero(i)] = true;

  for (std::uint32_t a = 0; a < algebra.size; ++a)
    for (std::uint32_t b = 0; b < algebra.size; ++b)
      if (local_zero[algebra.meet(a, b)] && values[algebra.join(a, b)] != values[a] + values[b])
        report.violations.push_back({StateCondition::LocalAdditivity, a, b});

  // basic-property consequences, recorded for diagnostics
  if (values[algebra.zero] != 0) report.violations.push_back({StateCondition::ZeroValue});
  for (int i = 0; i < decomposition.system.component_count(); ++i) {
    StateViolation v;
    v.i = i;
    if (values[decomposition.local_one(i)] != 1) {
      v.condition = StateCondition::LocalUnit;
      report.violations.push_back(v);
    }
    if (values[decomposition.local_zero(i)] != 0) {
      v.condition = StateCondition::LocalZero;
      report.violations.push_back(v);
    }
  }
  for (std::uint32_t a = 0; a < algebra.size; ++a)
    if (values[algebra.comp(a)] != 1 - values[a])
      report.violations.push_back({StateCondition::Involution, a});

  finish(report);
  if (report.valid) {
    report.faithful = true;
    for (std::uint32_t a = 0; a < algebra.size; ++a)
      if (!local_zero[a] && values[a] <= 0) {
        report.faithful = false;
        break;
      }
  }
  return report;
}

StateReport check_state_componentwise(const DirectSystem& system,
                                      std::span<const std::vector<Rat>> component_weights) {
  StateReport report;
  if (component_weights.size() != static_cast<std::size_t>(system.component_count())) {
    report.violations.push_back({StateCondition::Arity});
    finish(report);
    return report;
  }
  for (int i = 0; i < system.component_count(); ++i) {
    MeasureCheck check =
        measure_check(system.component(i), component_weights[static_cast<std::size_t>(i)]);
    if (!check.ok()) {
      StateViolation v;
      v.condition = StateCondition::MeasureInvalid;
      v.i = i;
      v.detail = check.describe();
      report.violations.push_back(v);
    }
  }
  if (!report.violations.empty()) {
    finish(report);
    return report;
  }
  // preservation m_j(p_ij(a)) = m_i(a), checked on the atoms of A_i
  for (int i = 0; i < system.component_count(); ++i)
    for (int j = 0; j < system.component_count(); ++j) {
      if (i == j || !system.index().leq(i, j)) continue;
      const BooleanHom& hom = system.hom(i, j);
      Measure mj(system.component(j), component_weights[static_cast<std::size_t>(j)]);
      for (int a = 0; a < system.component(i).atom_count(); ++a)
        if (mj.value(hom.apply(system.component(i).atom(a))) !=
            component_weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)]) {
          StateViolation v;
          v.condition = StateCondition::PreservationFailed;
          v.i = i, v.j = j, v.atom = a;
          report.violations.push_back(v);
        }
    }
  finish(report);
  if (report.valid) {
    report.faithful = true;
    for (std::size_t i = 0; i < component_weights.size() && report.faithful; ++i)
      for (const Rat& w : component_weights[i])
        if (w <= 0) {
          report.faithful = false;
          break;
        }
  }
  return report;
}

Measure quotient_measure(const DirectSystem& system, const State& state) {
  (void)system;
  return state.top;
}

Measure quotient_measure_from_table(const PlonkaSum& sum, const Booleanisation& booleanisation,
                                    std::span<const Rat> values) {
  if (values.size() != sum.raw.size) throw InvalidMeasure("one value per sum element required");
  std::vector<Rat> weights;
  weights.reserve(static_cast<std::size_t>(booleanisation.quotient.atom_count()));
  for (int a = 0; a < booleanisation.quotient.atom_count(); ++a) {
    const Elem atom = booleanisation.quotient.atom(a);
    weights.push_back(values[booleanisation.classes[atom].front()]);
  }
  Measure m(booleanisation.quotient, std::move(weights));
  // Φ must be well-defined: constant on classes, and measure values must
  // reproduce the table
  for (std::uint32_t raw = 0; raw < sum.raw.size; ++raw)
    if (m.value(booleanisation.pi[raw]) != values[raw])
      throw InvalidMeasure("table is not constant on classes; no corresponding measure");
  return m;
}

State state_from_quotient_measure(const DirectSystem& system, Measure m) {
  return make_state(system, std::move(m));
}

CarriesState carries_state(const DirectSystem& system) {
  CarriesState result;
  for (int i = 0; i < system.component_count(); ++i)
    if (system.component(i).is_trivial()) {
      result.trivial_component = i;
      return result;
    }
  result.carries = true;
  result.witness = uniform_state(system);
  return result;
}

bool is_faithful(const DirectSystem& system, const State& state) {
  for (int i = 0; i < system.component_count(); ++i) {
    const BooleanAlgebra& algebra = system.component(i);
    for (Elem x = 1; x < algebra.size(); ++x)
      if (state_value(system, state, {i, x}) <= 0) return false;
  }
  return true;
}

FaithfulDiagnosis faithful_diagnosis(const DirectSystem& system, const State& state) {
  FaithfulDiagnosis result;
  result.faithful = is_faithful(system, state);
  result.restrictions_regular = true;
  for (int i = 0; i < system.component_count(); ++i)
    if (!restrict_state(system, state, i).is_regular()) {
      result.restrictions_regular = false;
      break;
    }
  result.homs_injective = is_injective_system(system);
  if (result.faithful != (result.restrictions_regular && result.homs_injective))
    throw InternalInconsistency("faithfulness criterion split disagrees with the direct test");
  return result;
}

bool integral_representation_check(const DirectSystem& system, const PlonkaSum& sum,
                                   const Booleanisation& booleanisation, const State& state) {
  const Measure mu = quotient_measure(system, state);
  for (std::uint32_t raw = 0; raw < sum.raw.size; ++raw) {
    // the finite integral: the μ-mass of the quotient atoms below π(b)
    Rat mass = 0;
    for (int a = 0; a < booleanisation.quotient.atom_count(); ++a)
      if (booleanisation.quotient.leq(booleanisation.quotient.atom(a), booleanisation.pi[raw]))
        mass += mu.weight(a);
    if (mass != state_value(system, state, sum.labels[raw])) return false;
  }
  return true;
}

std::string AltStateCheck::describe() const {
  if (satisfies) return "satisfies the alternative state condition";
  return "fails (" + reason + ") at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

AltStateCheck check_alt_state(const RawAlgebra& algebra, const Decomposition& decomposition,
                              std::span<const Rat> values) {
  (void)decomposition;
  AltStateCheck bad;
  bad.satisfies = false;
  if (values.size() != algebra.size) {
    bad.reason = "arity";
    return bad;
  }
  if (values[algebra.one] != 1) {
    bad.reason = "unit";
    bad.a = bad.b = algebra.one;
    return bad;
  }
  for (std::uint32_t a = 0; a < algebra.size; ++a)
    for (std::uint32_t b = 0; b < algebra.size; ++b)
      if (algebra.meet(a, b) == algebra.zero &&
          values[algebra.join(a, b)] != values[a] + values[b]) {
        bad.reason = "additivity";
        bad.a = a, bad.b = b;
        return bad;
      }
  return {};
}

namespace {

Rat random_unit_rational(std::mt19937_64& rng) {
  const int den = static_cast<int>(rng() % 20) + 2;
  const int num = static_cast<int>(rng() % static_cast<std::uint64_t>(den - 1)) + 1;
  return Rat(num, den);  // strictly inside (0,1)
}

std::vector<Rat> random_weights(std::mt19937_64& rng, int atoms) {
  std::vector<Rat> raw(static_cast<std::size_t>(atoms));
  Rat total = 0;
  for (Rat& w : raw) {
    w = Rat(static_cast<int>(rng() % 7), 1);
    total += w;
  }
  if (total == 0) {
    raw[0] = 1;
    total = 1;
  }
  for (Rat& w : raw) w /= total;
  return raw;
}

}  // namespace

AltEquivalenceCertificate alt_state_equivalence(const DirectSystem& system, const PlonkaSum& sum,
                                                std::uint64_t seed) {
  const int bottom = system.index().least();
  if (system.component(bottom).is_trivial())
    throw TrivialComponent("the bottom component carries no measure");
  const Decomposition dec = decompose(sum.raw);
  std::mt19937_64 rng(seed);
  AltEquivalenceCertificate cert;

  auto constant_extension = [&](const Measure& m, const Rat& alpha) {
    std::vector<Rat> values(sum.raw.size, alpha);
    for (Elem x = 0; x < system.component(bottom).size(); ++x)
      values[sum.id_of({bottom, x})] = m.value(x);
    return values;
  };
  auto bottom_restricts_to_measure = [&](std::span<const Rat> values) {
    const BooleanAlgebra& algebra = system.component(bottom);
    std::vector<Rat> weights;
    for (int a = 0; a < algebra.atom_count(); ++a)
      weights.push_back(values[sum.id_of({bottom, algebra.atom(a)})]);
    if (!measure_check(algebra, weights).ok()) return false;
    const Measure m(algebra, weights);
    for (Elem x = 0; x < algebra.size(); ++x)
      if (m.value(x) != values[sum.id_of({bottom, x})]) return false;
    return true;
  };

  // (⇐) measures on the bottom component extended by a constant
  std::vector<Measure> bottom_measures;
  bottom_measures.push_back(Measure::uniform(system.component(bottom)));
  for (int a = 0; a < system.component(bottom).atom_count(); ++a)
    bottom_measures.push_back(Measure::dirac(system.component(bottom), a));
  for (int r = 0; r < 4; ++r)
    bottom_measures.emplace_back(system.component(bottom),
                                 random_weights(rng, system.component(bottom).atom_count()));
  const std::vector<Rat> alphas = {Rat(1, 2), Rat(37, 100), random_unit_rational(rng)};
  for (const Measure& m : bottom_measures)
    for (const Rat& alpha : alphas) {
      ++cert.extensions_tested;
      const auto values = constant_extension(m, alpha);
      if (!check_alt_state(sum.raw, dec, values).satisfies ||
          !bottom_restricts_to_measure(values))
        ++cert.extension_failures;
    }

  // (⇒) a finite candidate family: genuine states, random class slices, and
  // random constant-off-bottom tables
  std::vector<std::vector<Rat>> candidates;
  if (!system.has_trivial_component()) {
    for (const State& vertex : state_space_vertices(system))
      candidates.push_back(state_table(system, sum, vertex));
    for (int r = 0; r < 4; ++r) {
      State s{Measure(system.component(system.index().top()),
                      random_weights(rng, system.component(system.index().top()).atom_count()))};
      candidates.push_back(state_table(system, sum, s));
    }
  }
  for (const Measure& m : bottom_measures)
    candidates.push_back(constant_extension(m, random_unit_rational(rng)));
  for (const auto& values : candidates) {
    ++cert.candidates_tested;
    if (!check_alt_state(sum.raw, dec, values).satisfies) continue;
    ++cert.candidates_satisfying;
    if (!bottom_restricts_to_measure(values)) ++cert.restriction_failures;
  }
  return cert;
}

std::vector<State> state_space_vertices(const DirectSystem& system) {
  if (system.has_trivial_component())
    throw TrivialComponent("no states to enumerate: a component is trivial");
  const BooleanAlgebra& top = system.component(system.index().top());
  std::vector<State> vertices;
  vertices.reserve(static_cast<std::size_t>(top.atom_count()));
  for (int a = 0; a < top.atom_count(); ++a)
    vertices.push_back(State{Measure::dirac(top, a)});
  return vertices;
}

}  // namespace plonka
