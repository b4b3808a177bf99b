#include "plonka/metric.hpp"

#include <algorithm>

namespace plonka {

namespace {

PseudometricSpace finish_space(std::size_t n, std::vector<Rat> distances) {
  PseudometricSpace space;
  space.size = n;
  space.distances = std::move(distances);
  auto d = [&space, n](std::size_t a, std::size_t b) -> const Rat& {
    return space.distances[a * n + b];
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (d(a, a) != 0) throw InternalInconsistency("d(x,x) != 0");
    for (std::size_t b = 0; b < n; ++b) {
      if (d(a, b) < 0) throw InternalInconsistency("negative distance");
      if (d(a, b) != d(b, a)) throw InternalInconsistency("asymmetric distance");
      for (std::size_t c = 0; c < n; ++c)
        if (d(a, c) > d(a, b) + d(b, c))
          throw InternalInconsistency("triangle inequality fails");
    }
  }
  space.class_of.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    if (space.class_of[a] != -1) continue;
    const int id = static_cast<int>(space.zero_classes.size());
    space.zero_classes.emplace_back();
    for (std::size_t b = a; b < n; ++b)
      if (d(a, b) == 0) {
        space.class_of[b] = id;
        space.zero_classes.back().push_back(static_cast<std::uint32_t>(b));
      }
  }
  return space;
}

}  // namespace

PseudometricSpace pseudometric(const DirectSystem& system, const PlonkaSum& sum,
                               const State& state) {
  const std::size_t n = sum.raw.size;
  std::vector<Rat> distances(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const PlonkaElement args[2] = {sum.labels[a], sum.labels[b]};
      const Rat value = state_value(system, state, plonka_eval(system, BoolOp::Symdiff, args));
      distances[a * n + b] = value;
      distances[b * n + a] = value;
    }
  return finish_space(n, std::move(distances));
}

PseudometricSpace pseudometric_from_table(const PlonkaSum& sum, std::span<const Rat> values) {
  const std::size_t n = sum.raw.size;
  if (values.size() != n) throw MalformedElement("one value per sum element required");
  const RawAlgebra& r = sum.raw;
  std::vector<Rat> distances(n * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      distances[static_cast<std::size_t>(a) * n + b] =
          values[r.join(r.meet(a, r.comp(b)), r.meet(r.comp(a), b))];
  return finish_space(n, std::move(distances));
}

PseudometricSpace quotient_pseudometric(const Booleanisation& booleanisation, const Measure& m) {
  if (m.algebra() != booleanisation.quotient)
    throw InvalidMeasure("measure must live on the Booleanisation");
  const std::size_t n = booleanisation.quotient.size();
  std::vector<Rat> distances(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      distances[static_cast<std::size_t>(a) * n + b] = measure_distance(m, a, b);
  return finish_space(n, std::move(distances));
}

bool is_metric(const PseudometricSpace& space) {
  return std::ranges::all_of(space.zero_classes,
                             [](const auto& cls) { return cls.size() == 1; });
}

MetricCertificate is_metric_certificate(const PseudometricSpace& space,
                                        const DirectSystem& system,
                                        const Booleanisation& booleanisation, const State& state) {
  MetricCertificate cert;
  cert.metric = is_metric(space);
  cert.quotient_fibers_singleton = std::ranges::all_of(
      booleanisation.classes, [](const auto& fiber) { return fiber.size() == 1; });
  cert.state_faithful = is_faithful(system, state);
  cert.criterion_matches = cert.metric == cert.quotient_fibers_singleton;
  if (cert.state_faithful && !cert.criterion_matches)
    throw InternalInconsistency("metric criterion fails under a faithful state");
  return cert;
}

KolmogorovResult kolmogorov_quotient(const PseudometricSpace& space, const DirectSystem& system,
                                     const Booleanisation& booleanisation, const State& state) {
  KolmogorovResult result;
  result.classes = space.zero_classes;
  result.hypotheses_met = is_injective_system(system) && is_faithful(system, state);
  // compare with the ∼-classes: same partition, possibly enumerated in a
  // different order
  std::vector<std::vector<std::uint32_t>> fibers = booleanisation.classes;
  auto sorted = [](std::vector<std::vector<std::uint32_t>> partition) {
    std::ranges::sort(partition);
    return partition;
  };
  result.matches_booleanisation = sorted(result.classes) == sorted(fibers);
  if (result.hypotheses_met && !result.matches_booleanisation)
    throw InternalInconsistency(
        "Kolmogorov classes differ from ∼-classes under injective + faithful hypotheses");
  return result;
}

}  // namespace plonka
