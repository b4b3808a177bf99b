#include <benchmark/benchmark.h>

#include "plonka/booleanisation.hpp"
#include "plonka/counting.hpp"
#include "plonka/metric.hpp"
#include "plonka/states.hpp"
#include "plonka/system.hpp"

using namespace plonka;

namespace {

/// Chain of `length` components with 1..3 atoms, lumping inclusions.
DirectSystem chain_of(int length) {
  std::vector<int> table(static_cast<std::size_t>(length) * static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i)
    for (int j = 0; j < length; ++j)
      table[static_cast<std::size_t>(i) * static_cast<std::size_t>(length) +
            static_cast<std::size_t>(j)] = std::max(i, j);
  SemilatticeCheck index = validate_semilattice(length, table);
  std::vector<BooleanAlgebra> components;
  std::vector<HomSpec> homs;
  for (int i = 0; i < length; ++i) components.emplace_back(std::min(3, i + 1));
  for (int i = 0; i < length; ++i)
    for (int j = i + 1; j < length; ++j)
      homs.push_back({i, j, chain_inclusion(std::min(3, i + 1), std::min(3, j + 1))});
  return *validate_system(*index.lattice, std::move(components), std::move(homs)).system;
}

void BM_plonka_sum(benchmark::State& state) {
  const DirectSystem system = chain_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    PlonkaSum sum = plonka_sum(system);
    benchmark::DoNotOptimize(sum.raw.join_table.data());
  }
}
BENCHMARK(BM_plonka_sum)->Arg(2)->Arg(4)->Arg(6);

void BM_check_ibsl(benchmark::State& state) {
  const PlonkaSum sum = plonka_sum(chain_of(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    IbslCheck check = check_ibsl(sum.raw);
    benchmark::DoNotOptimize(check.pass);
  }
}
BENCHMARK(BM_check_ibsl)->Arg(2)->Arg(4)->Arg(6);

void BM_decompose(benchmark::State& state) {
  const PlonkaSum sum = plonka_sum(chain_of(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    Decomposition dec = decompose(sum.raw);
    benchmark::DoNotOptimize(dec.labeling.data());
  }
}
BENCHMARK(BM_decompose)->Arg(2)->Arg(4);

void BM_pseudometric(benchmark::State& state) {
  const DirectSystem system = chain_of(static_cast<int>(state.range(0)));
  const PlonkaSum sum = plonka_sum(system);
  const State s = uniform_state(system);
  for (auto _ : state) {
    PseudometricSpace space = pseudometric(system, sum, s);
    benchmark::DoNotOptimize(space.distances.data());
  }
}
BENCHMARK(BM_pseudometric)->Arg(2)->Arg(4);

void BM_forests(benchmark::State& state) {
  for (auto _ : state) {
    Int value = forests(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_forests)->Arg(8)->Arg(32);

void BM_forest_oracle(benchmark::State& state) {
  for (auto _ : state) {
    Int value = forest_oracle(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_forest_oracle)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
