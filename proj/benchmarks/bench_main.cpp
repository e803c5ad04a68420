#include <benchmark/benchmark.h>

#include "ambig/fuzz.hpp"
#include "ambig/generators.hpp"
#include "ambig/interval.hpp"

namespace {

ambig::BasicAssignment assignment(std::size_t atoms) {
  ambig::GenConfig cfg;
  cfg.atoms = atoms;
  cfg.situations = 48;
  cfg.seed = 1;
  return ambig::gen_assignment(cfg);
}

void BM_StructureFromAssignment(benchmark::State& state) {
  auto j = assignment(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ambig::structure_from_assignment(j));
}
BENCHMARK(BM_StructureFromAssignment)->DenseRange(8, 12);

void BM_ExtractAssignment(benchmark::State& state) {
  auto s = ambig::structure_from_assignment(assignment(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ambig::extract_assignment(s));
}
BENCHMARK(BM_ExtractAssignment)->DenseRange(8, 12);

void BM_CheckUpperAxioms(benchmark::State& state) {
  auto s = ambig::structure_from_assignment(assignment(static_cast<std::size_t>(state.range(0))));
  ambig::SweepOptions opts;
  opts.samples = 100'000;
  for (auto _ : state) benchmark::DoNotOptimize(ambig::check_upper_axioms(s.upper(), opts));
}
BENCHMARK(BM_CheckUpperAxioms)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);

void BM_FuzzTrial(benchmark::State& state) {
  ambig::GenConfig cfg;
  cfg.atoms = 5;
  cfg.situations = 10;
  std::uint64_t trial = 0;
  for (auto _ : state) {
    auto inst = ambig::make_trial(cfg, trial++);
    benchmark::DoNotOptimize(ambig::run_properties(inst));
  }
}
BENCHMARK(BM_FuzzTrial)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
