#include <benchmark/benchmark.h>

#include <random>

#include "phase_amp/amplifier.hpp"
#include "phase_amp/fullsim.hpp"
#include "phase_amp/graphs.hpp"

using namespace phase_amp;

static void BM_BuildHistogramGrid(benchmark::State& state) {
  const auto g = make_grid(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(build_histogram(g, ObjectiveKind::kMaxCut));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.assignment_count()));
}
BENCHMARK(BM_BuildHistogramGrid)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SuccessRun(benchmark::State& state) {
  const auto h = std::make_shared<const PhaseHistogram>(build_histogram(make_grid(4, 4), ObjectiveKind::kMaxCut));
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(success_run(h, m).probability);
}
BENCHMARK(BM_SuccessRun)->Arg(10)->Arg(100)->Arg(1000);

static void BM_ClosedForm(benchmark::State& state) {
  const auto h = build_histogram(make_grid(4, 4), ObjectiveKind::kMaxCut);
  for (auto _ : state) benchmark::DoNotOptimize(sequence_probability(h, 7, 12));
}
BENCHMARK(BM_ClosedForm);

static void BM_FullSimulation(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(0.0, 3.14159);
  std::vector<double> phases(static_cast<std::size_t>(state.range(0)));
  for (auto& p : phases) p = angle(rng);
  const auto y = MeasurementSequence::parse("110101");
  for (auto _ : state) benchmark::DoNotOptimize(fullsim::run_sequence_fullsim(phases, y).probability);
}
BENCHMARK(BM_FullSimulation)->Arg(31)->Arg(255)->Arg(1023);

static void BM_BruteForceOptima(benchmark::State& state) {
  const auto g = make_star_ring(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_optima(g, ObjectiveKind::kMaxCut).best_value);
}
BENCHMARK(BM_BruteForceOptima)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
