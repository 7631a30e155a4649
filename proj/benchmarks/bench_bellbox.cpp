#include <benchmark/benchmark.h>

#include "bellbox/bell.hpp"
#include "bellbox/marbles.hpp"
#include "bellbox/operators.hpp"
#include "bellbox/quantum.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

void BM_QuantumProbabilities(benchmark::State& state) {
  double alpha = 0.0;
  for (auto _ : state) {
    alpha += 1e-6;
    benchmark::DoNotOptimize(bellbox::quantum_probabilities(alpha, kPi / 8));
  }
}
BENCHMARK(BM_QuantumProbabilities);

void BM_OperatorProbabilities(benchmark::State& state) {
  double alpha = 0.0;
  for (auto _ : state) {
    alpha += 1e-6;
    const auto op = bellbox::qbb_operator(alpha, kPi / 8);
    benchmark::DoNotOptimize(bellbox::operator_probabilities(op));
  }
}
BENCHMARK(BM_OperatorProbabilities);

void BM_GramDeterminant(benchmark::State& state) {
  double alpha = 0.0;
  for (auto _ : state) {
    alpha += 1e-6;
    benchmark::DoNotOptimize(bellbox::gram_determinant(alpha, kPi / 8));
  }
}
BENCHMARK(BM_GramDeterminant);

void BM_RunBattery(benchmark::State& state) {
  const auto battery = bellbox::standard_battery();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bellbox::run_battery(bellbox::Model::Quantum, battery));
  }
}
BENCHMARK(BM_RunBattery);

void BM_MarbleTrial(benchmark::State& state) {
  const bellbox::MarbleProtocol protocol{0.0, kPi / 8,
                                         bellbox::MarbleMode::Exact, 20, false};
  std::uint64_t index = 0;
  for (auto _ : state) {
    auto rng = bellbox::trial_stream(42, index++);
    benchmark::DoNotOptimize(bellbox::run_trial(protocol, rng));
  }
}
BENCHMARK(BM_MarbleTrial);

void BM_Estimate(benchmark::State& state) {
  const bellbox::MarbleProtocol protocol{0.0, kPi / 8,
                                         bellbox::MarbleMode::Exact, 20, false};
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bellbox::estimate(protocol, trials, 42, 1));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          state.range(0));
}
BENCHMARK(BM_Estimate)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
