#include <benchmark/benchmark.h>

#include <random>

#include "trajkit/bench.hpp"
#include "trajkit/editdist.hpp"
#include "trajkit/frechet.hpp"
#include "trajkit/kgather.hpp"
#include "trajkit/shingles.hpp"
#include "trajkit/timewindow.hpp"

using namespace trajkit;

static void BM_DiscreteFrechet(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PolyCurve a = random_curve(n, 1);
  const PolyCurve b = random_curve(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(discrete_frechet(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DiscreteFrechet)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

static void BM_Dtw(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PolyCurve a = random_curve(n, 3);
  const PolyCurve b = random_curve(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(dtw(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dtw)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

static void BM_FrechetDecision(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PolyCurve a = random_curve(n, 5);
  const PolyCurve b = random_curve(n, 6);
  for (auto _ : state)
    benchmark::DoNotOptimize(frechet_decision(a, b, 0.25));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FrechetDecision)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

// sigma sweep at fixed size: runtime follows the valid-pair count
static void BM_TwDiscreteFrechet(benchmark::State& state) {
  const TimedTrajectory a = random_timed_trajectory(2000, 7);
  const TimedTrajectory b = random_timed_trajectory(2000, 8);
  const double sigma = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(tw_discrete_frechet(a, b, sigma));
  state.counters["valid_pairs"] = static_cast<double>(
      valid_pairs_varying_speed(a, b, sigma).count());
}
BENCHMARK(BM_TwDiscreteFrechet)->Arg(2)->Arg(10)->Arg(50)->Arg(250)->Arg(1000);

static void BM_MetricEditDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const LocationMetric metric = LocationMetric::from_coordinates(
      {{"a", {0, 0}}, {"b", {1, 0}}, {"c", {0, 1}}, {"d", {1, 1}}});
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> pick(0, 3);
  const std::vector<std::string> alphabet = {"a", "b", "c", "d"};
  SymbolTrajectory s1, s2;
  for (std::size_t i = 0; i < n; ++i) {
    s1.symbols.push_back(alphabet[pick(rng)]);
    s2.symbols.push_back(alphabet[pick(rng)]);
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(metric_edit_distance(s1, s2, metric, n));
}
BENCHMARK(BM_MetricEditDistance)->DenseRange(4, 12, 2);

static void BM_InsertionFirstEditDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const LocationMetric metric = LocationMetric::from_coordinates(
      {{"a", {0, 0}}, {"b", {1, 0}}, {"c", {0, 1}}, {"d", {1, 1}}});
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> pick(0, 3);
  const std::vector<std::string> alphabet = {"a", "b", "c", "d"};
  SymbolTrajectory s1, s2;
  for (std::size_t i = 0; i < n; ++i) {
    s1.symbols.push_back(alphabet[pick(rng)]);
    s2.symbols.push_back(alphabet[pick(rng)]);
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(insertion_first_edit_distance(s1, s2, metric));
}
BENCHMARK(BM_InsertionFirstEditDistance)->Range(16, 1024);

static void BM_JaccardDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 9);
  SymbolTrajectory s1, s2;
  for (std::size_t i = 0; i < n; ++i) {
    s1.symbols.push_back(std::to_string(pick(rng)));
    s2.symbols.push_back(std::to_string(pick(rng)));
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(jaccard_distance(s1, s2, 2));
}
BENCHMARK(BM_JaccardDistance)->Range(64, 4096);

static void BM_KGatherApprox(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<Point> pts(n);
  for (Point& p : pts) p = {coord(rng), coord(rng)};
  DistanceMatrix dm(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) dm.set(i, j, dist(pts[i], pts[j]));
  for (auto _ : state) benchmark::DoNotOptimize(kgather_approx(dm, 3));
}
BENCHMARK(BM_KGatherApprox)->Arg(32)->Arg(64)->Arg(128);
