#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tmcap/capacity.hpp"
#include "tmcap/choquet.hpp"
#include "tmcap/random_sets.hpp"
#include "tmcap/representation.hpp"
#include "tmcap/slln.hpp"

namespace {

using namespace tmcap;

Frame bench_frame(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("w" + std::to_string(i));
  return Frame(std::move(labels));
}

// Dense-ish deterministic mass: every singleton plus a band of wider blocks.
MassFunction bench_mass(const Frame& frame) {
  std::mt19937_64 rng(7);
  std::map<SubsetMask, double> weights;
  double total = 0.0;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const double w = 1.0 + static_cast<double>(rng() % 8);
    weights[SubsetMask{1} << i] = w;
    total += w;
  }
  for (int block = 0; block < 16; ++block) {
    const SubsetMask set = 1 + static_cast<SubsetMask>(rng() % frame.full_mask());
    const double w = 1.0 + static_cast<double>(rng() % 8);
    weights[set] += w;
    total += w;
  }
  for (auto& [set, w] : weights) w /= total;
  return MassFunction(frame, weights);
}

RandomVariable bench_rv(const Frame& frame) {
  std::mt19937_64 rng(11);
  std::vector<double> values(frame.size());
  for (double& v : values) v = static_cast<double>(rng() % 1024) / 64.0 - 8.0;
  return RandomVariable(frame, std::move(values));
}

void BM_CapacityFromMass(benchmark::State& state) {
  const Frame frame = bench_frame(static_cast<std::size_t>(state.range(0)));
  const MassFunction mass = bench_mass(frame);
  for (auto _ : state) {
    benchmark::DoNotOptimize(capacity_from_mass(mass));
  }
}
BENCHMARK(BM_CapacityFromMass)->Arg(8)->Arg(12)->Arg(16);

void BM_MobiusFromCapacity(benchmark::State& state) {
  const Frame frame = bench_frame(static_cast<std::size_t>(state.range(0)));
  const Capacity nu = capacity_from_mass(bench_mass(frame));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mobius_from_capacity(nu));
  }
}
BENCHMARK(BM_MobiusFromCapacity)->Arg(8)->Arg(12)->Arg(16);

void BM_ChoquetIntegral(benchmark::State& state) {
  const Frame frame = bench_frame(static_cast<std::size_t>(state.range(0)));
  const Capacity nu = capacity_from_mass(bench_mass(frame));
  const RandomVariable x = bench_rv(frame);
  for (auto _ : state) {
    benchmark::DoNotOptimize(choquet_integral(x, nu));
  }
}
BENCHMARK(BM_ChoquetIntegral)->Arg(8)->Arg(12)->Arg(16);

void BM_TotalMonotonicityFastPath(benchmark::State& state) {
  const Frame frame = bench_frame(static_cast<std::size_t>(state.range(0)));
  const Capacity nu = capacity_from_mass(bench_mass(frame));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_total_monotonicity(nu, 3));
  }
}
BENCHMARK(BM_TotalMonotonicityFastPath)->Arg(8)->Arg(12);

void BM_ExhaustiveC5(benchmark::State& state) {
  const Frame frame = bench_frame(3);
  const Capacity nu = capacity_from_mass(bench_mass(frame));
  TotalMonotonicityOptions options;
  options.force_exhaustive = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_total_monotonicity(nu, static_cast<int>(state.range(0)), options));
  }
}
BENCHMARK(BM_ExhaustiveC5)->Arg(3)->Arg(5);

void BM_PairwiseIndependenceVerify(benchmark::State& state) {
  const Frame frame = bench_frame(3);
  const MassFunction mass = bench_mass(frame);
  const ProductLayout layout = product_layout(frame, frame);
  const MassFunction joint = product_mass(mass, mass);
  const RandomVariable x = bench_rv(frame);
  const RandomVariable x1 = lift_first(layout, x);
  const RandomVariable x2 = lift_second(layout, x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_pairwise_independence(joint, x1, x2));
  }
}
BENCHMARK(BM_PairwiseIndependenceVerify);

void BM_SllnSteps(benchmark::State& state) {
  const Frame frame = bench_frame(4);
  ExperimentConfig config{bench_mass(frame),
                          bench_rv(frame),
                          static_cast<std::uint64_t>(state.range(0)),
                          1,
                          99,
                          0.1,
                          std::nullopt,
                          0,
                          100'000'000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_slln_experiment(config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SllnSteps)->Arg(1 << 14)->Arg(1 << 18);

void BM_MinkowskiAverage(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<RealCompactSet> sets;
  for (int j = 0; j < 12; ++j) {
    std::vector<double> pts;
    for (int p = 0; p < 3; ++p) pts.push_back(static_cast<double>(rng() % 512) / 64.0);
    sets.push_back(RealCompactSet::from_points(pts));
  }
  for (auto _ : state) {
    RealCompactSet sum = sets[0];
    for (std::size_t j = 1; j < sets.size(); ++j) sum = minkowski_sum(sum, sets[j]);
    benchmark::DoNotOptimize(scale_set(sum, 1.0 / 12.0));
  }
}
BENCHMARK(BM_MinkowskiAverage);

}  // namespace

BENCHMARK_MAIN();
