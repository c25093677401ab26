// Copyright 2026 The lindbrand Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Micro-benchmarks for the hot paths: ensemble sampling, the two rate
// evaluations, purity propagation, and the closed-form distribution.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "lindbrand/concentration.hpp"
#include "lindbrand/decoherence.hpp"
#include "lindbrand/ensembles.hpp"
#include "lindbrand/lindblad.hpp"
#include "lindbrand/rng.hpp"
#include "lindbrand/states.hpp"

namespace {

using namespace lindbrand;

constexpr std::uint64_t kSeed = 20260814;

void BM_SampleGue(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  RandomStream stream(SeedSpec{kSeed, 1});
  const EnsembleSpec spec{EnsembleKind::unitary, dim, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample(spec, stream));
  }
}
BENCHMARK(BM_SampleGue)->Arg(8)->Arg(32)->Arg(128);

void BM_SampleGinue(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  RandomStream stream(SeedSpec{kSeed, 2});
  const EnsembleSpec spec{EnsembleKind::ginibre_complex, dim, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample(spec, stream));
  }
}
BENCHMARK(BM_SampleGinue)->Arg(8)->Arg(32)->Arg(128);

void BM_SampleHaarState(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  RandomStream stream(SeedSpec{kSeed, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_haar_pure_state(dim, stream));
  }
}
BENCHMARK(BM_SampleHaarState)->Arg(8)->Arg(32)->Arg(128);

// General-purpose rate: builds the density matrix products, O(N^3).
void BM_RateGeneral(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  RandomStream stream(SeedSpec{kSeed, 4});
  LindbladModel model;
  model.dim = dim;
  model.jump_operators = {sample(EnsembleSpec{EnsembleKind::unitary, dim, 1.0}, stream)};
  model.damping_rates = {1.0};
  const DensityMatrix rho =
      purity_family(sample_haar_pure_state(dim, stream), 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decoherence_rate(model, rho));
  }
}
BENCHMARK(BM_RateGeneral)->Arg(8)->Arg(32)->Arg(128);

// Family fast path: works on the state vector alone, O(N^2).
void BM_RateFamily(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  RandomStream stream(SeedSpec{kSeed, 5});
  const ComplexMatrix jump =
      sample(EnsembleSpec{EnsembleKind::unitary, dim, 1.0}, stream);
  const ComplexVector psi = sample_haar_pure_state(dim, stream);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decoherence_rate_family(jump, 1.0, psi, 0.7));
  }
}
BENCHMARK(BM_RateFamily)->Arg(8)->Arg(32)->Arg(128);

void BM_PurityTrajectory(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  RandomStream stream(SeedSpec{kSeed, 6});
  LindbladModel model;
  model.dim = dim;
  model.jump_operators = {sample(EnsembleSpec{EnsembleKind::unitary, dim, 1.0}, stream)};
  model.damping_rates = {1.0};
  const DensityMatrix rho0 = pure_state(sample_haar_pure_state(dim, stream));
  const double rate = decoherence_rate(model, rho0);
  std::vector<double> times(16);
  for (std::size_t i = 0; i < times.size(); ++i) {
    times[i] = 3.0 / rate * static_cast<double>(i) / (times.size() - 1.0);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(purity_trajectory(model, rho0, times));
  }
}
BENCHMARK(BM_PurityTrajectory)->Arg(4)->Arg(8)->Arg(16);

void BM_McAverageRate(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  std::uint64_t stream_index = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mc_average_rate(EnsembleSpec{EnsembleKind::unitary, dim, 1.0},
                        PurityPolicy::pure(), 100, 1.0,
                        SeedSpec{kSeed, stream_index++}, 1));
  }
}
BENCHMARK(BM_McAverageRate)->Arg(8)->Arg(32);

void BM_DistributionCdf(benchmark::State& state) {
  const RateDistributionModel model =
      make_rate_distribution(RateFamily::wigner_dyson, static_cast<int>(state.range(0)),
                             1.0);
  double x = 0.0;
  const double top = model.upper_bound();
  for (auto _ : state) {
    x += 0.1;
    if (x > top) x = 0.0;
    benchmark::DoNotOptimize(cdf(model, x));
  }
}
BENCHMARK(BM_DistributionCdf)->Arg(8)->Arg(64);

void BM_DistributionMoment(benchmark::State& state) {
  const RateDistributionModel model =
      make_rate_distribution(RateFamily::wigner_dyson, static_cast<int>(state.range(0)),
                             1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(moment(model, 4));
  }
}
BENCHMARK(BM_DistributionMoment)->Arg(8)->Arg(64);

void BM_AnalyticRateSamples(benchmark::State& state) {
  const RateDistributionModel model =
      make_rate_distribution(RateFamily::wigner_dyson, 30, 1.0);
  std::uint64_t stream_index = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        analytic_rate_samples(model, 1000, SeedSpec{kSeed, stream_index++}));
  }
}
BENCHMARK(BM_AnalyticRateSamples);

}  // namespace
