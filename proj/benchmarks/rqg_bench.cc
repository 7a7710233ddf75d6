// Copyright 2026 The RQG Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "rqg/games.h"
#include "rqg/hilbert.h"
#include "rqg/induce.h"
#include "rqg/nash.h"

namespace {

rqg::QuantumState RandomState(std::mt19937_64& rng, int dp, int dr) {
  std::normal_distribution<double> normal;
  rqg::AmplitudeMatrix amps(dp, dr);
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    amps(i) = {normal(rng), normal(rng)};
  }
  return rqg::StateFromAmplitudes(amps, true);
}

rqg::BimatrixGame RandomGame(std::mt19937_64& rng, int m, int n) {
  std::uniform_real_distribution<double> u(0.0, 100.0);
  rqg::RealMatrix p(m, n), r(m, n);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    p(i) = u(rng);
    r(i) = u(rng);
  }
  return rqg::BimatrixGame(p, r);
}

void BM_InduceUltimatum2x2(benchmark::State& state) {
  const rqg::QuantumState s =
      rqg::BellLike(std::numbers::pi / 4, {1, 1}, {0, 0});
  const rqg::PayoffTable table = rqg::Ultimatum2x2(99, 50, 1);
  const rqg::MoveSet moves = rqg::FlipIdentityMoveSet2();
  for (auto _ : state) {
    benchmark::DoNotOptimize(rqg::InduceGame(s, table, moves, moves));
  }
}
BENCHMARK(BM_InduceUltimatum2x2);

// n offers, cyclic proposer moves: O(n^2) work per induced game.
void BM_InduceManyOffers(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  rqg::UltimatumParams params{10 * n + 10, {}};
  for (int i = 1; i <= n; ++i) params.offers.push_back(5 * i);
  const rqg::PayoffTable table = rqg::UltimatumGeneral(params);
  const rqg::QuantumState s = RandomState(rng, n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rqg::InduceGame(s, table));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_InduceManyOffers)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_SupportEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const rqg::BimatrixGame g = RandomGame(rng, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rqg::SupportEnumeration(g));
  }
}
BENCHMARK(BM_SupportEnumeration)->DenseRange(2, 8, 2);

void BM_GridOracle(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const rqg::BimatrixGame g = RandomGame(rng, 2, 2);
  const int resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rqg::GridOracle(g, resolution));
  }
}
BENCHMARK(BM_GridOracle)->Arg(16)->Arg(64)->Arg(256);

void BM_SchmidtRank(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(4);
  const rqg::QuantumState s = RandomState(rng, d, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rqg::SchmidtRank(s));
  }
}
BENCHMARK(BM_SchmidtRank)->Arg(2)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
