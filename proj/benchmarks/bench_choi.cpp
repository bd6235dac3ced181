// Copyright 2026 The cjkit Authors
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

#include <benchmark/benchmark.h>

#include <random>

#include "cjkit/choi.hpp"
#include "cjkit/symmetry.hpp"
#include "cjkit/transpose.hpp"

namespace {

using namespace cjkit;

ComplexMatrix random_hermitian(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = Complex(dist(rng), dist(rng));
  return Complex(0.5) * (g + g.adjoint());
}

ReferenceState bench_reference(std::size_t d, std::mt19937_64& rng) {
  ComplexMatrix h = random_hermitian(d, rng);
  ComplexMatrix rho = h * h.adjoint() + 0.2 * ComplexMatrix::identity(d);
  rho *= Complex(1.0 / rho.trace().real());
  return make_reference(DensityMatrix(std::move(rho)));
}

Channel bench_channel(std::size_t d, std::mt19937_64& rng) {
  // two-Kraus mixture of a phase rotation and a lowering operator
  std::uniform_real_distribution<double> unit(0.1, 0.9);
  ComplexMatrix diag(d, d);
  ComplexMatrix lower(d, d);
  diag(0, 0) = 1.0;
  for (std::size_t m = 1; m < d; ++m) {
    const double gamma = unit(rng);
    diag(m, m) = std::sqrt(1.0 - gamma);
    lower(m - 1, m) = std::sqrt(gamma);
  }
  return Channel(d, d, {diag, lower});
}

void BM_ChoiRoundtrip(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  Channel c = bench_channel(d, rng);
  ReferenceState r = bench_reference(d, rng);
  for (auto _ : state) {
    ChoiState s = choi_from_channel(c, r);
    Channel back = channel_from_choi(s);
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_ChoiRoundtrip)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_HermEig(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(8);
  ComplexMatrix h = random_hermitian(d, rng);
  for (auto _ : state) {
    HermitianEig eig = herm_eig(h);
    benchmark::DoNotOptimize(eig);
  }
}
BENCHMARK(BM_HermEig)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_PhaseTwirl(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(9);
  std::vector<long> weights(d);
  for (std::size_t k = 0; k < d; ++k) weights[k] = static_cast<long>(k);
  Representation rep = Representation::phase(weights);
  std::vector<Complex> uniform(d, Complex(1.0 / static_cast<double>(d)));
  ReferenceState r = make_reference(DensityMatrix(ComplexMatrix::diagonal(uniform)));
  ChoiState s = choi_from_channel(bench_channel(d, rng), r);
  for (auto _ : state) {
    ChoiState t = twirl(s, rep, rep);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_PhaseTwirl)->Arg(2)->Arg(4)->Arg(8);

void BM_Transpose(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(10);
  Channel c = bench_channel(d, rng);
  ReferenceState r = bench_reference(d, rng);
  for (auto _ : state) {
    TransposePair pair = transpose_channel(c, r);
    benchmark::DoNotOptimize(pair);
  }
}
BENCHMARK(BM_Transpose)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
