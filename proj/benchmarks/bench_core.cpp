// Copyright 2026 The pptmetro Authors
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

#include "pptmetro/linalg.hpp"
#include "pptmetro/metrology.hpp"
#include "pptmetro/optimize.hpp"
#include "pptmetro/rng.hpp"
#include "pptmetro/states.hpp"

namespace {

using namespace pptmetro;

void BM_HermitianEig(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(42);
  const ComplexMatrix m = random_hermitian(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eig(m));
  }
}
BENCHMARK(BM_HermitianEig)->Arg(16)->Arg(36)->Arg(64)->Arg(144)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Kron(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  const ComplexMatrix a = random_hermitian(n, rng);
  const ComplexMatrix b = random_hermitian(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kron(a, b));
  }
}
BENCHMARK(BM_Kron)->Arg(8)->Arg(16)->Arg(32);

void BM_BuildF1(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_rho_f1({d, UnitaryKind::Fourier}));
  }
}
BENCHMARK(BM_BuildF1)->Arg(2)->Arg(4)->Arg(8);

void BM_Qfi(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const StateBundle bundle = build_rho_f1({d, UnitaryKind::Fourier});
  const ComplexMatrix h = hamiltonian_h(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfi(bundle.rho, h));
  }
}
BENCHMARK(BM_Qfi)->Arg(2)->Arg(3)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ProjectDensityPpt(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const SubsystemDims dims = SubsystemDims::key_shield(d);
  Rng rng(11);
  const ComplexMatrix start = random_density_matrix(4 * d * d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_density_ppt(start, dims));
  }
}
BENCHMARK(BM_ProjectDensityPpt)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Robustness(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const StateBundle bundle = build_rho_f1({d, UnitaryKind::Fourier});
  const ComplexMatrix h = hamiltonian_h(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(robustness_numeric(bundle.rho, h, 8.0));
  }
}
BENCHMARK(BM_Robustness)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
