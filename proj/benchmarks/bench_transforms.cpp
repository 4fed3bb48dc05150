// Copyright 2026 The octolct Authors
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

#include <complex>
#include <random>
#include <vector>

#include "octolct/generate.hpp"
#include "octolct/lct1d.hpp"
#include "octolct/olct3d.hpp"
#include "octolct/stolct.hpp"

namespace {

using namespace octolct;

const LCTParams kAxis(0.6, 1.1, -0.5, (1.0 + 1.1 * -0.5) / 0.6);

std::vector<std::complex<double>> random_line(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
  for (auto& z : out) z = {unit(rng), unit(rng)};
  return out;
}

void BM_Lct1dDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid1D xg(n, 8.0 / n);
  const Grid1D wg = xg.paired(kAxis.b);
  const auto line = random_line(n, 7);
  for (auto _ : state) {
    auto out = lct1d_direct(line, xg, wg, kAxis);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Lct1dDirect)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_Lct1dChirpFft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid1D xg(n, 8.0 / n);
  const Grid1D wg = xg.paired(kAxis.b);
  const auto line = random_line(n, 7);
  for (auto _ : state) {
    auto out = lct1d_chirp_fft(line, xg, wg, kAxis);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Lct1dChirpFft)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_OlctSeparableFast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid3 g = Grid3::cubic(n, 0.25);
  const RealField3D f = make_random(g, 11);
  const LCTTriple A = {kAxis, kAxis, kAxis};
  const Grid3 wg = paired_grid(g, A);
  for (auto _ : state) {
    auto F = olct_separable(f, wg, A, Path::kFast);
    benchmark::DoNotOptimize(F.v.data());
  }
}
BENCHMARK(BM_OlctSeparableFast)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_OlctSeparableDirectPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid3 g = Grid3::cubic(n, 0.25);
  const RealField3D f = make_random(g, 11);
  const LCTTriple A = {kAxis, kAxis, kAxis};
  const Grid3 wg = paired_grid(g, A);
  for (auto _ : state) {
    auto F = olct_separable(f, wg, A, Path::kDirect);
    benchmark::DoNotOptimize(F.v.data());
  }
}
BENCHMARK(BM_OlctSeparableDirectPath)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_StolctFast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid3 g = Grid3::cubic(n, 0.5);
  const RealField3D f = make_random(g, 13);
  const Window3D window(make_gaussian(g, 1.0));
  const LCTTriple A = {kAxis, kAxis, kAxis};
  const Grid3 wg = paired_grid(g, A);
  const Grid3 ug = make_ugrid(g, 4);
  for (auto _ : state) {
    auto G = stolct_via_olct(f, window, wg, ug, A, Path::kFast);
    benchmark::DoNotOptimize(G.v.data());
  }
}
BENCHMARK(BM_StolctFast)->Arg(9)->Arg(17)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
