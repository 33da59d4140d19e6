// Copyright 2026 The BitDepth Authors. All Rights Reserved.
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

#include <random>

#include "benchmark/benchmark.h"
#include "bitdepth/gaussian.h"
#include "bitdepth/kernels.h"
#include "bitdepth/metrics.h"
#include "bitdepth/reference_kernels.h"

namespace bitdepth {
namespace {

constexpr uint32_t kMax10 = 1023;

Plane RandomPlane(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Plane p(static_cast<size_t>(n) * n);
  for (auto& v : p) v = static_cast<uint16_t>(rng() % (kMax10 + 1));
  return p;
}

ImageF RandomImage(int n, uint64_t seed) {
  return kernels::ToImage(RandomPlane(n, seed), n, n);
}

void BM_RescaleParallel(benchmark::State& state) {
  const Plane p = RandomPlane(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::RescalePlane(p, kMax10, 3));
  }
  state.SetItemsProcessed(state.iterations() * p.size());
}

void BM_RescaleSerial(benchmark::State& state) {
  const Plane p = RandomPlane(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::RescalePlane(p, kMax10, 3));
  }
  state.SetItemsProcessed(state.iterations() * p.size());
}

void BM_GaussianSeparable(benchmark::State& state) {
  const ImageF img = RandomImage(state.range(0), 2);
  const GaussianKernel k(1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::ConvolveSeparable(img, k.taps()));
  }
  state.SetItemsProcessed(state.iterations() * img.size());
}

void BM_Gaussian2DSerial(benchmark::State& state) {
  const ImageF img = RandomImage(state.range(0), 2);
  const GaussianKernel k(1.5);
  const std::vector<double> w = k.Weights2D();
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::Convolve2D(img, w, k.size()));
  }
  state.SetItemsProcessed(state.iterations() * img.size());
}

void BM_SsimParallel(benchmark::State& state) {
  const ImageF x = RandomImage(state.range(0), 3);
  const ImageF y = RandomImage(state.range(0), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(metrics::SsimPlane(x, y, kMax10));
  }
  state.SetItemsProcessed(state.iterations() * x.size());
}

void BM_SsimSerial(benchmark::State& state) {
  const ImageF x = RandomImage(state.range(0), 3);
  const ImageF y = RandomImage(state.range(0), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::SsimDirect(x, y, kMax10));
  }
  state.SetItemsProcessed(state.iterations() * x.size());
}

void BM_SseParallel(benchmark::State& state) {
  const Plane a = RandomPlane(state.range(0), 5);
  const Plane b = RandomPlane(state.range(0), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::SquaredErrorSum(a, b));
  }
  state.SetItemsProcessed(state.iterations() * a.size());
}

void BM_SseSerial(benchmark::State& state) {
  const Plane a = RandomPlane(state.range(0), 5);
  const Plane b = RandomPlane(state.range(0), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::SquaredErrorSum(a, b));
  }
  state.SetItemsProcessed(state.iterations() * a.size());
}

BENCHMARK(BM_RescaleParallel)->Arg(512)->Arg(2048);
BENCHMARK(BM_RescaleSerial)->Arg(512)->Arg(2048);
BENCHMARK(BM_GaussianSeparable)->Arg(256)->Arg(1024);
BENCHMARK(BM_Gaussian2DSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_SsimParallel)->Arg(256)->Arg(512);
BENCHMARK(BM_SsimSerial)->Arg(256)->Arg(512);
BENCHMARK(BM_SseParallel)->Arg(512)->Arg(2048);
BENCHMARK(BM_SseSerial)->Arg(512)->Arg(2048);

}  // namespace
}  // namespace bitdepth

BENCHMARK_MAIN();
