/*
   Copyright 2026 The charcong Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <random>

#include <benchmark/benchmark.h>

#include "charcong/dirichlet.hpp"
#include "charcong/kernel_oracle.hpp"
#include "charcong/sweep.hpp"
#include "charcong/triplet.hpp"

namespace charcong {
namespace {

Element random_element(const Ring& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<Coeff> dist(0, ring.modulus() - 1);
  std::vector<Coeff> c(static_cast<std::size_t>(ring.degree()));
  for (auto& x : c) x = dist(rng);
  return Element(std::move(c));
}

// Arg: root order e, modulus 16.
void BM_RingMul(benchmark::State& state) {
  const Ring ring(static_cast<int>(state.range(0)), 16);
  std::mt19937_64 rng(1);
  const auto a = random_element(ring, rng);
  const auto b = random_element(ring, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ring.mul(a, b));
}
BENCHMARK(BM_RingMul)->Arg(4)->Arg(6)->Arg(16)->Arg(18);

void BM_IsUnit(benchmark::State& state) {
  const Ring ring(static_cast<int>(state.range(0)), 15);
  std::mt19937_64 rng(2);
  std::vector<Element> pool;
  for (int k = 0; k < 4096; ++k) pool.push_back(random_element(ring, rng));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ring.is_unit(pool[k++ % pool.size()]));
}
BENCHMARK(BM_IsUnit)->Arg(4)->Arg(16)->Arg(18);

void BM_CharacterMatrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(character_matrix(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CharacterMatrix)->Arg(5)->Arg(12)->Arg(19);

void BM_Normalize(benchmark::State& state) {
  const auto cm = character_matrix(static_cast<int>(state.range(0)));
  const Coeff M = state.range(1);
  const Ring ring = cm.ring.with_modulus(M);
  const Matrix b = cm.reduced(M);
  for (auto _ : state) {
    Triplet t(ring, b);
    benchmark::DoNotOptimize(t.normalize());
  }
}
BENCHMARK(BM_Normalize)->Args({5, 16})->Args({7, 15})->Args({19, 20})->Args({20, 16});

void BM_ScalarLiftKernel(benchmark::State& state) {
  const auto cm = character_matrix(static_cast<int>(state.range(0)));
  const Coeff M = state.range(1);
  const Ring ring = cm.ring.with_modulus(M);
  const Matrix b = cm.reduced(M);
  for (auto _ : state) benchmark::DoNotOptimize(scalar_lift_kernel(ring, b));
}
BENCHMARK(BM_ScalarLiftKernel)->Args({5, 16})->Args({7, 15})->Args({16, 8})->Args({19, 20});

void BM_BruteForceKernel(benchmark::State& state) {
  const auto cm = character_matrix(static_cast<int>(state.range(0)));
  const Coeff M = state.range(1);
  const Ring ring = cm.ring.with_modulus(M);
  const Matrix b = cm.reduced(M);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_kernel(ring, b, 1u << 20));
}
BENCHMARK(BM_BruteForceKernel)->Args({5, 2})->Args({8, 4})->Args({12, 5})->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  const auto policy = state.range(0) == 0 ? PivotPolicy::any_unit : PivotPolicy::rational_units;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(IntRange{2, 20}, IntRange{2, 20}, {policy, 1, std::nullopt}));
  }
}
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace charcong

BENCHMARK_MAIN();
