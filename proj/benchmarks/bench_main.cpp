// Copyright 2026 The ecq Authors
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

#include "ecq/analytic.hpp"
#include "ecq/family3.hpp"
#include "ecq/localdata.hpp"
#include "ecq/torsion.hpp"
#include "ecq/verify.hpp"

namespace {

using namespace ecq;

void BM_TateBox(benchmark::State& state) {
  const std::vector<FamilyCurve> box = family_box(ScanBox{-20, 20, 1, 20});
  for (auto _ : state) {
    for (const FamilyCurve& f : box) benchmark::DoNotOptimize(local_data(f.curve()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(box.size()));
}
BENCHMARK(BM_TateBox)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const std::vector<FamilyCurve> box = family_box(ScanBox{-20, 20, 1, 20});
  for (auto _ : state) {
    for (const FamilyCurve& f : box) {
      for (const Integer& p : prime_divisors(f.delta())) benchmark::DoNotOptimize(classify(f, p));
    }
  }
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

void BM_MinimalModel(benchmark::State& state) {
  const WeierstrassCurve e = transform(WeierstrassCurve::from_integers(1, -1, 1, -14, 29), IsoData{Rational(1, 6), 5, 1, -7});
  for (auto _ : state) benchmark::DoNotOptimize(minimal_model(e));
}
BENCHMARK(BM_MinimalModel);

void BM_Torsion(benchmark::State& state) {
  const WeierstrassCurve e = WeierstrassCurve::from_integers(1, 0, 0, -1070, 7812);
  for (auto _ : state) benchmark::DoNotOptimize(torsion_subgroup(e));
}
BENCHMARK(BM_Torsion);

// L(E,1) for a small and the largest scan-box conductor.
void BM_LValue(benchmark::State& state) {
  const WeierstrassCurve e = state.range(0) == 0 ? WeierstrassCurve::from_integers(0, -1, 1, -10, -20)
                                                 : FamilyCurve(60, 59).curve();
  for (auto _ : state) {
    AnalyticCurve an(e);
    LOptions o;
    o.assume_even = true;
    benchmark::DoNotOptimize(an.l_value(o));
  }
}
BENCHMARK(BM_LValue)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RealPeriod(benchmark::State& state) {
  const WeierstrassCurve e = FamilyCurve(-41, 17).curve();
  for (auto _ : state) benchmark::DoNotOptimize(real_period(e));
}
BENCHMARK(BM_RealPeriod);

}  // namespace

BENCHMARK_MAIN();
