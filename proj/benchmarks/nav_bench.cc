// Copyright 2026 The streetnav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <memory>
#include <random>

#include <benchmark/benchmark.h>

#include "streetnav/announcer.h"
#include "streetnav/nav_graph.h"
#include "streetnav/synthetic.h"
#include "streetnav/world.h"

namespace streetnav {
namespace {

std::shared_ptr<const World> City(int side) {
  synthetic::LatticeCityOptions o;
  o.rows = side;
  o.cols = side;
  o.places = side * 5;
  return *World::Create(synthetic::MakeLatticeCity(o));
}

const Panorama& RandomPano(const World& w, std::mt19937_64& rng) {
  const auto& panos = w.fixture().panos;
  return panos[rng() % panos.size()];
}

void BM_BuildEgocentricGraph(benchmark::State& state) {
  auto world = City(static_cast<int>(state.range(0)));
  const NavConfig cfg;
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    auto g = BuildEgocentricGraph(world->services(), RandomPano(*world, rng), cfg);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_BuildEgocentricGraph)->Arg(20)->Arg(100);

void BM_FindJumpTarget(benchmark::State& state) {
  auto world = City(static_cast<int>(state.range(0)));
  const NavConfig cfg;
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    auto t = FindJumpTarget(world->services(), RandomPano(*world, rng),
                            Heading::FromOctant(rng() % 8), cfg);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_FindJumpTarget)->Arg(20)->Arg(100);

void BM_BuildLocalContext(benchmark::State& state) {
  auto world = City(100);
  const NavConfig cfg;
  std::mt19937_64 rng(3);
  for (auto _ : state) {
    auto ctx = BuildLocalContext(world->services(), RandomPano(*world, rng),
                                 Heading::FromOctant(rng() % 8), cfg);
    benchmark::DoNotOptimize(ctx);
  }
}
BENCHMARK(BM_BuildLocalContext);

void BM_WorldCreate(benchmark::State& state) {
  synthetic::LatticeCityOptions o;
  o.rows = static_cast<int>(state.range(0));
  o.cols = o.rows;
  const WorldFixture f = synthetic::MakeLatticeCity(o);
  for (auto _ : state) {
    auto w = World::Create(f);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_WorldCreate)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace streetnav

BENCHMARK_MAIN();
