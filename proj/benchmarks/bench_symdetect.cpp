// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#include <benchmark/benchmark.h>

#include "tilesym/lattice.hpp"
#include "tilesym/motif.hpp"
#include "tilesym/symdetect.hpp"

namespace {

void BM_DetectRandomRaster(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const tilesym::PeriodicRaster raster{tilesym::RandomMotif(m, 4, 1)};
  for (auto _ : state) benchmark::DoNotOptimize(tilesym::DetectSymmetries(raster, m));
}
BENCHMARK(BM_DetectRandomRaster)->RangeMultiplier(2)->Range(8, 64);

void BM_DetectExtractedBlock(benchmark::State& state) {
  const tilesym::MotifGrid seed = tilesym::RandomMotif(4, 4, 2);
  const tilesym::TileClass c = tilesym::TileClass::General2(1, static_cast<int64_t>(state.range(0)));
  const int64_t res = tilesym::MinimumResolution(c, seed.size());
  const tilesym::PeriodicRaster block = tilesym::ExtractBlock(seed, c, res);
  for (auto _ : state) benchmark::DoNotOptimize(tilesym::DetectSymmetries(block, res));
}
BENCHMARK(BM_DetectExtractedBlock)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_GenerateCenters(benchmark::State& state) {
  const tilesym::TileClass c = tilesym::TileClass::General2(state.range(0), state.range(0) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(tilesym::GenerateCenters(c));
}
BENCHMARK(BM_GenerateCenters)->Arg(1)->Arg(5)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
