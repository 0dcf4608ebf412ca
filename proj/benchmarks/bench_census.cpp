// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#include <benchmark/benchmark.h>

#include "tilesym/census.hpp"

namespace {

void BM_NeryCensus(benchmark::State& state) {
  const tilesym::MotifGrid motif = tilesym::NeryMotif(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tilesym::NeryCensus(motif));
}
BENCHMARK(BM_NeryCensus)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CanonicalKey(benchmark::State& state) {
  const tilesym::MotifGrid tile = tilesym::NeryMotif();
  std::array<tilesym::PlacedTile, 4> tiles;
  for (int k = 0; k < 4; ++k) tiles[k] = {tile, tilesym::Dihedral::FromIndex(k)};
  const tilesym::PeriodicRaster block = tilesym::AssembleBlock(tiles);
  for (auto _ : state) benchmark::DoNotOptimize(tilesym::CanonicalKey(block));
}
BENCHMARK(BM_CanonicalKey);

void BM_EnumerateExceptions(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tilesym::EnumerateExceptions());
}
BENCHMARK(BM_EnumerateExceptions);

}  // namespace

BENCHMARK_MAIN();
