// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.
//
// Exception tiles with order-4 centers on edge midpoints, and the census of
// tilings made from four oriented copies of one tile.

#ifndef TILESYM_CENSUS_HPP_
#define TILESYM_CENSUS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tilesym/closure.hpp"
#include "tilesym/exact.hpp"
#include "tilesym/lattice.hpp"
#include "tilesym/motif.hpp"
#include "tilesym/symdetect.hpp"

namespace tilesym {

// ---------------------------------------------------------------------------
// Tile synthesis

// Cells whose centers lie in `source` must carry the same label as their
// image under `map`.
struct SynthesisRelation {
  Isometry map;
  Region source;
};

// The coarsest labelling satisfying every relation: labels are the
// connected classes, numbered by first occurrence in row-major order, then
// optionally permuted by `seed`. Throws DomainError when an image leaves
// the tile or misses the cell grid.
MotifGrid SynthesizeTile(int size, const std::vector<SynthesisRelation>& relations,
                         std::optional<uint64_t> seed = std::nullopt);

// Renumbers labels by first occurrence in row-major order.
MotifGrid RelabelByFirstOccurrence(const MotifGrid& grid);

// ---------------------------------------------------------------------------
// Quarter model
//
// The tile is cut into quarters BL, BR, TR, TL. The content of BR, TL and
// TR is named a, b and c; corner labels a1..a4 start at the lower-left
// corner of BR, b1 and c1 at the lower-right corner of TL and TR, all
// running counterclockwise. BL is the quarter turn of BR about (1/2, 0).

enum class Quarter { kBL, kBR, kTR, kTL };

// Label ids 0..11 for a1..a4, b1..b4, c1..c4.
std::string QuarterLabelName(int label);
int ParseQuarterLabel(std::string_view name);

// Classes with at least two labels, each sorted, sorted lexicographically.
using QuarterPartition = std::vector<std::vector<int>>;

// Groups written as "a1 a3 b2", one string per group.
QuarterPartition MakePartition(const std::vector<std::string>& groups);
std::string FormatPartition(const QuarterPartition& p);

// Identifications forced by the order-4 rotation about (1/2, 0) when the
// left, lower-left neighbours have orientations kA, kC (quarter turns) and
// the rest of the ring is fixed by that rotation.
QuarterPartition AdjacencyPartition(int ka, int kc);

// Identifications visible in a tile's content: X ~ rot_s(Y) for quarters
// X, Y in {BR, TL, TR}. Tile size must be even.
QuarterPartition QuarterPartitionOf(const MotifGrid& tile);

// The generic tile realising a partition (BL always the turn of BR).
MotifGrid SynthesizeFromPartition(int size, const QuarterPartition& p,
                                  std::optional<uint64_t> seed = std::nullopt);

// Reference partitions a..g in the order they are tabulated.
struct CatalogEntry {
  char letter;
  QuarterPartition partition;
};
const std::vector<CatalogEntry>& ExceptionCatalog();

struct ExceptionClass {
  char letter = '?';
  QuarterPartition partition;
  // (kA, kC) pairs producing this partition.
  std::vector<std::pair<int, int>> cases;
  // Set when the class is an instance of a general tile type.
  std::optional<TileClass> general;
  // Set for genuine exceptions; classes equal up to a symmetry of the
  // square share a group id.
  std::optional<Variant> variant;
  int genuine_group = -1;
};

struct ReflectiveVariant {
  Variant variant = Variant::kExcAdjacent;
  char letter = '?';
  Axis mirror;
  WallpaperGroup group = WallpaperGroup::kP4gm;
};

struct ExceptionEnumeration {
  std::vector<ExceptionClass> classes;
  int genuine_count = 0;
  std::vector<ReflectiveVariant> reflective;
  // Genuine exceptions plus their reflective variants.
  int total_with_reflections = 0;
};

ExceptionEnumeration EnumerateExceptions();

// ---------------------------------------------------------------------------
// Nery census

// Adjacent-center exception with the diagonal mirror y = x. Size must be even and >= 6;
// at size 4 the quarters are too coarse and gain extra symmetry.
MotifGrid NeryMotif(int size = 8, std::optional<uint64_t> seed = std::nullopt);
// The single-tile summary the motif must have.
LocalSummary ExpectedNerySummary();
// Throws DomainError describing the first mismatch.
void ValidateNeryMotif(const MotifGrid& motif);

// Lexicographically least cell sequence over the four rotations and all
// cyclic shifts of the raster.
std::vector<int> CanonicalKey(const PeriodicRaster& raster);
PeriodicRaster RotateRaster(const PeriodicRaster& raster, int quarter_turns);
PeriodicRaster ShiftRaster(const PeriodicRaster& raster, int dx, int dy);
// x -> -x.
PeriodicRaster MirrorRaster(const PeriodicRaster& raster);

struct CensusClass {
  // Dihedral indices of the tiles at (0,0), (1,0), (0,1), (1,1).
  std::array<int, 4> orientations{};
  PeriodicRaster block;
  int block_count = 0;
  WallpaperGroup group = WallpaperGroup::kP1;
  bool reflective = false;
  // Index of the class of the mirror image (itself when reflective).
  int mirror_partner = -1;
};

struct CensusReport {
  int tile_size = 0;
  int blocks = 0;
  int total = 0;
  int reflective = 0;
  int chiral = 0;
  int mirror_pairs = 0;
  // Classes when mirror images are also identified.
  int total_up_to_isometry = 0;
  std::map<WallpaperGroup, int> histogram;
  std::vector<CensusClass> classes;
};

// Validates the motif, then enumerates all 8^4 oriented 2x2 blocks.
CensusReport NeryCensus(const MotifGrid& motif);

}  // namespace tilesym

#endif  // TILESYM_CENSUS_HPP_
