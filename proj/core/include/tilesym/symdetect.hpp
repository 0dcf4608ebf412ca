// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.
//
// Exact symmetry detection on periodic label rasters.
//
// A raster of period M has symmetry z -> L z + t (in cell-index space,
// taken mod M) for L in the dihedral group and integer t. Every symmetry of
// a label raster maps cell centers to cell centers, so this finite family
// is complete. Results are reported in tile units: one unit is
// `cells_per_unit` cells.

#ifndef TILESYM_SYMDETECT_HPP_
#define TILESYM_SYMDETECT_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tilesym/exact.hpp"
#include "tilesym/motif.hpp"

namespace tilesym {

enum class WallpaperGroup {
  kP1,
  kP2,
  kPm,
  kPg,
  kCm,
  kP2mm,
  kP2mg,
  kP2gg,
  kC2mm,
  kP4,
  kP4mm,
  kP4gm,
};

const char* WallpaperGroupName(WallpaperGroup g);
std::optional<WallpaperGroup> ParseWallpaperGroup(std::string_view name);
std::vector<WallpaperGroup> AllWallpaperGroups();

// A full-rank lattice of translations with unique coset representatives.
class TranslationLattice {
 public:
  TranslationLattice() = default;
  // Generators must span the plane.
  explicit TranslationLattice(const std::vector<Point>& generators);

  // Hermite form: (a, b) and (0, c) with a, c > 0 and 0 <= b < c.
  const Point& hermite_first() const { return h1_; }
  const Point& hermite_second() const { return h2_; }
  // Lagrange-Gauss reduced basis.
  std::array<Point, 2> ReducedBasis() const;

  bool Contains(const Point& v) const;
  // Representative in the Hermite parallelogram.
  Point Reduce(const Point& v) const;
  // Positive generator of { n . t : t in lattice }.
  Fraction ProjectionStep(const Point& n) const;
  // Shortest lattice vector that is a positive multiple of d.
  Point PrimitiveAlong(const Point& d) const;
  Fraction Covolume() const { return h1_.x * h2_.y; }

 private:
  Point h1_{1, 0};
  Point h2_{0, 1};
};

struct GlideAxis {
  Axis axis;
  Point shift;
  friend bool operator==(const GlideAxis&, const GlideAxis&) = default;
  friend auto operator<=>(const GlideAxis&, const GlideAxis&) = default;
};

struct SymmetrySummary {
  int64_t cells_per_unit = 1;
  std::array<Point, 2> translation_basis;
  // Centers and axes below are representatives modulo the lattice.
  std::vector<Point> order4;
  // Half-turn centers that are not order-4 centers.
  std::vector<Point> order2;
  std::vector<Axis> mirrors;
  // Glide axes whose glide vector is not a lattice translation.
  std::vector<GlideAxis> glides;
  // Every symmetry of the raster modulo its period, in tile units.
  std::vector<Isometry> symmetries;

  TranslationLattice Lattice() const;
};

bool IsRasterSymmetry(const PeriodicRaster& raster, const Dihedral& linear,
                      int64_t tx, int64_t ty);
// Raster symmetries as isometries in tile units.
std::vector<Isometry> RasterSymmetries(const PeriodicRaster& raster,
                                       int64_t cells_per_unit = 1);
std::array<Point, 2> MinimalTranslations(const PeriodicRaster& raster,
                                         int64_t cells_per_unit = 1);
SymmetrySummary DetectSymmetries(const PeriodicRaster& raster,
                                 int64_t cells_per_unit = 1);
// Throws std::logic_error when the summary is not a wallpaper group.
WallpaperGroup ClassifyWallpaperGroup(const SymmetrySummary& summary);

// Lattice images of the order-4 (or order-2) representatives that lie in
// the closed unit square.
std::vector<Point> CentersInUnitSquare(const SymmetrySummary& summary,
                                       int order);

// Symmetries of a single tile that hold wherever both a cell and its
// image lie inside the tile. Rotation centers are searched on the
// half-cell lattice of [0,1]^2 and must overlap at least a quarter of the
// tile; mirrors are the four axes through the tile center.
struct LocalSummary {
  std::vector<Point> order4;
  std::vector<Point> order2;
  std::vector<Axis> mirrors;
  friend bool operator==(const LocalSummary&, const LocalSummary&) = default;
};

LocalSummary LocalSymmetries(const MotifGrid& tile);

}  // namespace tilesym

#endif  // TILESYM_SYMDETECT_HPP_
