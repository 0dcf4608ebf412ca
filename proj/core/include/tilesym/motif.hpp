// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.
//
// Label rasters: seed motifs, the p4 pattern they generate, tiles cut from
// that pattern, and periodic assemblies of oriented tiles.

#ifndef TILESYM_MOTIF_HPP_
#define TILESYM_MOTIF_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tilesym/exact.hpp"
#include "tilesym/lattice.hpp"

namespace tilesym {

// Square array of labels stored row-major with row 0 at the top.
class LabelGrid {
 public:
  LabelGrid() = default;
  explicit LabelGrid(int size, int fill = 0)
      : size_(size), cells_(static_cast<size_t>(size) * size, fill) {
    if (size <= 0) throw DomainError("grid size must be positive");
  }

  int size() const { return size_; }
  int at(int row, int col) const { return cells_[Index(row, col)]; }
  int& at(int row, int col) { return cells_[Index(row, col)]; }
  // Cartesian access: i = column, j counted upward from the bottom row.
  int cell(int i, int j) const { return at(size_ - 1 - j, i); }
  int& cell(int i, int j) { return at(size_ - 1 - j, i); }
  const std::vector<int>& cells() const { return cells_; }

  int MaxLabel() const;
  friend bool operator==(const LabelGrid&, const LabelGrid&) = default;

 private:
  size_t Index(int row, int col) const {
    return static_cast<size_t>(row) * size_ + col;
  }
  int size_ = 0;
  std::vector<int> cells_;
};

// A tile or seed: the labels carry no meaning beyond equality.
using MotifGrid = LabelGrid;

// An M x M raster repeated with periods (M,0) and (0,M).
struct PeriodicRaster {
  LabelGrid grid;
  int period() const { return grid.size(); }
  int wrapped(int64_t i, int64_t j) const;
  friend bool operator==(const PeriodicRaster&, const PeriodicRaster&) = default;
};

// Orientation applied to a tile before placement.
using Placement = Dihedral;

// Plain text: N, then N rows of N labels, row 0 on top.
MotifGrid ReadMotif(std::istream& in);
void WriteMotif(std::ostream& out, const MotifGrid& grid);
MotifGrid ParseMotif(const std::string& text);
std::string FormatMotif(const MotifGrid& grid);

// Deterministic pseudo-random N x N grid with `labels` distinct values.
MotifGrid RandomMotif(int size, int labels, uint64_t seed);

// The p4 pattern generated by a seed: order-4 centers exactly at Z^2,
// symmetry group {z -> R^k z + t : t in Z^2, t_x + t_y even}. The seed
// covers the square 0 <= x+y < 2, 0 <= y-x < 2 in (x+y, y-x) coordinates.
class P4Pattern {
 public:
  explicit P4Pattern(MotifGrid seed);
  const MotifGrid& seed() const { return seed_; }
  int LabelAt(const Point& z) const;

 private:
  MotifGrid seed_;
};

// Smallest admissible extraction resolution: 2 (p^2+q^2) N.
int64_t MinimumResolution(const TileClass& c, int seed_size);

// Samples the pattern at the tile points ((i+1/2)/res, (j+1/2)/res).
MotifGrid ExtractTile(const MotifGrid& seed, const TileClass& c,
                      int64_t resolution);
// The same sampling over [0,2]^2 as a raster of period 2*res, which is a
// period of the pattern for every general class.
PeriodicRaster ExtractBlock(const MotifGrid& seed, const TileClass& c,
                            int64_t resolution);

MotifGrid DihedralTransform(const MotifGrid& tile, const Placement& g);

struct PlacedTile {
  MotifGrid tile;
  Placement placement;
};

// Tiles at (0,0), (1,0), (0,1), (1,1) in tile units (index x + 2y);
// the result has period 2N.
PeriodicRaster AssembleBlock(const std::array<PlacedTile, 4>& tiles);
// A single tile repeated by translation.
PeriodicRaster TranslateAssembly(const MotifGrid& tile);

}  // namespace tilesym

#endif  // TILESYM_MOTIF_HPP_
