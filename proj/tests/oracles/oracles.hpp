// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.
//
// Reference data and brute-force checks used by the unit tests and the
// acceptance runner. Nothing here calls the routine it is meant to check.

#ifndef TILESYM_TESTS_ORACLES_HPP_
#define TILESYM_TESTS_ORACLES_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tilesym/closure.hpp"
#include "tilesym/exact.hpp"
#include "tilesym/lattice.hpp"
#include "tilesym/motif.hpp"

namespace tilesym::oracle {

// ---------------------------------------------------------------------------
// Center lattices

// Every valid class with p^2 + q^2 <= max_norm, all signs of (p,q), with
// two anchors per type where the type allows a choice.
std::vector<TileClass> ClassesUpToNorm(int64_t max_norm);

// anchor + r*e1 + s*e2 inside [0,1]^2, scanning the coefficient box that
// covers the square.
CenterSet LatticePointsInSquare(const Point& anchor, const Point& e1,
                                const Point& e2);

// Centers of a class found by scanning a fine rational grid over the tile
// for points the pattern map sends to the type's center lattice.
CenterSet BruteForceCenters(const TileClass& c);

// Boundary-weighted count computed point by point.
Fraction BruteForceWeight(const CenterSet& set);

// The count each type should have, from p and q alone.
Fraction FormulaCount(const TileClass& c);

// Centers of a reduction case instantiated from its defining formulas.
CenterSet DirectReductionCenters(ReductionCase rc, int64_t p, int64_t q,
                                 int64_t r0, int64_t s0);

// ---------------------------------------------------------------------------
// Symbolic tables

AffineForm ParseAffineForm(std::string_view text);
AffinePoint ParseAffinePoint(std::string_view x, std::string_view y);

struct TransformationTable {
  std::string code;
  std::vector<AffinePoint> order4;
  std::vector<AffinePoint> order2;
  std::vector<AffinePoint> translations;
};

// One entry per placement case, transcribed row by row.
const std::vector<TransformationTable>& TransformationTables();

struct InvarianceEntry {
  std::string key;  // case code, or one of the pair codes of a pair group
  AffinePoint u;
  AffinePoint v;
};
const std::vector<InvarianceEntry>& InvarianceTables();

// Rows of `table` absent from `induced`, and entries of `induced` absent
// from `table`. Translations match up to sign.
std::vector<std::string> CompareWithTable(const TransformationTable& table,
                                          const InducedSet& induced);

// Transcribed translation identities: sum of (alpha_p p + alpha_q q) times
// a tabulated u or v equals p r1 + q r2.
const std::vector<PeriodicityIdentity>& TranscribedIdentities();

// Left side of `id` with vectors from InvarianceTables(), at (a,b,p,q).
Point EvaluateIdentity(const PeriodicityIdentity& id, const Fraction& a,
                       const Fraction& b, const Fraction& p, const Fraction& q);

// The transcribed u or v for a key, or nullptr.
const InvarianceEntry* FindInvariance(std::string_view key);

// ---------------------------------------------------------------------------
// Rasters

// The isometry z -> [[a,b],[c,d]] z + shift.
Isometry FromMatrix(int a, int b, int c, int d, const Point& shift = {});

// Raster of period m whose label classes are the orbits of the group
// generated by `gens` (tile units, one unit = m cells).
PeriodicRaster SymmetrizedRaster(int m, const std::vector<Isometry>& gens);

// Cell-by-cell check that `g` (tile units) maps the raster onto itself.
bool PreservesRaster(const PeriodicRaster& raster, const Isometry& g,
                     int64_t cells_per_unit);

// Every (L, t) with integer t in [0,M)^2, in cell units with cell (i,j) the
// square [i,i+1]x[j,j+1], that preserves the labels.
std::vector<Isometry> BruteRasterSymmetries(const PeriodicRaster& raster);

// A random tile with no symmetry under any of the 7 non-trivial dihedral
// maps, and whose translational tiling has only translations.
MotifGrid AsymmetricTile(int size, uint64_t seed);

struct TrivialAssembly {
  std::string name;
  std::array<int, 4> placements;  // dihedral indices, block order x + 2y
};
// Translation, quarter turns about a vertex, half turns about vertical and
// horizontal edge midpoints.
std::vector<TrivialAssembly> TrivialAssemblies();

}  // namespace tilesym::oracle

#endif  // TILESYM_TESTS_ORACLES_HPP_
