// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.
//
// Order-4 rotation-center lattices of square tiles cut from p4 patterns.
//
// For integers (p,q) != (0,0) let n = p^2 + q^2 and
//   Lambda(p,q) = { (r p + s q, s p - r q) / n : r, s integers }.
// The tile [0,1]^2 sees the pattern through T = [u v], u = (p,q),
// v = (-q,p): pattern point P corresponds to tile point anchor + T^-1 P.

#ifndef TILESYM_LATTICE_HPP_
#define TILESYM_LATTICE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tilesym/exact.hpp"

namespace tilesym {

enum class Variant {
  kGeneral1,
  kGeneral2,
  kGeneral3,
  kGeneral4,
  kExcAdjacent,
  kExcOppositeTranslation,
  kExcOppositeCenters,
  kTrivial,
};

const char* VariantName(Variant v);
std::optional<Variant> ParseVariant(std::string_view name);
bool IsGeneral(Variant v);
bool IsException(Variant v);

struct TileClass {
  Variant variant = Variant::kTrivial;
  int64_t p = 0;
  int64_t q = 0;
  Point anchor;

  static TileClass General1(int64_t p, int64_t q, Point anchor = {});
  static TileClass General2(int64_t p, int64_t q);
  static TileClass General3(int64_t p, int64_t q, Point anchor = {Fraction(1, 2), 0});
  static TileClass General4(int64_t p, int64_t q, Point anchor = {});
  static TileClass Exception(Variant v);
  static TileClass Trivial();

  int64_t Norm() const { return p * p + q * q; }
  std::string ToString() const;
  friend bool operator==(const TileClass&, const TileClass&) = default;
};

// Sorted, deduplicated points of the closed unit square.
using CenterSet = std::vector<Point>;

void NormalizeCenterSet(CenterSet* set);
bool InUnitSquare(const Point& p);

// (r,s) -> (r p + s q, s p - r q) / (p^2 + q^2).
Point PatternToTile(const Point& rs, int64_t p, int64_t q);
// Inverse of PatternToTile: z -> (p x - q y, q x + p y).
Point TileToPattern(const Point& z, int64_t p, int64_t q);

// Throws DomainError when the class invariants fail.
void Validate(const TileClass& c);
// Rotates (p,q) into p > 0, q >= 0 and moves a General1 anchor to the
// lexicographically smallest center; General2 with (1,0) becomes Trivial.
TileClass Canonicalize(const TileClass& c);

CenterSet GenerateCenters(const TileClass& c);
// Interior 1, edge 1/2, corner 1/4.
Fraction CenterWeight(const Point& p);
Fraction WeightedCount(const CenterSet& set);
// p^2+q^2 for types 1-3, (p^2+q^2)/4 for type 4.
Fraction ExpectedCount(const TileClass& c);

// Inverse of GenerateCenters up to canonical form.
TileClass ClassifyCenters(const CenterSet& set);

enum class ReductionCase { kF1, kF2, kG1, kH1, kH2 };
const char* ReductionCaseName(ReductionCase c);
std::optional<ReductionCase> ParseReductionCase(std::string_view name);

// The canonical class whose centers are the case's center set.
TileClass ReduceCase(ReductionCase rc, int64_t p, int64_t q, int64_t r0,
                     int64_t s0);

}  // namespace tilesym

#endif  // TILESYM_LATTICE_HPP_
