// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tilesym::oracle {

namespace {

const Fraction kHalf(1, 2);

bool InClosedUnitSquare(const Point& z) {
  return z.x >= 0 && z.x <= 1 && z.y >= 0 && z.y <= 1;
}

void SortUnique(CenterSet* set) {
  std::sort(set->begin(), set->end());
  set->erase(std::unique(set->begin(), set->end()), set->end());
}

}  // namespace

std::vector<TileClass> ClassesUpToNorm(int64_t max_norm) {
  std::vector<TileClass> out;
  const int64_t r = static_cast<int64_t>(std::sqrt(static_cast<double>(max_norm))) + 1;
  for (int64_t p = -r; p <= r; ++p) {
    for (int64_t q = -r; q <= r; ++q) {
      const int64_t n = p * p + q * q;
      if (n == 0 || n > max_norm) continue;
      const bool odd_sum = (p + q) % 2 != 0;
      if (!odd_sum) {
        out.push_back(TileClass::General1(p, q));
        out.push_back(TileClass::General1(p, q, {Fraction(1, 4), kHalf}));
      } else {
        out.push_back(TileClass::General2(p, q));
        out.push_back(TileClass::General3(p, q, {kHalf, 0}));
        out.push_back(TileClass::General3(p, q, {0, kHalf}));
      }
      if (p % 2 != 0 && q % 2 != 0) {
        out.push_back(TileClass::General4(p, q, {}));
        out.push_back(TileClass::General4(p, q, {1, 0}));
      }
    }
  }
  return out;
}

CenterSet LatticePointsInSquare(const Point& anchor, const Point& e1,
                                const Point& e2) {
  // Coefficient range from the inverse basis applied to the square corners.
  const double det = (e1.x * e2.y - e1.y * e2.x).ToDouble();
  if (det == 0) throw std::invalid_argument("degenerate basis");
  double rmin = 1e300, rmax = -1e300, smin = 1e300, smax = -1e300;
  for (int cx = 0; cx <= 1; ++cx) {
    for (int cy = 0; cy <= 1; ++cy) {
      double wx = cx - anchor.x.ToDouble(), wy = cy - anchor.y.ToDouble();
      double r = (e2.y.ToDouble() * wx - e2.x.ToDouble() * wy) / det;
      double s = (-e1.y.ToDouble() * wx + e1.x.ToDouble() * wy) / det;
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
      smin = std::min(smin, s);
      smax = std::max(smax, s);
    }
  }
  CenterSet out;
  for (auto r = static_cast<int64_t>(std::floor(rmin)) - 1; r <= std::ceil(rmax) + 1; ++r) {
    for (auto s = static_cast<int64_t>(std::floor(smin)) - 1; s <= std::ceil(smax) + 1; ++s) {
      Point z = anchor + Fraction(r) * e1 + Fraction(s) * e2;
      if (InClosedUnitSquare(z)) out.push_back(z);
    }
  }
  SortUnique(&out);
  return out;
}

CenterSet BruteForceCenters(const TileClass& c) {
  switch (c.variant) {
    case Variant::kExcAdjacent:
      return {{0, kHalf}, {kHalf, 0}};
    case Variant::kExcOppositeTranslation:
    case Variant::kExcOppositeCenters:
      return {{kHalf, 0}, {kHalf, 1}};
    case Variant::kTrivial:
      return {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    default:
      break;
  }
  // z is a center when (p x - q y, q x + p y)(z - anchor) lies in scale*Z^2.
  const int64_t scale = c.variant == Variant::kGeneral4 ? 2 : 1;
  const int64_t n = c.p * c.p + c.q * c.q;
  const int64_t grid = std::lcm(std::lcm(2 * n, c.anchor.x.den()), c.anchor.y.den());
  CenterSet out;
  for (int64_t i = 0; i <= grid; ++i) {
    for (int64_t j = 0; j <= grid; ++j) {
      Fraction x = Fraction(i, grid) - c.anchor.x;
      Fraction y = Fraction(j, grid) - c.anchor.y;
      Fraction u = (Fraction(c.p) * x - Fraction(c.q) * y) / scale;
      Fraction v = (Fraction(c.q) * x + Fraction(c.p) * y) / scale;
      if (u.IsInteger() && v.IsInteger()) out.emplace_back(Fraction(i, grid), Fraction(j, grid));
    }
  }
  return out;
}

Fraction BruteForceWeight(const CenterSet& set) {
  Fraction total;
  for (const Point& z : set) {
    int boundary = 0;
    if (z.x == 0 || z.x == 1) ++boundary;
    if (z.y == 0 || z.y == 1) ++boundary;
    total += Fraction(1, int64_t{1} << boundary);
  }
  return total;
}

Fraction FormulaCount(const TileClass& c) {
  const int64_t n = c.p * c.p + c.q * c.q;
  switch (c.variant) {
    case Variant::kGeneral1: {
      const int64_t p1 = (c.p - c.q) / 2, q1 = (c.p + c.q) / 2;
      return 2 * (p1 * p1 + q1 * q1);
    }
    case Variant::kGeneral2:
    case Variant::kGeneral3:
      return n;
    case Variant::kGeneral4:
      return Fraction(n, 4);
    default:
      return 1;
  }
}

CenterSet DirectReductionCenters(ReductionCase rc, int64_t p, int64_t q,
                                 int64_t r0, int64_t s0) {
  const Fraction n(p * p + q * q);
  // Steps of the two lattices that appear in the cases.
  const Point f1_e1 = Point(Fraction(p) / n, Fraction(-q) / n);
  const Point f1_e2 = Point(Fraction(q) / n, Fraction(p) / n);
  const Point f2_e1 = Point(Fraction(p + q) / n, Fraction(p - q) / n);
  const Point f2_e2 = Point(Fraction(q - p) / n, Fraction(p + q) / n);
  const Fraction r(r0), s(s0), fp(p), fq(q);
  switch (rc) {
    case ReductionCase::kF1:
      return LatticePointsInSquare({(r * fp + s * fq) / n, (s * fp - r * fq) / n},
                                   f1_e1, f1_e2);
    case ReductionCase::kF2:
      return LatticePointsInSquare(
          {(r * (fp + fq) + s * (fq - fp)) / n, (s * (fp + fq) + r * (fp - fq)) / n},
          f2_e1, f2_e2);
    case ReductionCase::kG1:
      return LatticePointsInSquare(
          {kHalf + kHalf * (-(r + s) * fp + fq * (r - s)) / n,
           kHalf * ((r - s) * fp + fq * (r + s)) / n},
          f1_e1, f1_e2);
    case ReductionCase::kH1:
      return LatticePointsInSquare({1 - (s * fp - r * fq) / n, (r * fp + s * fq) / n},
                                   f1_e1, f1_e2);
    case ReductionCase::kH2:
      return LatticePointsInSquare(
          {1 - (s * (fp + fq) + r * (fp - fq)) / n, (r * (fp + fq) + s * (fq - fp)) / n},
          f2_e1, f2_e2);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Rasters

Isometry FromMatrix(int a, int b, int c, int d, const Point& shift) {
  for (int i = 0; i < 8; ++i) {
    Dihedral l = Dihedral::FromIndex(i);
    if (l.a() == a && l.b() == b && l.c() == c && l.d() == d) return {l, shift};
  }
  throw std::invalid_argument("not a dihedral matrix");
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(int x, int y) { parent_[Find(x)] = Find(y); }

 private:
  std::vector<int> parent_;
};

// Cell hit by g applied to the center of cell (i,j), in tile units of m cells.
std::pair<int64_t, int64_t> MapCell(const Isometry& g, int m, int64_t i, int64_t j) {
  Point center(Fraction(2 * i + 1, 2 * m), Fraction(2 * j + 1, 2 * m));
  Point img = g.Apply(center);
  Fraction ci = img.x * m - kHalf, cj = img.y * m - kHalf;
  if (!ci.IsInteger() || !cj.IsInteger()) {
    throw std::invalid_argument("isometry does not map cells to cells");
  }
  return {FloorMod(ci.num(), m), FloorMod(cj.num(), m)};
}

}  // namespace

PeriodicRaster SymmetrizedRaster(int m, const std::vector<Isometry>& gens) {
  UnionFind uf(m * m);
  for (const Isometry& g : gens) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        auto [i2, j2] = MapCell(g, m, i, j);
        uf.Union(i * m + j, static_cast<int>(i2 * m + j2));
      }
    }
  }
  PeriodicRaster raster{LabelGrid(m)};
  std::vector<int> label(m * m, -1);
  int next = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int root = uf.Find(i * m + j);
      if (label[root] < 0) label[root] = next++;
      raster.grid.cell(i, j) = label[root];
    }
  }
  return raster;
}

bool PreservesRaster(const PeriodicRaster& raster, const Isometry& g,
                     int64_t cells_per_unit) {
  const int m = raster.period();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Point center(Fraction(2 * i + 1, 2 * cells_per_unit),
                   Fraction(2 * j + 1, 2 * cells_per_unit));
      Point img = g.Apply(center);
      Fraction ci = img.x * cells_per_unit - kHalf, cj = img.y * cells_per_unit - kHalf;
      if (!ci.IsInteger() || !cj.IsInteger()) return false;
      if (raster.wrapped(ci.num(), cj.num()) != raster.grid.cell(i, j)) return false;
    }
  }
  return true;
}

std::vector<Isometry> BruteRasterSymmetries(const PeriodicRaster& raster) {
  const int m = raster.period();
  std::vector<Isometry> out;
  for (int li = 0; li < 8; ++li) {
    Dihedral l = Dihedral::FromIndex(li);
    for (int tx = 0; tx < m; ++tx) {
      for (int ty = 0; ty < m; ++ty) {
        // Cell (i,j) occupies [i,i+1]x[j,j+1]; integer shifts keep centers
        // on centers for every dihedral linear part.
        Isometry g(l, Point(tx, ty));
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
          for (int j = 0; j < m && ok; ++j) {
            int64_t x2 = 0, y2 = 0;
            l.ApplyInt<int64_t>(2 * i + 1, 2 * j + 1, &x2, &y2);
            ok = raster.wrapped(FloorDiv(x2, 2) + tx, FloorDiv(y2, 2) + ty) ==
                 raster.grid.cell(i, j);
          }
        }
        if (ok) out.push_back(g);
      }
    }
  }
  return out;
}

MotifGrid AsymmetricTile(int size, uint64_t seed) {
  for (uint64_t s = seed;; ++s) {
    MotifGrid tile = RandomMotif(size, 3, s);
    bool asymmetric = true;
    for (int i = 1; i < 8 && asymmetric; ++i) {
      asymmetric = DihedralTransform(tile, Dihedral::FromIndex(i)) != tile;
    }
    if (!asymmetric) continue;
    PeriodicRaster tiled{tile};
    if (BruteRasterSymmetries(tiled).size() == 1) return tile;
  }
}

std::vector<TrivialAssembly> TrivialAssemblies() {
  return {
      {"translation", {0, 0, 0, 0}},
      {"vertex rotation", {0, 1, 3, 2}},
      {"vertical edge half turn", {0, 2, 0, 2}},
      {"horizontal edge half turn", {0, 0, 2, 2}},
  };
}

}  // namespace tilesym::oracle
