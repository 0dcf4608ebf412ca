// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#include "tilesym/motif.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace tilesym {

int LabelGrid::MaxLabel() const {
  return cells_.empty() ? -1 : *std::max_element(cells_.begin(), cells_.end());
}

int PeriodicRaster::wrapped(int64_t i, int64_t j) const {
  int m = period();
  return grid.cell(static_cast<int>(FloorMod(i, m)),
                   static_cast<int>(FloorMod(j, m)));
}

MotifGrid ReadMotif(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n <= 0) throw DomainError("motif: bad size line");
  MotifGrid g(n);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      int v;
      if (!(in >> v)) throw DomainError("motif: truncated cell data");
      if (v < 0) throw DomainError("motif: labels must be non-negative");
      g.at(row, col) = v;
    }
  }
  std::string rest;
  if (in >> rest) throw DomainError("motif: trailing data");
  return g;
}

void WriteMotif(std::ostream& out, const MotifGrid& grid) {
  out << grid.size() << "\n";
  for (int row = 0; row < grid.size(); ++row) {
    for (int col = 0; col < grid.size(); ++col) {
      if (col) out << ' ';
      out << grid.at(row, col);
    }
    out << "\n";
  }
}

MotifGrid ParseMotif(const std::string& text) {
  std::istringstream in(text);
  return ReadMotif(in);
}

std::string FormatMotif(const MotifGrid& grid) {
  std::ostringstream out;
  WriteMotif(out, grid);
  return out.str();
}

MotifGrid RandomMotif(int size, int labels, uint64_t seed) {
  if (labels <= 0) throw DomainError("label count must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, labels - 1);
  MotifGrid g(size);
  for (int row = 0; row < size; ++row) {
    for (int col = 0; col < size; ++col) g.at(row, col) = dist(rng);
  }
  return g;
}

P4Pattern::P4Pattern(MotifGrid seed) : seed_(std::move(seed)) {}

namespace {

Fraction Mod2(const Fraction& v) { return v - Fraction(2 * FloorDiv(v.Floor(), 2)); }

}  // namespace

int P4Pattern::LabelAt(const Point& z) const {
  // (s,d) = (x+y, y-x); translations act as 2Z^2, R as (s,d) -> (-d,s).
  Fraction s = z.x + z.y, d = z.y - z.x;
  std::pair<Fraction, Fraction> best{Mod2(s), Mod2(d)};
  for (int k = 1; k < 4; ++k) {
    Fraction ns = -d;
    d = s;
    s = ns;
    std::pair<Fraction, Fraction> cand{Mod2(s), Mod2(d)};
    if (cand < best) best = cand;
  }
  int n = seed_.size();
  int i = static_cast<int>((best.first * n / 2).Floor());
  int j = static_cast<int>((best.second * n / 2).Floor());
  return seed_.cell(i, j);
}

int64_t MinimumResolution(const TileClass& c, int seed_size) {
  Validate(c);
  if (IsException(c.variant)) {
    throw DomainError("exception tiles are not cut from a single p4 pattern");
  }
  int64_t n = c.variant == Variant::kTrivial ? 1 : c.Norm();
  return CheckedMul(2 * n, seed_size);
}

namespace {

struct Sampler {
  const P4Pattern& pattern;
  TileClass cls;
  int64_t res;

  int At(int64_t i, int64_t j) const {
    Point z(Fraction(2 * i + 1, 2 * res), Fraction(2 * j + 1, 2 * res));
    Point rel = z - cls.anchor;
    Point pattern_point = TileToPattern(rel, cls.p, cls.q);
    if (cls.variant == Variant::kGeneral4) {
      pattern_point = Fraction(1, 2) * pattern_point;
    }
    return pattern.LabelAt(pattern_point);
  }
};

Sampler MakeSampler(const P4Pattern& pattern, const TileClass& c,
                    int64_t resolution, int seed_size) {
  int64_t min_res = MinimumResolution(c, seed_size);
  if (resolution <= 0 || resolution % min_res != 0) {
    throw DomainError("resolution " + std::to_string(resolution) +
                      " must be a positive multiple of " +
                      std::to_string(min_res));
  }
  TileClass cls = c;
  if (cls.variant == Variant::kTrivial) cls = {Variant::kGeneral2, 1, 0, {}};
  return {pattern, cls, resolution};
}

}  // namespace

MotifGrid ExtractTile(const MotifGrid& seed, const TileClass& c,
                      int64_t resolution) {
  P4Pattern pattern(seed);
  Sampler s = MakeSampler(pattern, c, resolution, seed.size());
  int r = static_cast<int>(resolution);
  MotifGrid out(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) out.cell(i, j) = s.At(i, j);
  }
  return out;
}

PeriodicRaster ExtractBlock(const MotifGrid& seed, const TileClass& c,
                            int64_t resolution) {
  P4Pattern pattern(seed);
  Sampler s = MakeSampler(pattern, c, resolution, seed.size());
  int m = static_cast<int>(2 * resolution);
  PeriodicRaster out{LabelGrid(m)};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) out.grid.cell(i, j) = s.At(i, j);
  }
  return out;
}

MotifGrid DihedralTransform(const MotifGrid& tile, const Placement& g) {
  int n = tile.size();
  MotifGrid out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Doubled coordinates about the tile center.
      int x = 2 * i + 1 - n, y = 2 * j + 1 - n, ox, oy;
      g.ApplyInt(x, y, &ox, &oy);
      out.cell((ox + n - 1) / 2, (oy + n - 1) / 2) = tile.cell(i, j);
    }
  }
  return out;
}

PeriodicRaster AssembleBlock(const std::array<PlacedTile, 4>& tiles) {
  int n = tiles[0].tile.size();
  for (const auto& t : tiles) {
    if (t.tile.size() != n) throw DomainError("tile size mismatch in block");
  }
  PeriodicRaster out{LabelGrid(2 * n)};
  for (int idx = 0; idx < 4; ++idx) {
    MotifGrid t = DihedralTransform(tiles[idx].tile, tiles[idx].placement);
    int ox = (idx % 2) * n, oy = (idx / 2) * n;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) out.grid.cell(ox + i, oy + j) = t.cell(i, j);
    }
  }
  return out;
}

PeriodicRaster TranslateAssembly(const MotifGrid& tile) { return {tile}; }

}  // namespace tilesym
