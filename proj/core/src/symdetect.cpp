// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#include "tilesym/symdetect.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace tilesym {

namespace {

constexpr std::pair<WallpaperGroup, const char*> kGroupNames[] = {
    {WallpaperGroup::kP1, "p1"},     {WallpaperGroup::kP2, "p2"},
    {WallpaperGroup::kPm, "pm"},     {WallpaperGroup::kPg, "pg"},
    {WallpaperGroup::kCm, "cm"},     {WallpaperGroup::kP2mm, "p2mm"},
    {WallpaperGroup::kP2mg, "p2mg"}, {WallpaperGroup::kP2gg, "p2gg"},
    {WallpaperGroup::kC2mm, "c2mm"}, {WallpaperGroup::kP4, "p4"},
    {WallpaperGroup::kP4mm, "p4mm"}, {WallpaperGroup::kP4gm, "p4gm"},
};

Fraction RationalGcd(const Fraction& a, const Fraction& b) {
  int64_t l = Lcm(a.den(), b.den());
  int64_t g = Gcd((a * l).num(), (b * l).num());
  return Fraction(g, l);
}

// Representative of v in [0, step).
Fraction ModStep(const Fraction& v, const Fraction& step) {
  return v - step * Fraction((v / step).Floor());
}

}  // namespace

const char* WallpaperGroupName(WallpaperGroup g) {
  for (const auto& [group, name] : kGroupNames) {
    if (group == g) return name;
  }
  return "?";
}

std::optional<WallpaperGroup> ParseWallpaperGroup(std::string_view name) {
  for (const auto& [group, gname] : kGroupNames) {
    if (name == gname) return group;
  }
  return std::nullopt;
}

std::vector<WallpaperGroup> AllWallpaperGroups() {
  std::vector<WallpaperGroup> out;
  for (const auto& entry : kGroupNames) out.push_back(entry.first);
  return out;
}

TranslationLattice::TranslationLattice(const std::vector<Point>& generators) {
  int64_t scale = 1;
  for (const Point& g : generators) {
    scale = Lcm(scale, Lcm(g.x.den(), g.y.den()));
  }
  // Integer Hermite reduction of the scaled generators.
  int64_t a = 0, b = 0, c = 0;
  for (const Point& g : generators) {
    int64_t x = (g.x * scale).num(), y = (g.y * scale).num();
    if (x == 0) {
      c = Gcd(c, y);
      continue;
    }
    if (a == 0) {
      a = x < 0 ? -x : x;
      b = x < 0 ? -y : y;
      continue;
    }
    // Extended gcd of (a, x).
    int64_t r0 = a, r1 = x, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      int64_t qt = FloorDiv(r0, r1);
      std::tie(r0, r1) = std::make_pair(r1, CheckedSub(r0, CheckedMul(qt, r1)));
      std::tie(s0, s1) = std::make_pair(s1, CheckedSub(s0, CheckedMul(qt, s1)));
      std::tie(t0, t1) = std::make_pair(t1, CheckedSub(t0, CheckedMul(qt, t1)));
    }
    if (r0 < 0) {
      r0 = -r0;
      s0 = -s0;
      t0 = -t0;
    }
    int64_t nb = CheckedAdd(CheckedMul(s0, b), CheckedMul(t0, y));
    int64_t zero_x_y = CheckedSub(CheckedMul(x / r0, b), CheckedMul(a / r0, y));
    c = Gcd(c, zero_x_y);
    a = r0;
    b = nb;
  }
  if (a == 0 || c == 0) throw DomainError("translation generators are not full rank");
  b = FloorMod(b, c);
  h1_ = Point(Fraction(a, scale), Fraction(b, scale));
  h2_ = Point(0, Fraction(c, scale));
}

std::array<Point, 2> TranslationLattice::ReducedBasis() const {
  Point u = h1_, v = h2_;
  while (true) {
    if (v.Norm2() < u.Norm2()) std::swap(u, v);
    Fraction m = u.Dot(v) / u.Norm2();
    int64_t k = (m + Fraction(1, 2)).Floor();
    if (k == 0) break;
    v = v - Fraction(k) * u;
  }
  if (u.x < 0 || (u.x == 0 && u.y < 0)) u = -u;
  if (u.Cross(v) < 0) v = -v;
  return {u, v};
}

bool TranslationLattice::Contains(const Point& v) const {
  return Reduce(v) == Point();
}

Point TranslationLattice::Reduce(const Point& v) const {
  Point r = v - Fraction((v.x / h1_.x).Floor()) * h1_;
  return r - Fraction((r.y / h2_.y).Floor()) * h2_;
}

Fraction TranslationLattice::ProjectionStep(const Point& n) const {
  Fraction g = RationalGcd(n.Dot(h1_), n.Dot(h2_));
  if (g.IsZero()) throw DomainError("zero normal vector");
  return g;
}

Point TranslationLattice::PrimitiveAlong(const Point& d) const {
  Fraction c1 = d.Cross(h1_), c2 = d.Cross(h2_);
  int64_t l = Lcm(c1.den(), c2.den());
  int64_t i1 = (c1 * l).num(), i2 = (c2 * l).num();
  int64_t g = Gcd(i1, i2);
  Point w = Fraction(i2 / g) * h1_ - Fraction(i1 / g) * h2_;
  if (w.Dot(d) < 0) w = -w;
  return w;
}

TranslationLattice SymmetrySummary::Lattice() const {
  return TranslationLattice({translation_basis[0], translation_basis[1]});
}

bool IsRasterSymmetry(const PeriodicRaster& raster, const Dihedral& linear,
                      int64_t tx, int64_t ty) {
  const int m = raster.period();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int64_t x, y;
      linear.ApplyInt<int64_t>(i, j, &x, &y);
      if (raster.wrapped(x + tx, y + ty) != raster.grid.cell(i, j)) return false;
    }
  }
  return true;
}

std::vector<Isometry> RasterSymmetries(const PeriodicRaster& raster,
                                       int64_t cells_per_unit) {
  if (cells_per_unit <= 0) throw DomainError("cells_per_unit must be positive");
  const int m = raster.period();
  std::vector<Isometry> out;
  const Point half(Fraction(1, 2), Fraction(1, 2));
  for (int idx = 0; idx < 8; ++idx) {
    Dihedral l = Dihedral::FromIndex(idx);
    for (int tx = 0; tx < m; ++tx) {
      for (int ty = 0; ty < m; ++ty) {
        if (!IsRasterSymmetry(raster, l, tx, ty)) continue;
        // Cell (i,j) has center (i,j) + half in cell units.
        Point shift = Point(tx, ty) + half - l.Apply(half);
        out.emplace_back(l, Fraction(1, cells_per_unit) * shift);
      }
    }
  }
  return out;
}

namespace {

TranslationLattice LatticeOf(const std::vector<Isometry>& syms, int period,
                             int64_t cells_per_unit) {
  Fraction full(period, cells_per_unit);
  std::vector<Point> gens = {{full, 0}, {0, full}};
  for (const Isometry& s : syms) {
    if (s.linear() == Dihedral()) gens.push_back(s.shift());
  }
  return TranslationLattice(gens);
}

}  // namespace

std::array<Point, 2> MinimalTranslations(const PeriodicRaster& raster,
                                         int64_t cells_per_unit) {
  if (cells_per_unit <= 0) throw DomainError("cells_per_unit must be positive");
  const int m = raster.period();
  Fraction full(m, cells_per_unit);
  std::vector<Point> gens = {{full, 0}, {0, full}};
  for (int tx = 0; tx < m; ++tx) {
    for (int ty = 0; ty < m; ++ty) {
      if ((tx || ty) && IsRasterSymmetry(raster, Dihedral(), tx, ty)) {
        gens.push_back(Fraction(1, cells_per_unit) * Point(tx, ty));
      }
    }
  }
  return TranslationLattice(gens).ReducedBasis();
}

SymmetrySummary DetectSymmetries(const PeriodicRaster& raster,
                                 int64_t cells_per_unit) {
  SymmetrySummary out;
  out.cells_per_unit = cells_per_unit;
  out.symmetries = RasterSymmetries(raster, cells_per_unit);
  TranslationLattice lattice =
      LatticeOf(out.symmetries, raster.period(), cells_per_unit);
  out.translation_basis = lattice.ReducedBasis();

  std::set<Point> order4, order2;
  std::set<Axis> mirrors;
  std::set<GlideAxis> glides;
  auto reduce_axis = [&](Axis a) {
    a.offset = ModStep(a.offset, lattice.ProjectionStep(AxisNormal(a.direction)));
    return a;
  };
  // Each listed symmetry stands for a coset of the period lattice. Adding
  // the four translations below reaches every rotation center, mirror and
  // glide class modulo the full lattice, which is invariant under the
  // linear parts and therefore contains twice itself in (I - L) of it.
  const Point& h1 = lattice.hermite_first();
  const Point& h2 = lattice.hermite_second();
  std::vector<Isometry> variants;
  for (const Isometry& s : out.symmetries) {
    if (s.linear() == Dihedral()) continue;
    for (const Point& t : {Point(), h1, h2, h1 + h2}) {
      variants.emplace_back(s.linear(), s.shift() + t);
    }
  }
  for (const Isometry& s : variants) {
    IsoClass c = Classify(s);
    if (const auto* r = std::get_if<RotationClass>(&c)) {
      (r->order == 4 ? order4 : order2).insert(lattice.Reduce(r->center));
    } else if (const auto* m = std::get_if<ReflectionClass>(&c)) {
      mirrors.insert(reduce_axis(m->axis));
    } else if (const auto* g = std::get_if<GlideClass>(&c)) {
      Point d = AxisVector(g->axis.direction);
      Fraction lambda = g->shift.Dot(d) / d.Norm2();
      Fraction mu = lattice.PrimitiveAlong(d).Dot(d) / d.Norm2();
      Fraction rem = ModStep(lambda, mu);
      if (!rem.IsZero()) glides.insert({reduce_axis(g->axis), rem * d});
    }
  }
  for (const Point& c : order4) order2.erase(c);
  out.order4.assign(order4.begin(), order4.end());
  out.order2.assign(order2.begin(), order2.end());
  out.mirrors.assign(mirrors.begin(), mirrors.end());
  out.glides.assign(glides.begin(), glides.end());
  return out;
}

namespace {

bool OnSomeMirror(const Point& c, const std::vector<Axis>& mirrors,
                  const TranslationLattice& lattice) {
  for (const Axis& m : mirrors) {
    Point n = AxisNormal(m.direction);
    Fraction step = lattice.ProjectionStep(n);
    if (ModStep(n.Dot(c) - m.offset, step).IsZero()) return true;
  }
  return false;
}

}  // namespace

WallpaperGroup ClassifyWallpaperGroup(const SymmetrySummary& s) {
  int order = 1;
  for (const Isometry& g : s.symmetries) {
    if (g.linear().mirrored()) continue;
    int k = g.linear().quarter_turns();
    if (k == 1 || k == 3) order = 4;
    if (k == 2 && order < 2) order = 2;
  }
  bool opposite = std::any_of(s.symmetries.begin(), s.symmetries.end(),
                              [](const Isometry& g) { return g.linear().mirrored(); });
  bool has_mirror = !s.mirrors.empty();
  bool has_glide = !s.glides.empty();
  if (opposite && !has_mirror && !has_glide) {
    throw std::logic_error("opposite symmetries without axes");
  }
  TranslationLattice lattice = s.Lattice();
  auto all_on_mirrors = [&](const std::vector<Point>& centers) {
    return std::all_of(centers.begin(), centers.end(), [&](const Point& c) {
      return OnSomeMirror(c, s.mirrors, lattice);
    });
  };
  switch (order) {
    case 1:
      if (!opposite) return WallpaperGroup::kP1;
      if (has_mirror) return has_glide ? WallpaperGroup::kCm : WallpaperGroup::kPm;
      return WallpaperGroup::kPg;
    case 2: {
      if (!opposite) return WallpaperGroup::kP2;
      if (!has_mirror) return WallpaperGroup::kP2gg;
      std::set<AxisDirection> dirs;
      for (const Axis& m : s.mirrors) dirs.insert(m.direction);
      if (dirs.size() == 1) return WallpaperGroup::kP2mg;
      return all_on_mirrors(s.order2) ? WallpaperGroup::kP2mm
                                      : WallpaperGroup::kC2mm;
    }
    default:
      if (!opposite) return WallpaperGroup::kP4;
      if (!has_mirror) throw std::logic_error("order-4 glides without mirrors");
      return all_on_mirrors(s.order4) ? WallpaperGroup::kP4mm
                                      : WallpaperGroup::kP4gm;
  }
}

std::vector<Point> CentersInUnitSquare(const SymmetrySummary& summary,
                                       int order) {
  TranslationLattice lattice = summary.Lattice();
  const Point& h1 = lattice.hermite_first();
  const Point& h2 = lattice.hermite_second();
  const std::vector<Point>& reps = order == 4 ? summary.order4 : summary.order2;
  std::set<Point> out;
  for (const Point& c : reps) {
    // h2 is vertical, so x depends on the h1 multiple only.
    for (int64_t i = ((-c.x) / h1.x).Ceil(); i <= ((1 - c.x) / h1.x).Floor(); ++i) {
      Point base = c + Fraction(i) * h1;
      for (int64_t j = ((-base.y) / h2.y).Ceil(); j <= ((1 - base.y) / h2.y).Floor();
           ++j) {
        out.insert(base + Fraction(j) * h2);
      }
    }
  }
  return {out.begin(), out.end()};
}

LocalSummary LocalSymmetries(const MotifGrid& tile) {
  const int n = tile.size();
  const int two_n = 2 * n;
  LocalSummary out;
  // Doubled coordinates: cell (i,j) has center (2i+1, 2j+1) over 2n.
  auto holds = [&](int cx, int cy, int k) {
    int inside = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int x = 2 * i + 1 - cx, y = 2 * j + 1 - cy, rx, ry;
        Dihedral::Rotation(k).ApplyInt(x, y, &rx, &ry);
        rx += cx;
        ry += cy;
        if (rx <= 0 || rx >= two_n || ry <= 0 || ry >= two_n) continue;
        ++inside;
        if (tile.cell((rx - 1) / 2, (ry - 1) / 2) != tile.cell(i, j)) return false;
      }
    }
    return 4 * inside >= n * n;
  };
  for (int cx = 0; cx <= two_n; ++cx) {
    for (int cy = 0; cy <= two_n; ++cy) {
      Point c(Fraction(cx, two_n), Fraction(cy, two_n));
      if ((cx + cy) % 2 == 0 && holds(cx, cy, 1)) {
        out.order4.push_back(c);
      } else if (holds(cx, cy, 2)) {
        out.order2.push_back(c);
      }
    }
  }
  const Fraction half(1, 2);
  const Axis through_center[] = {
      {AxisDirection::kHorizontal, half},
      {AxisDirection::kDiagonal, 0},
      {AxisDirection::kVertical, half},
      {AxisDirection::kAntidiagonal, 1},
  };
  for (const Axis& a : through_center) {
    Dihedral l(static_cast<int>(a.direction), true);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        int x = 2 * i + 1 - n, y = 2 * j + 1 - n, rx, ry;
        l.ApplyInt(x, y, &rx, &ry);
        ok = tile.cell((rx + n - 1) / 2, (ry + n - 1) / 2) == tile.cell(i, j);
      }
    }
    if (ok) out.mirrors.push_back(a);
  }
  std::sort(out.order4.begin(), out.order4.end());
  std::sort(out.order2.begin(), out.order2.end());
  return out;
}

}  // namespace tilesym
