// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#include "tilesym/census.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace tilesym {

namespace {

const Fraction kHalf(1, 2);
const Fraction kQuarter(1, 4);

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(int a, int b) { parent_[Find(a)] = Find(b); }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Tile synthesis

MotifGrid RelabelByFirstOccurrence(const MotifGrid& grid) {
  const int n = grid.size();
  std::map<int, int> ids;
  MotifGrid out(n);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      auto [it, fresh] = ids.emplace(grid.at(row, col), static_cast<int>(ids.size()));
      out.at(row, col) = it->second;
    }
  }
  return out;
}

MotifGrid SynthesizeTile(int size, const std::vector<SynthesisRelation>& relations,
                         std::optional<uint64_t> seed) {
  MotifGrid out(size);
  DisjointSets sets(size * size);
  const int64_t two_n = 2 * static_cast<int64_t>(size);
  for (const SynthesisRelation& rel : relations) {
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        Point z(Fraction(2 * i + 1, two_n), Fraction(2 * j + 1, two_n));
        if (!RegionContains(rel.source, z)) continue;
        Point w = Fraction(two_n) * rel.map.Apply(z);
        if (!w.x.IsInteger() || !w.y.IsInteger() || w.x.num() % 2 == 0 ||
            w.y.num() % 2 == 0) {
          throw DomainError("relation " + rel.map.ToString() +
                            " does not map cell centers to cell centers");
        }
        int64_t x = w.x.num(), y = w.y.num();
        if (x <= 0 || x >= two_n || y <= 0 || y >= two_n) {
          throw DomainError("relation " + rel.map.ToString() + " leaves the tile");
        }
        sets.Union(i * size + j, static_cast<int>((x - 1) / 2) * size +
                                     static_cast<int>((y - 1) / 2));
      }
    }
  }
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) out.cell(i, j) = sets.Find(i * size + j);
  }
  out = RelabelByFirstOccurrence(out);
  if (seed) {
    std::vector<int> perm(out.MaxLabel() + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(*seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int row = 0; row < size; ++row) {
      for (int col = 0; col < size; ++col) out.at(row, col) = perm[out.at(row, col)];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quarter model

namespace {

constexpr int kQuarterCount = 4;
constexpr int kLabelCount = 12;

Point QuarterOrigin(Quarter q) {
  switch (q) {
    case Quarter::kBL: return {0, 0};
    case Quarter::kBR: return {kHalf, 0};
    case Quarter::kTR: return {kHalf, kHalf};
    case Quarter::kTL: return {0, kHalf};
  }
  return {};
}

Point QuarterCenter(Quarter q) { return QuarterOrigin(q) + Point(kQuarter, kQuarter); }

// Corners BL, BR, TR, TL of a quarter, relative to its origin.
Point CornerOffset(int ci) {
  static const Point kCorners[] = {{0, 0}, {kHalf, 0}, {kHalf, kHalf}, {0, kHalf}};
  return kCorners[((ci % 4) + 4) % 4];
}

Region QuarterRect(Quarter q) {
  Point o = QuarterOrigin(q);
  return Rectangle(o.x, o.x + kHalf, o.y, o.y + kHalf);
}

Quarter QuarterAt(const Point& origin) {
  for (int q = 0; q < kQuarterCount; ++q) {
    if (QuarterOrigin(static_cast<Quarter>(q)) == origin) return static_cast<Quarter>(q);
  }
  throw std::logic_error("not a quarter origin: " + origin.ToString());
}

int CornerAt(const Point& offset) {
  for (int ci = 0; ci < 4; ++ci) {
    if (CornerOffset(ci) == offset) return ci;
  }
  throw std::logic_error("not a quarter corner: " + offset.ToString());
}

const Point kEdgeCenter(kHalf, 0);

// Named quarters: (content name, corner carrying label 1).
struct NamedQuarter {
  Quarter quarter;
  int name;
  int start;
};
constexpr NamedQuarter kNamed[] = {
    {Quarter::kBR, 0, 0},
    {Quarter::kTL, 1, 1},
    {Quarter::kTR, 2, 1},
};

int NamedLabel(const NamedQuarter& nq, int ci) {
  return nq.name * 4 + (((ci - nq.start) % 4) + 4) % 4;
}

// Label at corner ci of each quarter of the reference tile.
using LabelTable = std::array<std::array<int, 4>, kQuarterCount>;

const LabelTable& ReferenceLabels() {
  static const LabelTable table = [] {
    LabelTable t{};
    for (const NamedQuarter& nq : kNamed) {
      for (int ci = 0; ci < 4; ++ci) t[static_cast<int>(nq.quarter)][ci] = NamedLabel(nq, ci);
    }
    Isometry turn = Isometry::Rotation(kEdgeCenter, 1);
    for (int ci = 0; ci < 4; ++ci) {
      Point w = turn.Apply(QuarterOrigin(Quarter::kBR) + CornerOffset(ci));
      int cj = CornerAt(w - QuarterOrigin(Quarter::kBL));
      t[static_cast<int>(Quarter::kBL)][cj] = t[static_cast<int>(Quarter::kBR)][ci];
    }
    return t;
  }();
  return table;
}

QuarterPartition ToPartition(DisjointSets& sets) {
  std::map<int, std::vector<int>> groups;
  for (int l = 0; l < sets.size(); ++l) groups[sets.Find(l)].push_back(l);
  QuarterPartition out;
  for (auto& [root, g] : groups) {
    if (g.size() > 1) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DisjointSets FromPartition(const QuarterPartition& p) {
  DisjointSets sets(kLabelCount);
  for (const auto& g : p) {
    for (int l : g) sets.Union(l, g.front());
  }
  return sets;
}

}  // namespace

std::string QuarterLabelName(int label) {
  if (label < 0 || label >= kLabelCount) throw DomainError("bad quarter label");
  return std::string(1, static_cast<char>('a' + label / 4)) + std::to_string(label % 4 + 1);
}

int ParseQuarterLabel(std::string_view name) {
  if (name.size() != 2 || name[0] < 'a' || name[0] > 'c' || name[1] < '1' ||
      name[1] > '4') {
    throw DomainError("bad quarter label '" + std::string(name) + "'");
  }
  return (name[0] - 'a') * 4 + (name[1] - '1');
}

QuarterPartition MakePartition(const std::vector<std::string>& groups) {
  DisjointSets sets(kLabelCount);
  for (const std::string& g : groups) {
    std::vector<int> ids;
    size_t pos = 0;
    while (pos < g.size()) {
      size_t end = g.find(' ', pos);
      if (end == std::string::npos) end = g.size();
      if (end > pos) ids.push_back(ParseQuarterLabel(std::string_view(g).substr(pos, end - pos)));
      pos = end + 1;
    }
    for (int id : ids) sets.Union(id, ids.front());
  }
  return ToPartition(sets);
}

std::string FormatPartition(const QuarterPartition& p) {
  std::string s;
  for (const auto& g : p) {
    if (!s.empty()) s += " | ";
    for (size_t i = 0; i < g.size(); ++i) {
      if (i) s += ' ';
      s += QuarterLabelName(g[i]);
    }
  }
  return s;
}

QuarterPartition AdjacencyPartition(int ka, int kc) {
  ka = ((ka % 4) + 4) % 4;
  kc = ((kc % 4) + 4) % 4;
  // Orientation (quarter turns about the tile center) of each tile met by
  // the quarter turn about (1/2, 0).
  std::map<std::pair<int64_t, int64_t>, int> orientation = {
      {{0, 0}, 0},  {{0, -1}, 2},           {{-1, 0}, ka},
      {{-1, -1}, kc}, {{1, 0}, (kc + 2) % 4}, {{1, -1}, (ka + 2) % 4},
  };
  const LabelTable& ref = ReferenceLabels();
  auto label_at = [&](const Point& origin, const Point& corner) {
    int64_t tx = origin.x.Floor(), ty = origin.y.Floor();
    int k = orientation.at({tx, ty});
    Point tile(tx, ty);
    Isometry back = Isometry::Rotation(tile + Point(kHalf, kHalf), (4 - k) % 4);
    Point local_center = back.Apply(origin + Point(kQuarter, kQuarter)) - tile;
    Point local_origin = local_center - Point(kQuarter, kQuarter);
    Quarter q = QuarterAt(local_origin);
    int ci = CornerAt(back.Apply(corner) - tile - local_origin);
    return ref[static_cast<int>(q)][ci];
  };
  Isometry turn = Isometry::Rotation(kEdgeCenter, 1);
  DisjointSets sets(kLabelCount);
  for (int lx = -1; lx < 3; ++lx) {
    for (int ly = -2; ly < 2; ++ly) {
      Point origin(Fraction(lx, 2), Fraction(ly, 2));
      Point center = origin + Point(kQuarter, kQuarter);
      Point image_origin = turn.Apply(center) - Point(kQuarter, kQuarter);
      for (int ci = 0; ci < 4; ++ci) {
        Point corner = origin + CornerOffset(ci);
        sets.Union(label_at(origin, corner), label_at(image_origin, turn.Apply(corner)));
      }
    }
  }
  return ToPartition(sets);
}

namespace {

MotifGrid QuarterContent(const MotifGrid& tile, Quarter q) {
  const int h = tile.size() / 2;
  Point o = QuarterOrigin(q);
  int ox = static_cast<int>((o.x * 2).num()) * h, oy = static_cast<int>((o.y * 2).num()) * h;
  MotifGrid out(h);
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < h; ++j) out.cell(i, j) = tile.cell(ox + i, oy + j);
  }
  return out;
}

// Maps quarter x onto quarter y, sending corner ci to corner ci + s.
Isometry QuarterMap(Quarter x, Quarter y, int s) {
  return Compose(Isometry::Translation(QuarterCenter(y) - QuarterCenter(x)),
                 Isometry::Rotation(QuarterCenter(x), s));
}

std::vector<SynthesisRelation> PartitionRelations(const QuarterPartition& p) {
  DisjointSets sets = FromPartition(p);
  const LabelTable& ref = ReferenceLabels();
  std::vector<SynthesisRelation> rels;
  rels.push_back({Isometry::Rotation(kEdgeCenter, 1), QuarterRect(Quarter::kBR)});
  for (const NamedQuarter& x : kNamed) {
    for (const NamedQuarter& y : kNamed) {
      for (int s = 0; s < 4; ++s) {
        if (x.quarter == y.quarter && s == 0) continue;
        bool all = true;
        for (int ci = 0; ci < 4 && all; ++ci) {
          all = sets.Find(ref[static_cast<int>(x.quarter)][ci]) ==
                sets.Find(ref[static_cast<int>(y.quarter)][(ci + s) % 4]);
        }
        if (all) rels.push_back({QuarterMap(x.quarter, y.quarter, s), QuarterRect(x.quarter)});
      }
    }
  }
  return rels;
}

}  // namespace

QuarterPartition QuarterPartitionOf(const MotifGrid& tile) {
  if (tile.size() % 2 != 0) throw DomainError("quarter model needs an even tile size");
  const LabelTable& ref = ReferenceLabels();
  DisjointSets sets(kLabelCount);
  for (const NamedQuarter& x : kNamed) {
    MotifGrid cx = QuarterContent(tile, x.quarter);
    for (const NamedQuarter& y : kNamed) {
      MotifGrid cy = QuarterContent(tile, y.quarter);
      for (int s = 0; s < 4; ++s) {
        if (x.quarter == y.quarter && s == 0) continue;
        if (DihedralTransform(cx, Dihedral::Rotation(s)) != cy) continue;
        for (int ci = 0; ci < 4; ++ci) {
          sets.Union(ref[static_cast<int>(x.quarter)][ci],
                     ref[static_cast<int>(y.quarter)][(ci + s) % 4]);
        }
      }
    }
  }
  return ToPartition(sets);
}

MotifGrid SynthesizeFromPartition(int size, const QuarterPartition& p,
                                  std::optional<uint64_t> seed) {
  if (size % 2 != 0) throw DomainError("quarter model needs an even tile size");
  return SynthesizeTile(size, PartitionRelations(p), seed);
}

const std::vector<CatalogEntry>& ExceptionCatalog() {
  static const auto* catalog = new std::vector<CatalogEntry>{
      {'a', MakePartition({"a1 a3 b2 b4 c1 c3", "a2 a4 b1 b3 c2 c4"})},
      {'b', MakePartition({"a1 a3 c1 c3", "a2 a4 c2 c4", "b1 b3", "b2 b4"})},
      {'c', MakePartition({"a1 b4 c1", "a2 b1 c2", "a3 b2 c3", "a4 b3 c4"})},
      {'d', MakePartition({"a1 b2 c3", "a2 b3 c4", "a3 b4 c1", "a4 b1 c2"})},
      {'e', MakePartition({"b1 c2", "b2 c3", "b3 c4", "b4 c1"})},
      {'f', MakePartition({"a1 a3 b2 b4", "a2 a4 b1 b3", "c1 c3", "c2 c4"})},
      {'g', MakePartition({"b1 b3 c2 c4", "b2 b4 c1 c3"})},
  };
  return *catalog;
}

namespace {

constexpr int kModelSize = 8;

std::optional<char> CatalogLetter(const QuarterPartition& p) {
  for (const CatalogEntry& e : ExceptionCatalog()) {
    if (e.partition == p) return e.letter;
  }
  return std::nullopt;
}

// A 4x4 seed with sixteen distinct labels generates a pattern with no
// symmetry beyond p4.
MotifGrid DistinctSeed() {
  MotifGrid seed(4);
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) seed.at(row, col) = row * 4 + col;
  }
  return seed;
}

bool EquivalentUnderSquare(const MotifGrid& x, const MotifGrid& y) {
  MotifGrid ry = RelabelByFirstOccurrence(y);
  for (int idx = 0; idx < 8; ++idx) {
    if (RelabelByFirstOccurrence(DihedralTransform(x, Dihedral::FromIndex(idx))) == ry) {
      return true;
    }
  }
  return false;
}

bool Contains(const std::vector<Point>& v, const Point& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

Variant GenuineVariant(const MotifGrid& tile) {
  LocalSummary s = LocalSymmetries(tile);
  const Point bottom(kHalf, 0), left(0, kHalf), top(kHalf, 1), right(1, kHalf);
  bool adjacent = (Contains(s.order4, bottom) || Contains(s.order4, top)) &&
                  (Contains(s.order4, left) || Contains(s.order4, right));
  if (adjacent) return Variant::kExcAdjacent;
  bool opposite = (Contains(s.order4, bottom) && Contains(s.order4, top)) ||
                  (Contains(s.order4, left) && Contains(s.order4, right));
  if (!opposite) throw std::logic_error("exception tile without edge-midpoint centers");
  bool translated = QuarterContent(tile, Quarter::kBL) == QuarterContent(tile, Quarter::kTR) &&
                    QuarterContent(tile, Quarter::kBR) == QuarterContent(tile, Quarter::kTL);
  return translated ? Variant::kExcOppositeTranslation : Variant::kExcOppositeCenters;
}

const Axis kAxesThroughCenter[] = {
    {AxisDirection::kHorizontal, kHalf},
    {AxisDirection::kDiagonal, 0},
    {AxisDirection::kVertical, kHalf},
    {AxisDirection::kAntidiagonal, 1},
};

Isometry MirrorIn(const Axis& axis) { return Isometry::Reflection(axis); }

}  // namespace

ExceptionEnumeration EnumerateExceptions() {
  ExceptionEnumeration out;
  std::map<char, ExceptionClass> by_letter;
  for (int ka = 0; ka < 4; ++ka) {
    for (int kc = 0; kc < 4; ++kc) {
      QuarterPartition p = AdjacencyPartition(ka, kc);
      std::optional<char> letter = CatalogLetter(p);
      if (!letter) {
        throw std::logic_error("adjacency case yields an uncatalogued partition: " +
                               FormatPartition(p));
      }
      ExceptionClass& c = by_letter[*letter];
      c.letter = *letter;
      c.partition = p;
      c.cases.emplace_back(ka, kc);
    }
  }

  const MotifGrid seed = DistinctSeed();
  constexpr int64_t kResolution = 32;
  const Point edge(kHalf, 0);
  for (const TileClass& general :
       {TileClass::General1(2, 0, Point()), TileClass::General1(1, 1, edge),
        TileClass::General3(1, 0, edge)}) {
    QuarterPartition p = QuarterPartitionOf(ExtractTile(seed, general, kResolution));
    std::optional<char> letter = CatalogLetter(p);
    if (letter && by_letter.count(*letter)) by_letter[*letter].general = general;
  }

  std::vector<MotifGrid> group_tiles;
  for (auto& [letter, c] : by_letter) {
    if (!c.general) {
      MotifGrid tile = SynthesizeFromPartition(kModelSize, c.partition);
      c.variant = GenuineVariant(tile);
      for (size_t g = 0; g < group_tiles.size(); ++g) {
        if (EquivalentUnderSquare(group_tiles[g], tile)) c.genuine_group = static_cast<int>(g);
      }
      if (c.genuine_group < 0) {
        c.genuine_group = static_cast<int>(group_tiles.size());
        group_tiles.push_back(tile);

        LocalSummary local = LocalSymmetries(tile);
        std::vector<SynthesisRelation> rels = PartitionRelations(c.partition);
        for (const Axis& axis : kAxesThroughCenter) {
          Isometry m = MirrorIn(axis);
          bool preserves = std::all_of(local.order4.begin(), local.order4.end(),
                                       [&](const Point& z) {
                                         return Contains(local.order4, m.Apply(z));
                                       });
          if (!preserves) continue;
          std::vector<SynthesisRelation> with_mirror = rels;
          with_mirror.push_back({m, Rectangle(0, 1, 0, 1)});
          LocalSummary mirrored = LocalSymmetries(SynthesizeTile(kModelSize, with_mirror));
          if (mirrored.order4 != local.order4) {
            throw std::logic_error("mirror changes the order-4 centers");
          }
          bool through_center = std::any_of(local.order4.begin(), local.order4.end(),
                                            [&](const Point& z) { return axis.Contains(z); });
          out.reflective.push_back({*c.variant, letter, axis,
                                    through_center ? WallpaperGroup::kP4mm
                                                   : WallpaperGroup::kP4gm});
        }
      }
    }
    out.classes.push_back(c);
  }
  out.genuine_count = static_cast<int>(group_tiles.size());
  out.total_with_reflections = out.genuine_count + static_cast<int>(out.reflective.size());
  return out;
}

// ---------------------------------------------------------------------------
// Nery motif

MotifGrid NeryMotif(int size, std::optional<uint64_t> seed) {
  if (size < 6 || size % 2 != 0) throw DomainError("Nery motif size must be even and at least 6");
  std::vector<SynthesisRelation> rels = {
      {Isometry::Rotation(kEdgeCenter, 1), QuarterRect(Quarter::kBR)},
      {Isometry::Rotation(Point(0, kHalf), 1), QuarterRect(Quarter::kBL)},
  };
  for (int q = 0; q < kQuarterCount; ++q) {
    Quarter quarter = static_cast<Quarter>(q);
    rels.push_back({Isometry::Rotation(QuarterCenter(quarter), 2), QuarterRect(quarter)});
  }
  rels.push_back({Isometry::Reflection({AxisDirection::kDiagonal, 0}), Rectangle(0, 1, 0, 1)});
  return SynthesizeTile(size, rels, seed);
}

LocalSummary ExpectedNerySummary() {
  const Fraction q1 = kQuarter, q3(3, 4);
  LocalSummary s;
  s.order4 = {Point(0, kHalf), Point(kHalf, 0)};
  s.order2 = {Point(q1, q1), Point(q1, q3), Point(q3, q1), Point(q3, q3)};
  s.mirrors = {{AxisDirection::kDiagonal, 0}};
  return s;
}

namespace {

std::string FormatPoints(const std::vector<Point>& pts) {
  std::string s = "{";
  for (size_t i = 0; i < pts.size(); ++i) s += (i ? ", " : "") + pts[i].ToString();
  return s + "}";
}

}  // namespace

void ValidateNeryMotif(const MotifGrid& motif) {
  if (motif.size() % 2 != 0) throw DomainError("Nery motif size must be even");
  LocalSummary got = LocalSymmetries(motif);
  LocalSummary want = ExpectedNerySummary();
  if (got.order4 != want.order4) {
    throw DomainError("motif order-4 centers " + FormatPoints(got.order4) + ", expected " +
                      FormatPoints(want.order4));
  }
  if (got.order2 != want.order2) {
    throw DomainError("motif order-2 centers " + FormatPoints(got.order2) + ", expected " +
                      FormatPoints(want.order2));
  }
  if (got.mirrors != want.mirrors) {
    throw DomainError("motif mirrors do not match the single diagonal y = x");
  }
}

// ---------------------------------------------------------------------------
// Census

PeriodicRaster RotateRaster(const PeriodicRaster& raster, int quarter_turns) {
  const int m = raster.period();
  int k = ((quarter_turns % 4) + 4) % 4;
  PeriodicRaster cur = raster;
  for (int t = 0; t < k; ++t) {
    PeriodicRaster next{LabelGrid(m)};
    // Cell center (i+1/2, j+1/2) turns to (-j-1/2, i+1/2).
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        next.grid.cell(static_cast<int>(FloorMod(-j - 1, m)), i) = cur.grid.cell(i, j);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

PeriodicRaster ShiftRaster(const PeriodicRaster& raster, int dx, int dy) {
  const int m = raster.period();
  PeriodicRaster out{LabelGrid(m)};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      out.grid.cell(static_cast<int>(FloorMod(i + dx, m)),
                    static_cast<int>(FloorMod(j + dy, m))) = raster.grid.cell(i, j);
    }
  }
  return out;
}

PeriodicRaster MirrorRaster(const PeriodicRaster& raster) {
  const int m = raster.period();
  PeriodicRaster out{LabelGrid(m)};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) out.grid.cell(m - 1 - i, j) = raster.grid.cell(i, j);
  }
  return out;
}

std::vector<int> CanonicalKey(const PeriodicRaster& raster) {
  const int m = raster.period();
  const auto& cells = raster.grid.cells();
  const int min_label = *std::min_element(cells.begin(), cells.end());
  std::vector<int> best;
  for (int k = 0; k < 4; ++k) {
    PeriodicRaster r = RotateRaster(raster, k);
    const LabelGrid& g = r.grid;
    for (int tx = 0; tx < m; ++tx) {
      for (int ty = 0; ty < m; ++ty) {
        if (g.cell(tx, ty) != min_label) continue;
        // Sequence: j outer, i inner, starting at (tx, ty).
        auto at = [&](int idx) {
          int i = idx % m, j = idx / m;
          return g.cell((i + tx) % m, (j + ty) % m);
        };
        if (best.empty()) {
          best.resize(static_cast<size_t>(m) * m);
          for (int idx = 0; idx < m * m; ++idx) best[idx] = at(idx);
          continue;
        }
        int idx = 0;
        while (idx < m * m && at(idx) == best[idx]) ++idx;
        if (idx < m * m && at(idx) < best[idx]) {
          for (; idx < m * m; ++idx) best[idx] = at(idx);
        }
      }
    }
  }
  return best;
}

CensusReport NeryCensus(const MotifGrid& motif) {
  ValidateNeryMotif(motif);
  CensusReport rep;
  rep.tile_size = motif.size();
  std::map<std::vector<int>, int> index;
  for (int combo = 0; combo < 8 * 8 * 8 * 8; ++combo) {
    std::array<int, 4> o = {combo / 512, (combo / 64) % 8, (combo / 8) % 8, combo % 8};
    std::array<PlacedTile, 4> tiles;
    for (int t = 0; t < 4; ++t) tiles[t] = {motif, Dihedral::FromIndex(o[t])};
    PeriodicRaster block = AssembleBlock(tiles);
    auto [it, fresh] = index.emplace(CanonicalKey(block), static_cast<int>(rep.classes.size()));
    if (fresh) {
      CensusClass c;
      c.orientations = o;
      c.block = std::move(block);
      rep.classes.push_back(std::move(c));
    }
    ++rep.classes[it->second].block_count;
    ++rep.blocks;
  }
  for (CensusClass& c : rep.classes) {
    SymmetrySummary s = DetectSymmetries(c.block, motif.size());
    c.group = ClassifyWallpaperGroup(s);
    c.reflective = std::any_of(s.symmetries.begin(), s.symmetries.end(),
                               [](const Isometry& g) { return g.linear().mirrored(); });
    auto it = index.find(CanonicalKey(MirrorRaster(c.block)));
    if (it == index.end()) throw std::logic_error("mirror image missing from census");
    c.mirror_partner = it->second;
  }
  rep.total = static_cast<int>(rep.classes.size());
  for (int i = 0; i < rep.total; ++i) {
    const CensusClass& c = rep.classes[i];
    ++rep.histogram[c.group];
    if (c.reflective) {
      ++rep.reflective;
      if (c.mirror_partner != i) throw std::logic_error("reflective class with a distinct mirror");
    } else {
      ++rep.chiral;
      if (c.mirror_partner == i ||
          rep.classes[c.mirror_partner].mirror_partner != i) {
        throw std::logic_error("chiral classes do not pair up");
      }
    }
  }
  rep.mirror_pairs = rep.chiral / 2;
  rep.total_up_to_isometry = rep.reflective + rep.mirror_pairs;
  return rep;
}

}  // namespace tilesym
