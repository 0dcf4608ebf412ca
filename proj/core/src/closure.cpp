// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#include "tilesym/closure.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>

#include "tilesym/symdetect.hpp"

namespace tilesym {

namespace {

const Fraction kHalf(1, 2);

std::string Term(const Fraction& k, const char* var, bool first) {
  std::string s;
  if (k.Sign() < 0) {
    s = "-";
  } else if (!first) {
    s = "+";
  }
  Fraction m = k.Abs();
  if (m != Fraction(1)) s += m.ToString() + "*";
  return s + var;
}

}  // namespace

std::string AffineForm::ToString() const {
  std::string s;
  if (!c0.IsZero()) s = c0.ToString();
  if (!ca.IsZero()) s += Term(ca, "a", s.empty());
  if (!cb.IsZero()) s += Term(cb, "b", s.empty());
  return s.empty() ? "0" : s;
}

std::string AffinePoint::ToString() const {
  return "(" + x.ToString() + ", " + y.ToString() + ")";
}

AffinePoint ApplyLinear(const Dihedral& l, const AffinePoint& p) {
  return {Fraction(l.a()) * p.x + Fraction(l.b()) * p.y,
          Fraction(l.c()) * p.x + Fraction(l.d()) * p.y};
}

AffinePoint RotationOrbitRep(const AffinePoint& p) {
  AffinePoint best = p, cur = p;
  for (int k = 1; k < 4; ++k) {
    cur = ApplyLinear(Dihedral::Rotation(1), cur);
    best = std::min(best, cur);
  }
  return best;
}

SymIsometry SymIsometry::Rotation(const AffinePoint& center, int k) {
  Dihedral l = Dihedral::Rotation(k);
  return {l, center - ApplyLinear(l, center)};
}

SymIsometry Compose(const SymIsometry& f, const SymIsometry& g) {
  return {f.linear() * g.linear(), ApplyLinear(f.linear(), g.shift()) + f.shift()};
}

SymIsometry Invert(const SymIsometry& f) {
  Dihedral inv = f.linear().Inverse();
  return {inv, -ApplyLinear(inv, f.shift())};
}

// ---------------------------------------------------------------------------
// Placement cases

namespace {

constexpr const char* kSingles = "ABCDEFGH";

bool IsPairCode(std::string_view s) {
  return s.size() == 2 && s[0] >= 'A' && s[0] <= 'D' && s[1] >= 'E' &&
         s[1] <= 'H';
}

bool IsDigit14(char c) { return c >= '1' && c <= '4'; }

}  // namespace

PlacementCase PlacementCase::Parse(std::string_view code) {
  std::string s(code);
  if (s.size() == 1 && std::string_view(kSingles).find(s[0]) != std::string::npos) {
    return {CaseFamily::kSingle, s};
  }
  if ((s.size() == 4 && s.rfind("c1=", 0) == 0 && IsDigit14(s[3])) ||
      (s.size() == 2 && s[0] == 'c' && IsDigit14(s[1]))) {
    return {CaseFamily::kCorner, std::string("c1=") + s.back()};
  }
  if (IsPairCode(s)) return {CaseFamily::kPair, s};
  if (s.size() == 4 && s.rfind("DF3", 0) == 0 && IsDigit14(s[3])) {
    return {CaseFamily::kDF3, s};
  }
  if (s.size() == 5 && s.rfind("DF33", 0) == 0 && IsDigit14(s[4])) {
    return {CaseFamily::kDF33, s};
  }
  throw DomainError("unknown placement case '" + s + "'");
}

std::vector<PlacementCase> PlacementCase::All() {
  std::vector<PlacementCase> out;
  for (const char* p = kSingles; *p; ++p) out.push_back(Parse(std::string(1, *p)));
  for (int i = 1; i <= 4; ++i) out.push_back(Parse("c1=" + std::to_string(i)));
  for (char x = 'A'; x <= 'D'; ++x) {
    for (char y = 'E'; y <= 'H'; ++y) out.push_back(Parse(std::string{x, y}));
  }
  for (int i = 1; i <= 4; ++i) out.push_back(Parse("DF3" + std::to_string(i)));
  for (int i = 1; i <= 4; ++i) out.push_back(Parse("DF33" + std::to_string(i)));
  return out;
}

SymIsometry TileSlot::Placement() const {
  static constexpr int kQuarterTurns[] = {0, 0, 3, 2, 1};
  if (orientation < 1 || orientation > 4) {
    throw DomainError("orientation code must be 1..4");
  }
  SymIsometry rot = SymIsometry::Rotation(
      AffinePoint::Constant({kHalf, kHalf}), kQuarterTurns[orientation]);
  SymIsometry shift = SymIsometry::Translation(AffinePoint::Constant({dx, dy}));
  return Compose(shift, rot);
}

namespace {

TileSlot SingleSlot(char letter) {
  int idx = letter - 'A';
  if (idx < 4) return {std::string(1, letter), -1, 0, idx + 1};
  return {std::string(1, letter), 0, -1, idx - 3};
}

void AddBoth(CaseLayout* l, int x, int y) {
  l->interactions.emplace_back(x, y);
  l->interactions.emplace_back(y, x);
}

}  // namespace

CaseLayout LayoutFor(const PlacementCase& c) {
  CaseLayout l;
  l.tiles.push_back({"P", 0, 0, 1});
  switch (c.family) {
    case CaseFamily::kSingle:
      l.tiles.push_back(SingleSlot(c.code[0]));
      AddBoth(&l, 0, 1);
      l.interactions.emplace_back(0, 0);
      break;
    case CaseFamily::kCorner:
      l.tiles.push_back({"c", -1, -1, c.code.back() - '0'});
      AddBoth(&l, 0, 1);
      l.interactions.emplace_back(0, 0);
      break;
    case CaseFamily::kPair:
      l.tiles.push_back(SingleSlot(c.code[0]));
      l.tiles.push_back(SingleSlot(c.code[1]));
      AddBoth(&l, 1, 2);
      l.interactions.emplace_back(1, 1);
      l.interactions.emplace_back(2, 2);
      break;
    case CaseFamily::kDF3:
    case CaseFamily::kDF33: {
      l.tiles.push_back(SingleSlot('D'));
      l.tiles.push_back(SingleSlot('F'));
      l.tiles.push_back({"c", -1, -1, 3});
      if (c.family == CaseFamily::kDF3) {
        l.tiles.push_back({"d", 1, 0, c.code.back() - '0'});
      } else {
        l.tiles.push_back({"d", 1, 0, 3});
        l.tiles.push_back({"e", 1, -1, c.code.back() - '0'});
      }
      int last = static_cast<int>(l.tiles.size()) - 1;
      for (int t = 0; t < 4; ++t) AddBoth(&l, last, t);
      l.interactions.emplace_back(last, last);
      break;
    }
  }
  return l;
}

// ---------------------------------------------------------------------------
// Induced symmetries

namespace {

// Interior parameters used to decide which neighbour cells a rotation hits.
const std::pair<Fraction, Fraction> kOverlapSamples[] = {
    {Fraction(1, 3), Fraction(1, 6)},   {Fraction(2, 5), Fraction(1, 5)},
    {Fraction(3, 10), Fraction(1, 10)}, {Fraction(9, 20), Fraction(1, 20)},
    {Fraction(2, 5), Fraction(3, 10)},
};

bool CellHits(const SymIsometry& g, const TileSlot& from, const TileSlot& to,
              const Fraction& a, const Fraction& b) {
  Isometry f = g.Instantiate(a, b);
  Fraction lx, ly;
  bool first = true;
  for (int cx = 0; cx <= 1; ++cx) {
    for (int cy = 0; cy <= 1; ++cy) {
      Point img = f.Apply(Point(from.dx + cx, from.dy + cy));
      if (first || img.x < lx) lx = img.x;
      if (first || img.y < ly) ly = img.y;
      first = false;
    }
  }
  return (lx - to.dx).Abs() < 1 && (ly - to.dy).Abs() < 1;
}

// Fixed point of a proper non-translation: (I - L) p = s.
AffinePoint FixedPoint(const SymIsometry& h) {
  const Dihedral& l = h.linear();
  Fraction m00 = 1 - l.a(), m01 = -l.b(), m10 = -l.c(), m11 = 1 - l.d();
  Fraction det = m00 * m11 - m01 * m10;
  const AffinePoint& s = h.shift();
  return {(m11 / det) * s.x - (m01 / det) * s.y,
          (m00 / det) * s.y - (m10 / det) * s.x};
}

template <typename T>
bool Contains(const std::vector<T>& v, const T& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

InducedSet InducedSymmetries(const CaseLayout& layout) {
  InducedSet out;
  const AffinePoint c = AffinePoint::Center();
  std::vector<AffinePoint> half_turns;
  for (auto [xi, yi] : layout.interactions) {
    const TileSlot& x = layout.tiles.at(xi);
    const TileSlot& y = layout.tiles.at(yi);
    for (int k = 1; k <= 3; ++k) {
      SymIsometry gk = SymIsometry::Rotation(c, k);
      bool hit = CellHits(gk, x, y, kOverlapSamples[0].first,
                          kOverlapSamples[0].second);
      for (const auto& [a, b] : kOverlapSamples) {
        if (CellHits(gk, x, y, a, b) != hit) {
          throw std::logic_error("cell overlap of " + x.name + "->" + y.name +
                                 " depends on (a,b)");
        }
      }
      if (!hit) continue;
      SymIsometry h =
          Compose(Invert(y.Placement()), Compose(gk, x.Placement()));
      out.isometries.push_back(h);
      int turns = h.linear().quarter_turns();
      if (turns == 0) {
        const AffinePoint& t = h.shift();
        if (!t.IsZero() && !Contains(out.translations, t) &&
            !Contains(out.translations, -t)) {
          out.translations.push_back(t);
        }
      } else {
        AffinePoint p = FixedPoint(h);
        auto& list = turns == 2 ? half_turns : out.order4;
        if (!Contains(list, p)) list.push_back(p);
      }
    }
  }
  for (const AffinePoint& m : half_turns) {
    if (!Contains(out.order4, m)) out.order2.push_back(m);
  }

  const Dihedral r = Dihedral::Rotation(1);
  std::vector<AffinePoint> gens;
  for (const AffinePoint& x : out.order4) gens.push_back(x - c);
  for (const AffinePoint& m : out.order2) {
    AffinePoint w = m - c;
    gens.push_back(w + ApplyLinear(r, w));
  }
  for (const AffinePoint& t : out.translations) {
    gens.push_back(kHalf * (t + ApplyLinear(r, t)));
  }
  for (const AffinePoint& g : gens) {
    if (g.IsZero()) continue;
    AffinePoint rep = RotationOrbitRep(g);
    if (!Contains(out.generator_orbits, rep)) out.generator_orbits.push_back(rep);
  }
  return out;
}

InducedSet InducedSymmetries(const PlacementCase& c) {
  InducedSet out = InducedSymmetries(LayoutFor(c));
  out.basis = InvarianceBasis(c.code);
  return out;
}

// ---------------------------------------------------------------------------
// Periodicity

const PeriodicityIdentity& FindIdentity(std::string_view name) {
  for (const auto& id : PeriodicityIdentities()) {
    if (id.name == name) return id;
  }
  throw DomainError("unknown identity '" + std::string(name) + "'");
}

bool IdentityHolds(const PeriodicityIdentity& id) {
  AffinePoint sp, sq;
  for (const IdentityTerm& t : id.terms) {
    auto basis = InvarianceBasis(t.basis);
    if (!basis) throw std::logic_error("identity references unknown " + t.basis);
    const AffinePoint& v = (*basis)[t.second ? 1 : 0];
    sp = sp + t.alpha_p * v;
    sq = sq + t.alpha_q * v;
  }
  return sp == AffinePoint::Constant(id.r1) && sq == AffinePoint::Constant(id.r2);
}

std::vector<std::string> PeriodicityCodes() {
  std::vector<std::string> out;
  for (char x = 'A'; x <= 'D'; ++x) {
    for (char y = 'E'; y <= 'H'; ++y) out.push_back(std::string{x, y});
  }
  for (const char* base : {"BG", "CH", "DF", "DF3", "DF33"}) {
    for (int i = 1; i <= 4; ++i) out.push_back(base + std::to_string(i));
  }
  return out;
}

namespace {

struct Chain {
  bool intermediate = false;
  std::vector<std::string> identities;
  std::string note;
};

Chain ChainFor(std::string_view code) {
  std::string s(code);
  if (s == "DF") return {true, {"DF"}, "inconclusive, expand subcases DF1..DF4"};
  if (s == "DF3") return {true, {"DF3"}, "inconclusive, expand subcases DF31..DF34"};
  if (s == "DF33") {
    return {true, {"DF33"}, "inconclusive, expand subcases DF331..DF334"};
  }
  if (IsPairCode(s)) {
    if (s[0] == 'A') return {false, {"A"}, {}};
    if (s[1] == 'E') return {false, {"E"}, {}};
    return {false, {s}, {}};
  }
  if (s.size() == 3 && (s.rfind("BG", 0) == 0 || s.rfind("CH", 0) == 0) &&
      IsDigit14(s[2])) {
    std::string pair = s.substr(0, 2);
    if (s[2] == '1') return {false, {pair, "c1=1"}, {}};
    return {false, {pair, s + "a", s + "b"}, {}};
  }
  if (s.size() == 3 && s.rfind("DF", 0) == 0 && IsDigit14(s[2])) {
    // DF itself contributes nothing.
    return {false, {s[2] == '1' ? std::string("c1=1") : s}, {}};
  }
  if (s.size() == 4 && s.rfind("DF3", 0) == 0 && IsDigit14(s[3])) {
    return {false, {s}, {}};
  }
  if (s.size() == 5 && s.rfind("DF33", 0) == 0 && IsDigit14(s[4])) {
    if (s[4] == '4') return {false, {s, "DF33x"}, {}};
    return {false, {s}, {}};
  }
  throw DomainError("unknown periodicity case '" + s + "'");
}

bool SameLattice(const TranslationLattice& x, const TranslationLattice& y) {
  return x.hermite_first() == y.hermite_first() &&
         x.hermite_second() == y.hermite_second();
}

std::array<Point, 2> NamedBasis(const TranslationLattice& lattice) {
  const Fraction h = kHalf, t(3, 2);
  const std::array<Point, 2> named[] = {
      {Point(1, 0), Point(0, 1)},
      {Point(1, 1), Point(-1, 1)},
      {Point(h, h), Point(-h, h)},
      {Point(h, t), Point(-t, h)},
      {Point(t, h), Point(-h, t)},
  };
  for (const auto& b : named) {
    if (SameLattice(lattice, TranslationLattice({b[0], b[1]}))) return b;
  }
  return lattice.ReducedBasis();
}

}  // namespace

PeriodicityResult DerivePeriodicity(std::string_view code, int64_t p, int64_t q) {
  Chain chain = ChainFor(code);
  PeriodicityResult out;
  out.code = std::string(code);
  out.identities = chain.identities;
  out.note = chain.note;
  std::vector<Point> gens;
  for (const std::string& name : chain.identities) {
    const PeriodicityIdentity& id = FindIdentity(name);
    if (!IdentityHolds(id)) {
      throw std::logic_error("identity " + name + " does not hold");
    }
    gens.push_back(id.r1);
    gens.push_back(id.r2);
  }
  out.center = AffinePoint::Center();
  if (chain.intermediate) return out;
  TranslationLattice lattice;
  try {
    lattice = TranslationLattice(gens);
  } catch (const DomainError&) {
    out.note = "inconclusive, identities do not span the plane";
    return out;
  }
  out.status = PeriodicityStatus::kResolved;
  out.basis = NamedBasis(lattice);
  out.center = AffinePoint::Center() +
               AffinePoint::Constant(Fraction(p) * out.basis[0] +
                                     Fraction(q) * out.basis[1]);
  return out;
}

// ---------------------------------------------------------------------------
// Grid orbit closure

int64_t CellSet::Count() const {
  return std::count(bits_.begin(), bits_.end(), uint8_t{1});
}

bool CellSet::IsSubsetOf(const CellSet& o) const {
  if (o.resolution_ != resolution_) throw DomainError("resolution mismatch");
  for (size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !o.bits_[i]) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> CellSet::Minus(const CellSet& o) const {
  if (o.resolution_ != resolution_) throw DomainError("resolution mismatch");
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < resolution_; ++i) {
    for (int j = 0; j < resolution_; ++j) {
      if (Contains(i, j) && !o.Contains(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

Region Rectangle(const Fraction& x0, const Fraction& x1, const Fraction& y0,
                 const Fraction& y1) {
  return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

bool RegionContains(const Region& r, const Point& p) {
  int side = 0;
  const size_t n = r.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& u = r[i];
    const Point& v = r[(i + 1) % n];
    int s = (v - u).Cross(p - u).Sign();
    if (s == 0) continue;
    if (side == 0) {
      side = s;
    } else if (side != s) {
      return false;
    }
  }
  return true;
}

CellSet Rasterize(const Region& r, int resolution) {
  if (resolution <= 0) throw DomainError("resolution must be positive");
  CellSet out(resolution);
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      Point c(Fraction(2 * i + 1, 2 * resolution), Fraction(2 * j + 1, 2 * resolution));
      if (RegionContains(r, c)) out.Insert(i, j);
    }
  }
  return out;
}

namespace {

struct GridMap {
  Dihedral linear;
  int64_t sx, sy;  // doubled-coordinate shift
};

std::vector<GridMap> GridMaps(const std::vector<Isometry>& generators,
                              int resolution) {
  std::vector<GridMap> maps;
  for (const Isometry& g : generators) {
    for (const Isometry& f : {g, Invert(g)}) {
      Point s = Fraction(resolution) * f.shift();
      if (!s.x.IsInteger() || !s.y.IsInteger()) {
        throw DomainError("resolution " + std::to_string(resolution) +
                          " does not map the cell grid to itself under " +
                          f.ToString());
      }
      maps.push_back({f.linear(), 2 * s.x.num(), 2 * s.y.num()});
    }
  }
  return maps;
}

}  // namespace

CellSet OrbitClosure(const std::vector<Isometry>& generators,
                     const CellSet& seed) {
  const int r = seed.resolution();
  std::vector<GridMap> maps = GridMaps(generators, r);
  CellSet out = seed;
  std::deque<std::pair<int, int>> queue;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (seed.Contains(i, j)) queue.emplace_back(i, j);
    }
  }
  const int64_t two_r = 2 * static_cast<int64_t>(r);
  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    for (const GridMap& m : maps) {
      int64_t x, y;
      m.linear.ApplyInt<int64_t>(2 * i + 1, 2 * j + 1, &x, &y);
      x += m.sx;
      y += m.sy;
      if (x <= 0 || x >= two_r || y <= 0 || y >= two_r) continue;
      int ni = static_cast<int>((x - 1) / 2), nj = static_cast<int>((y - 1) / 2);
      if (out.Contains(ni, nj)) continue;
      out.Insert(ni, nj);
      queue.emplace_back(ni, nj);
    }
  }
  return out;
}

CellSet OrbitClosure(const std::vector<Isometry>& generators,
                     const Region& seed, int resolution) {
  GridMaps(generators, resolution);
  return OrbitClosure(generators, Rasterize(seed, resolution));
}

// ---------------------------------------------------------------------------
// Coverage propositions

const char* CoverageCaseName(CoverageCase c) {
  switch (c) {
    case CoverageCase::kE: return "E";
    case CoverageCase::kF: return "F";
    case CoverageCase::kG: return "G";
    case CoverageCase::kH: return "H";
  }
  return "?";
}

std::optional<CoverageCase> ParseCoverageCase(std::string_view name) {
  if (name.size() != 1) return std::nullopt;
  switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'E': return CoverageCase::kE;
    case 'F': return CoverageCase::kF;
    case 'G': return CoverageCase::kG;
    case 'H': return CoverageCase::kH;
    default: return std::nullopt;
  }
}

std::vector<std::pair<Fraction, Fraction>> DefaultCoverageSamples() {
  return {{Fraction(1, 3), Fraction(1, 6)},
          {Fraction(2, 5), Fraction(1, 5)},
          {Fraction(1, 4), Fraction(0)},
          {Fraction(1, 2), Fraction(1, 4)},
          {Fraction(3, 8), Fraction(3, 8)}};
}

namespace {

void CheckParameters(CoverageCase c, const Fraction& a, const Fraction& b) {
  if (!(b >= 0 && b <= a && a <= kHalf && a > 0)) {
    throw DomainError("parameters must satisfy 0 <= b <= a <= 1/2, a > 0; got (" +
                      a.ToString() + ", " + b.ToString() + ")");
  }
  if (c == CoverageCase::kG && a == kHalf && b.IsZero()) {
    throw DomainError("case G is degenerate at (1/2, 0): the transformations collapse");
  }
}

}  // namespace

std::vector<Isometry> CoverageGenerators(CoverageCase c, const Fraction& a,
                                         const Fraction& b) {
  CheckParameters(c, a, b);
  InducedSet s = InducedSymmetries(PlacementCase::Parse(CoverageCaseName(c)));
  std::vector<Isometry> out;
  for (const AffinePoint& x : s.order4) out.push_back(Isometry::Rotation(x.Eval(a, b), 1));
  for (const AffinePoint& x : s.order2) out.push_back(Isometry::Rotation(x.Eval(a, b), 2));
  for (const AffinePoint& t : s.translations) {
    out.push_back(Isometry::Translation(t.Eval(a, b)));
  }
  return out;
}

Region CoverageSeed(CoverageCase c, const Fraction& a, const Fraction& b) {
  CheckParameters(c, a, b);
  const Point z(a, b);
  auto square_on_diagonal = [](const Point& p0, const Point& p1) {
    Point m = kHalf * (p0 + p1), d = kHalf * (p1 - p0);
    return Region{p0, m + Point(d.y, -d.x), p1, m + Point(-d.y, d.x)};
  };
  switch (c) {
    case CoverageCase::kE:
      return square_on_diagonal(z, z + Point(kHalf, kHalf));
    case CoverageCase::kG:
      return square_on_diagonal(z, Point(kHalf + b, kHalf - a));
    case CoverageCase::kF:
      return {Point(0, 0), z, Point(a - b, a + b)};
    case CoverageCase::kH:
      return {z, Point(1, 0), Point(a + b, 1 - a + b)};
  }
  return {};
}

int CoverageResolution(CoverageCase c, const Fraction& a, const Fraction& b) {
  int64_t l = Lcm(a.den(), b.den());
  auto absorb = [&](const Point& p) { l = Lcm(l, Lcm(p.x.den(), p.y.den())); };
  for (const Isometry& g : CoverageGenerators(c, a, b)) {
    absorb(g.shift());
    if (g.linear() != Dihedral()) {
      // Rotation centers.
      IsoClass k = Classify(g);
      if (const auto* r = std::get_if<RotationClass>(&k)) absorb(r->center);
    }
  }
  for (const Point& v : CoverageSeed(c, a, b)) absorb(v);
  return static_cast<int>(CheckedMul(l, 8));
}

CellSet ExpectedCoverage(CoverageCase c, const Fraction& a, const Fraction& b,
                         int resolution) {
  CheckParameters(c, a, b);
  CellSet out(resolution);
  struct Rect {
    Fraction x0, x1, y0, y1;
  };
  std::vector<Rect> rects;
  if (c == CoverageCase::kF) {
    const Point u(a + b, b - a);
    rects.push_back({2 * a, 1, 0, a + b});
    for (int64_t n = 0;; ++n) {
      Rect r{Fraction(n) * u.x, 2 * a + Fraction(n) * u.x, Fraction(n) * u.y,
             1 + Fraction(n) * u.y};
      if (r.x0 >= 1) break;
      rects.push_back(r);
    }
    if (a + b < kHalf && b < a) {
      for (int64_t n = 0;; ++n) {
        Rect r{2 * a - Fraction(n) * u.x, 1 - 2 * b - Fraction(n) * u.x,
               a + b - Fraction(n) * u.y, 2 * a - Fraction(n) * u.y};
        if (r.x1 <= 0 || r.y0 >= 1) break;
        rects.push_back(r);
      }
    }
  }
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      Fraction x(2 * i + 1, 2 * resolution), y(2 * j + 1, 2 * resolution);
      bool in = false;
      switch (c) {
        case CoverageCase::kE:
        case CoverageCase::kH:
          in = true;
          break;
        case CoverageCase::kG:
          in = (x <= 2 * a && y <= 1 - a + 3 * b) || (x >= 2 * a && y <= 1 - a + b);
          break;
        case CoverageCase::kF:
          in = std::any_of(rects.begin(), rects.end(), [&](const Rect& r) {
            return r.x0 <= x && x <= r.x1 && r.y0 <= y && y <= r.y1;
          });
          break;
      }
      if (in) out.Insert(i, j);
    }
  }
  return out;
}

CoverageReport VerifyCoverage(CoverageCase c, const Fraction& a,
                              const Fraction& b, int resolution) {
  CheckParameters(c, a, b);
  CoverageReport rep;
  rep.which = c;
  rep.a = a;
  rep.b = b;
  rep.resolution = resolution > 0 ? resolution : CoverageResolution(c, a, b);
  CellSet covered =
      OrbitClosure(CoverageGenerators(c, a, b), CoverageSeed(c, a, b), rep.resolution);
  CellSet expected = ExpectedCoverage(c, a, b, rep.resolution);
  rep.covered = covered.Count();
  rep.expected = expected.Count();
  auto missing = expected.Minus(covered);
  auto extra = c == CoverageCase::kG ? std::vector<std::pair<int, int>>{}
                                     : covered.Minus(expected);
  rep.holds = missing.empty() && extra.empty();
  constexpr size_t kWitnesses = 16;
  missing.resize(std::min(missing.size(), kWitnesses));
  extra.resize(std::min(extra.size(), kWitnesses));
  rep.missing = std::move(missing);
  rep.extra = std::move(extra);
  return rep;
}

}  // namespace tilesym
