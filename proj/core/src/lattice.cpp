// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#include "tilesym/lattice.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <tuple>

namespace tilesym {

namespace {

const Fraction kHalf(1, 2);

constexpr std::array<std::pair<Variant, const char*>, 8> kVariantNames = {{
    {Variant::kGeneral1, "General1"},
    {Variant::kGeneral2, "General2"},
    {Variant::kGeneral3, "General3"},
    {Variant::kGeneral4, "General4"},
    {Variant::kExcAdjacent, "ExcAdjacent"},
    {Variant::kExcOppositeTranslation, "ExcOppositeTranslation"},
    {Variant::kExcOppositeCenters, "ExcOppositeCenters"},
    {Variant::kTrivial, "Trivial"},
}};

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

bool IsOdd(int64_t v) { return (v & 1) != 0; }

CenterSet Corners() { return {{0, 0}, {0, 1}, {1, 0}, {1, 1}}; }

bool Contains(const CenterSet& set, const Point& p) {
  return std::binary_search(set.begin(), set.end(), p);
}

// Rotates (p,q) by quarter turns into p > 0, q >= 0.
void CanonicalPQ(int64_t* p, int64_t* q) {
  for (int i = 0; i < 4; ++i) {
    if (*p > 0 && *q >= 0) return;
    int64_t np = -*q;
    *q = *p;
    *p = np;
  }
}

// Points anchor + scale * PatternToTile(r,s) inside the unit square.
CenterSet EnumerateCoset(const Point& anchor, int64_t p, int64_t q,
                         const Fraction& scale) {
  // (r,s) range from the square corners pulled back to pattern coordinates.
  int64_t rmin = INT64_MAX, rmax = INT64_MIN, smin = INT64_MAX, smax = INT64_MIN;
  for (int cx = 0; cx <= 1; ++cx) {
    for (int cy = 0; cy <= 1; ++cy) {
      Point rs = TileToPattern(Point(cx, cy) - anchor, p, q);
      Fraction r = rs.x / scale, s = rs.y / scale;
      rmin = std::min(rmin, r.Floor());
      rmax = std::max(rmax, -(-r).Floor());
      smin = std::min(smin, s.Floor());
      smax = std::max(smax, -(-s).Floor());
    }
  }
  CenterSet out;
  for (int64_t r = rmin; r <= rmax; ++r) {
    for (int64_t s = smin; s <= smax; ++s) {
      Point z = anchor + scale * PatternToTile(Point(r, s), p, q);
      if (InUnitSquare(z)) out.push_back(z);
    }
  }
  NormalizeCenterSet(&out);
  return out;
}

}  // namespace

const char* VariantName(Variant v) {
  for (const auto& [variant, name] : kVariantNames) {
    if (variant == v) return name;
  }
  return "?";
}

std::optional<Variant> ParseVariant(std::string_view name) {
  for (const auto& [variant, vname] : kVariantNames) {
    if (EqualsIgnoreCase(name, vname)) return variant;
  }
  return std::nullopt;
}

bool IsGeneral(Variant v) {
  return v == Variant::kGeneral1 || v == Variant::kGeneral2 ||
         v == Variant::kGeneral3 || v == Variant::kGeneral4;
}

bool IsException(Variant v) {
  return v == Variant::kExcAdjacent || v == Variant::kExcOppositeTranslation ||
         v == Variant::kExcOppositeCenters;
}

TileClass TileClass::General1(int64_t p, int64_t q, Point anchor) {
  return {Variant::kGeneral1, p, q, anchor};
}
TileClass TileClass::General2(int64_t p, int64_t q) {
  return {Variant::kGeneral2, p, q, {}};
}
TileClass TileClass::General3(int64_t p, int64_t q, Point anchor) {
  return {Variant::kGeneral3, p, q, anchor};
}
TileClass TileClass::General4(int64_t p, int64_t q, Point anchor) {
  return {Variant::kGeneral4, p, q, anchor};
}
TileClass TileClass::Exception(Variant v) {
  if (!IsException(v)) throw DomainError("not an exception variant");
  return {v, 0, 0, {}};
}
TileClass TileClass::Trivial() { return {Variant::kTrivial, 0, 0, {}}; }

std::string TileClass::ToString() const {
  std::string s = VariantName(variant);
  if (IsGeneral(variant)) {
    s += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    if (variant != Variant::kGeneral2) s += "@" + anchor.ToString();
  }
  return s;
}

void NormalizeCenterSet(CenterSet* set) {
  std::sort(set->begin(), set->end());
  set->erase(std::unique(set->begin(), set->end()), set->end());
}

bool InUnitSquare(const Point& p) {
  return p.x >= 0 && p.x <= 1 && p.y >= 0 && p.y <= 1;
}

Point PatternToTile(const Point& rs, int64_t p, int64_t q) {
  if (p == 0 && q == 0) throw DomainError("(p,q) must be nonzero");
  Fraction n(p * p + q * q);
  return {(rs.x * p + rs.y * q) / n, (rs.y * p - rs.x * q) / n};
}

Point TileToPattern(const Point& z, int64_t p, int64_t q) {
  if (p == 0 && q == 0) throw DomainError("(p,q) must be nonzero");
  return {z.x * p - z.y * q, z.x * q + z.y * p};
}

void Validate(const TileClass& c) {
  auto fail = [&](const std::string& why) {
    throw DomainError(c.ToString() + ": " + why);
  };
  if (!IsGeneral(c.variant)) return;
  if (c.p == 0 && c.q == 0) fail("(p,q) must be nonzero");
  if (std::llabs(c.p) > 1'000'000 || std::llabs(c.q) > 1'000'000) {
    fail("(p,q) out of supported range");
  }
  bool sum_odd = IsOdd(c.p + c.q);
  switch (c.variant) {
    case Variant::kGeneral1:
      if (sum_odd) fail("General1 requires p+q even");
      break;
    case Variant::kGeneral2:
      if (!sum_odd) fail("General2 requires p+q odd");
      if (c.anchor != Point()) fail("General2 anchor is (0,0)");
      break;
    case Variant::kGeneral3:
      if (!sum_odd) fail("General3 requires p+q odd");
      if (c.anchor != Point(kHalf, 0) && c.anchor != Point(0, kHalf)) {
        fail("General3 anchor must be (1/2,0) or (0,1/2)");
      }
      break;
    case Variant::kGeneral4:
      if (!IsOdd(c.p) || !IsOdd(c.q)) fail("General4 requires p, q odd");
      if (c.anchor != Point() && c.anchor != Point(1, 0)) {
        fail("General4 anchor must be (0,0) or (1,0)");
      }
      break;
    default:
      break;
  }
}

CenterSet GenerateCenters(const TileClass& c) {
  Validate(c);
  switch (c.variant) {
    case Variant::kGeneral1: {
      // Lambda contains Z^2, so the anchor can be reduced into [0,1)^2.
      Point a(c.anchor.x - Fraction(c.anchor.x.Floor()),
              c.anchor.y - Fraction(c.anchor.y.Floor()));
      return EnumerateCoset(a, c.p, c.q, 1);
    }
    case Variant::kGeneral2:
    case Variant::kGeneral3:
      return EnumerateCoset(c.anchor, c.p, c.q, 1);
    case Variant::kGeneral4:
      return EnumerateCoset(c.anchor, c.p, c.q, 2);
    case Variant::kExcAdjacent:
      return {{0, kHalf}, {kHalf, 0}};
    case Variant::kExcOppositeTranslation:
    case Variant::kExcOppositeCenters:
      return {{kHalf, 0}, {kHalf, 1}};
    case Variant::kTrivial:
      return Corners();
  }
  return {};
}

TileClass Canonicalize(const TileClass& c) {
  Validate(c);
  if (!IsGeneral(c.variant)) return {c.variant, 0, 0, {}};
  TileClass out = c;
  CanonicalPQ(&out.p, &out.q);
  if (out.variant == Variant::kGeneral2 && out.p == 1 && out.q == 0) {
    return TileClass::Trivial();
  }
  if (out.variant == Variant::kGeneral1) {
    out.anchor = GenerateCenters(out).front();
  }
  return out;
}

Fraction CenterWeight(const Point& p) {
  int on_edge = (p.x == 0 || p.x == 1) + (p.y == 0 || p.y == 1);
  if (on_edge == 2) return Fraction(1, 4);
  if (on_edge == 1) return Fraction(1, 2);
  return 1;
}

Fraction WeightedCount(const CenterSet& set) {
  Fraction total;
  for (const Point& p : set) total += CenterWeight(p);
  return total;
}

Fraction ExpectedCount(const TileClass& c) {
  Validate(c);
  if (c.variant == Variant::kGeneral4) return Fraction(c.Norm(), 4);
  if (IsGeneral(c.variant)) return c.Norm();
  return 1;
}

TileClass ClassifyCenters(const CenterSet& input) {
  CenterSet set = input;
  NormalizeCenterSet(&set);
  if (set.empty()) throw DomainError("empty center set");
  for (const Point& z : set) {
    if (!InUnitSquare(z)) {
      throw DomainError("center outside the unit square: " + z.ToString());
    }
  }
  if (set == Corners()) return TileClass::Trivial();
  if (set == GenerateCenters(TileClass::Exception(Variant::kExcAdjacent))) {
    return TileClass::Exception(Variant::kExcAdjacent);
  }

  std::vector<Point> diffs;
  for (size_t i = 0; i < set.size(); ++i) {
    for (size_t j = 0; j < set.size(); ++j) {
      if (i != j) diffs.push_back(set[j] - set[i]);
    }
  }
  std::sort(diffs.begin(), diffs.end(), [](const Point& a, const Point& b) {
    return std::make_tuple(a.Norm2(), a) < std::make_tuple(b.Norm2(), b);
  });
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());

  std::set<std::tuple<int, int64_t, int64_t>> tried;
  auto attempt = [&](TileClass cand) -> std::optional<TileClass> {
    auto key = std::make_tuple(static_cast<int>(cand.variant), cand.p, cand.q);
    if (!tried.insert(key).second) return std::nullopt;
    if (GenerateCenters(cand) != set) return std::nullopt;
    return Canonicalize(cand);
  };

  for (Point w : diffs) {
    while (!(w.x > 0 && w.y <= 0)) w = Point(-w.y, w.x);
    Fraction inv = Fraction(1) / w.Norm2();
    std::optional<TileClass> found;
    if (inv.IsInteger()) {
      Fraction pf = inv * w.x, qf = -inv * w.y;
      if (!pf.IsInteger() || !qf.IsInteger()) continue;
      int64_t p = pf.num(), q = qf.num();
      if (!IsOdd(p + q)) {
        found = attempt(TileClass::General1(p, q, set.front()));
      } else if (Contains(set, Point())) {
        found = attempt(TileClass::General2(p, q));
      } else if (Contains(set, Point(kHalf, 0))) {
        found = attempt(TileClass::General3(p, q, {kHalf, 0}));
      } else if (Contains(set, Point(0, kHalf))) {
        found = attempt(TileClass::General3(p, q, {0, kHalf}));
      }
    } else if ((inv * 4).IsInteger()) {
      Fraction n = inv * 4;
      Fraction pf = n * w.x / 2, qf = -n * w.y / 2;
      if (!pf.IsInteger() || !qf.IsInteger()) continue;
      int64_t p = pf.num(), q = qf.num();
      if (!IsOdd(p) || !IsOdd(q)) continue;
      Point anchor = Contains(set, Point()) ? Point() : Point(1, 0);
      found = attempt(TileClass::General4(p, q, anchor));
    }
    if (found) return *found;
  }
  throw DomainError("center set is not the restriction of a rotation-center lattice");
}

const char* ReductionCaseName(ReductionCase c) {
  switch (c) {
    case ReductionCase::kF1:
      return "F1";
    case ReductionCase::kF2:
      return "F2";
    case ReductionCase::kG1:
      return "G1";
    case ReductionCase::kH1:
      return "H1";
    case ReductionCase::kH2:
      return "H2";
  }
  return "?";
}

std::optional<ReductionCase> ParseReductionCase(std::string_view name) {
  for (auto c : {ReductionCase::kF1, ReductionCase::kF2, ReductionCase::kG1,
                 ReductionCase::kH1, ReductionCase::kH2}) {
    if (EqualsIgnoreCase(name, ReductionCaseName(c))) return c;
  }
  return std::nullopt;
}

namespace {

// Lambda(p,q) itself: General1 anchored at 0 or General2.
TileClass LatticeClass(int64_t p, int64_t q) {
  if (IsOdd(p + q)) return TileClass::General2(p, q);
  return TileClass::General1(p, q, {});
}

}  // namespace

TileClass ReduceCase(ReductionCase rc, int64_t p, int64_t q, int64_t r0,
                     int64_t s0) {
  if (p == 0 && q == 0) throw DomainError("(p,q) must be nonzero");
  const int64_t n = p * p + q * q;
  const int64_t p1 = p + q, q1 = q - p;
  TileClass out;
  switch (rc) {
    case ReductionCase::kF1:
    case ReductionCase::kH1:
      // The anchor is itself a point of Lambda(p,q) (H1 up to the unit
      // translation (1,0)).
      out = LatticeClass(p, q);
      break;
    case ReductionCase::kF2:
    case ReductionCase::kH2: {
      Point anchor = rc == ReductionCase::kF2 ? Point() : Point(1, 0);
      if (IsOdd(p + q)) {
        out = TileClass::General4(p1, q1, anchor);
      } else {
        out = LatticeClass(p1 / 2, q1 / 2);
      }
      break;
    }
    case ReductionCase::kG1: {
      if (IsOdd(p + q)) {
        out = IsOdd(r0 + s0) ? TileClass::General3(p, q, {0, kHalf})
                             : TileClass::General3(p, q, {kHalf, 0});
      } else {
        Point anchor(kHalf + Fraction(-(r0 + s0) * p + q * (r0 - s0), 2 * n),
                     Fraction((r0 - s0) * p + q * (r0 + s0), 2 * n));
        out = TileClass::General1(p, q, anchor);
      }
      break;
    }
  }
  return Canonicalize(out);
}

}  // namespace tilesym
