// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.
//
// Symmetries induced on a tile by a neighbouring copy of itself, the
// translation identities built from them, and grid orbit closure.
//
// Everything symbolic is affine in the order-4 center (a,b) of the tile.
// A neighbour copy occupying the unit cell at offset o with orientation
// code i is placed by phi = T(o) R^k about (1/2,1/2), with k = 0, 3, 2, 1
// for codes 1..4. The rotation g about (a,b) then induces
// phi_Y^-1 g^k phi_X whenever g^k carries cell X onto cell Y.

#ifndef TILESYM_CLOSURE_HPP_
#define TILESYM_CLOSURE_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tilesym/exact.hpp"

namespace tilesym {

// c0 + ca*a + cb*b.
struct AffineForm {
  Fraction c0;
  Fraction ca;
  Fraction cb;

  AffineForm() = default;
  AffineForm(Fraction c0_in, Fraction ca_in = 0, Fraction cb_in = 0)  // NOLINT
      : c0(c0_in), ca(ca_in), cb(cb_in) {}
  static AffineForm A() { return {0, 1, 0}; }
  static AffineForm B() { return {0, 0, 1}; }

  Fraction Eval(const Fraction& a, const Fraction& b) const {
    return c0 + ca * a + cb * b;
  }
  bool IsZero() const { return c0.IsZero() && ca.IsZero() && cb.IsZero(); }
  bool IsConstant() const { return ca.IsZero() && cb.IsZero(); }
  std::string ToString() const;

  AffineForm operator-() const { return {-c0, -ca, -cb}; }
  friend AffineForm operator+(const AffineForm& x, const AffineForm& y) {
    return {x.c0 + y.c0, x.ca + y.ca, x.cb + y.cb};
  }
  friend AffineForm operator-(const AffineForm& x, const AffineForm& y) {
    return x + (-y);
  }
  friend AffineForm operator*(const Fraction& k, const AffineForm& x) {
    return {k * x.c0, k * x.ca, k * x.cb};
  }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
  friend auto operator<=>(const AffineForm&, const AffineForm&) = default;
};

struct AffinePoint {
  AffineForm x;
  AffineForm y;

  AffinePoint() = default;
  AffinePoint(AffineForm x_in, AffineForm y_in) : x(x_in), y(y_in) {}
  // The constant point p.
  static AffinePoint Constant(const Point& p) { return {p.x, p.y}; }
  // (a, b).
  static AffinePoint Center() { return {AffineForm::A(), AffineForm::B()}; }

  Point Eval(const Fraction& a, const Fraction& b) const {
    return {x.Eval(a, b), y.Eval(a, b)};
  }
  bool IsZero() const { return x.IsZero() && y.IsZero(); }
  bool IsConstant() const { return x.IsConstant() && y.IsConstant(); }
  Point ConstantValue() const { return {x.c0, y.c0}; }
  std::string ToString() const;

  friend AffinePoint operator+(const AffinePoint& p, const AffinePoint& q) {
    return {p.x + q.x, p.y + q.y};
  }
  friend AffinePoint operator-(const AffinePoint& p, const AffinePoint& q) {
    return {p.x - q.x, p.y - q.y};
  }
  friend AffinePoint operator-(const AffinePoint& p) { return {-p.x, -p.y}; }
  friend AffinePoint operator*(const Fraction& k, const AffinePoint& p) {
    return {k * p.x, k * p.y};
  }
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
  friend auto operator<=>(const AffinePoint&, const AffinePoint&) = default;
};

AffinePoint ApplyLinear(const Dihedral& l, const AffinePoint& p);
// Lexicographically smallest of p, Rp, R^2p, R^3p.
AffinePoint RotationOrbitRep(const AffinePoint& p);

// z -> linear z + shift with a symbolic shift.
class SymIsometry {
 public:
  SymIsometry() = default;
  SymIsometry(Dihedral linear, AffinePoint shift)
      : linear_(linear), shift_(shift) {}
  static SymIsometry Translation(const AffinePoint& v) { return {Dihedral(), v}; }
  static SymIsometry Rotation(const AffinePoint& center, int k);

  const Dihedral& linear() const { return linear_; }
  const AffinePoint& shift() const { return shift_; }
  AffinePoint Apply(const AffinePoint& p) const {
    return ApplyLinear(linear_, p) + shift_;
  }
  Isometry Instantiate(const Fraction& a, const Fraction& b) const {
    return {linear_, shift_.Eval(a, b)};
  }
  friend bool operator==(const SymIsometry&, const SymIsometry&) = default;

 private:
  Dihedral linear_;
  AffinePoint shift_;
};

// f o g.
SymIsometry Compose(const SymIsometry& f, const SymIsometry& g);
SymIsometry Invert(const SymIsometry& f);

enum class CaseFamily {
  kSingle,      // A-H: one neighbour left of or below the tile
  kCorner,      // c1=1..4: one neighbour at the lower-left corner
  kPair,        // AE..DH: left and lower neighbours together
  kDF3,         // DF31..DF34: DF with c1=3 and a right neighbour
  kDF33,        // DF331..DF334: DF33 with a lower-right neighbour
};

struct PlacementCase {
  CaseFamily family = CaseFamily::kSingle;
  // Canonical spelling: "A", "c1=2", "BG", "DF32", "DF334".
  std::string code;

  // Throws DomainError for unknown codes. Accepts "c1=2" and "c2".
  static PlacementCase Parse(std::string_view code);
  static std::vector<PlacementCase> All();
};

struct TileSlot {
  std::string name;
  int dx = 0;
  int dy = 0;
  int orientation = 1;  // 1..4

  SymIsometry Placement() const;
};

struct CaseLayout {
  std::vector<TileSlot> tiles;
  // Ordered (source, target) tile indices; both directions are listed.
  std::vector<std::pair<int, int>> interactions;
};

CaseLayout LayoutFor(const PlacementCase& c);

struct InducedSet {
  std::vector<AffinePoint> order4;
  // Half-turn centers distinct from every order-4 center.
  std::vector<AffinePoint> order2;
  // Nonzero translation vectors, one per +/- pair.
  std::vector<AffinePoint> translations;
  // Every induced isometry, in discovery order.
  std::vector<SymIsometry> isometries;
  // Rotation-orbit representatives of the vectors the induced symmetries
  // force into the order-4 center lattice about (a,b).
  std::vector<AffinePoint> generator_orbits;
  // The tabulated (u, v) for this case, when one exists.
  std::optional<std::array<AffinePoint, 2>> basis;
};

// Symbolic isometries induced by the layout's interactions. Cell overlap is
// decided at fixed interior sample parameters; throws std::logic_error if
// the samples disagree.
InducedSet InducedSymmetries(const PlacementCase& c);
InducedSet InducedSymmetries(const CaseLayout& layout);

// Tabulated translation-invariance vectors (u, v = R u) keyed by case code
// ("A".."H", "c1=1".."c1=4", "DF31".."DF34", "DF331".."DF334") or by a pair
// code, which maps to its pair-group entry.
std::optional<std::array<AffinePoint, 2>> InvarianceBasis(std::string_view code);

// sum_i (alpha_p[i] p + alpha_q[i] q) * vec_i = p r1 + q r2.
struct IdentityTerm {
  Fraction alpha_p;
  Fraction alpha_q;
  std::string basis;  // key into InvarianceBasis
  bool second = false;  // v instead of u
};

struct PeriodicityIdentity {
  std::string name;
  std::vector<IdentityTerm> terms;
  Point r1;
  Point r2;
};

const std::vector<PeriodicityIdentity>& PeriodicityIdentities();
const PeriodicityIdentity& FindIdentity(std::string_view name);
// True if the identity holds as a polynomial identity in a, b, p, q.
bool IdentityHolds(const PeriodicityIdentity& id);

enum class PeriodicityStatus { kResolved, kInconclusive };

struct PeriodicityResult {
  std::string code;
  PeriodicityStatus status = PeriodicityStatus::kInconclusive;
  std::vector<std::string> identities;
  // Basis of the order-4 center lattice about (a,b) when resolved.
  std::array<Point, 2> basis;
  // (a,b) + p b1 + q b2.
  AffinePoint center;
  std::string note;
};

// Codes: the 16 pairs, BG1..BG4, CH1..CH4, DF1..DF4, DF31..DF34,
// DF331..DF334, and the intermediate nodes DF, DF3, DF33.
std::vector<std::string> PeriodicityCodes();
PeriodicityResult DerivePeriodicity(std::string_view code, int64_t p,
                                    int64_t q);

// Cells (i,j) of an R x R grid over [0,1]^2.
class CellSet {
 public:
  explicit CellSet(int resolution = 1)
      : resolution_(resolution),
        bits_(static_cast<size_t>(resolution) * resolution, 0) {}
  int resolution() const { return resolution_; }
  bool Contains(int i, int j) const { return bits_[Index(i, j)] != 0; }
  void Insert(int i, int j) { bits_[Index(i, j)] = 1; }
  int64_t Count() const;
  bool IsSubsetOf(const CellSet& o) const;
  // Cells in this set and not in o, in (i,j) order.
  std::vector<std::pair<int, int>> Minus(const CellSet& o) const;
  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  size_t Index(int i, int j) const {
    return static_cast<size_t>(i) * resolution_ + j;
  }
  int resolution_;
  std::vector<uint8_t> bits_;
};

// A closed convex polygon with rational vertices.
using Region = std::vector<Point>;
Region Rectangle(const Fraction& x0, const Fraction& x1, const Fraction& y0,
                 const Fraction& y1);
bool RegionContains(const Region& r, const Point& p);
// Cells whose centers lie in the region.
CellSet Rasterize(const Region& r, int resolution);

// Cells reachable from the seed cells under the generators and their
// inverses along paths that stay inside the unit square. Requires
// resolution * shift to be integral for every generator.
CellSet OrbitClosure(const std::vector<Isometry>& generators,
                     const CellSet& seed);
CellSet OrbitClosure(const std::vector<Isometry>& generators,
                     const Region& seed, int resolution);

enum class CoverageCase { kE, kF, kG, kH };
const char* CoverageCaseName(CoverageCase c);
std::optional<CoverageCase> ParseCoverageCase(std::string_view name);

// Five parameter pairs hitting a+b<1/2, a+b>=1/2, b=0, a=1/2 and a=b.
std::vector<std::pair<Fraction, Fraction>> DefaultCoverageSamples();

// Generators of the case at (a,b): induced rotations and translations.
std::vector<Isometry> CoverageGenerators(CoverageCase c, const Fraction& a,
                                         const Fraction& b);
// The generating region the orbit starts from.
Region CoverageSeed(CoverageCase c, const Fraction& a, const Fraction& b);
// LCM of all denominators involved, times 8.
int CoverageResolution(CoverageCase c, const Fraction& a, const Fraction& b);
// Stated covered region: full square for E and H, the union formula for F,
// the lower bound for G.
CellSet ExpectedCoverage(CoverageCase c, const Fraction& a, const Fraction& b,
                         int resolution);

struct CoverageReport {
  CoverageCase which = CoverageCase::kE;
  Fraction a;
  Fraction b;
  int resolution = 0;
  bool holds = false;
  int64_t covered = 0;
  int64_t expected = 0;
  // Expected cells not covered, then (for E, F, H) covered cells not
  // expected; at most 16 of each.
  std::vector<std::pair<int, int>> missing;
  std::vector<std::pair<int, int>> extra;
};

// Preconditions: 0 <= b <= a <= 1/2, a > 0, and (a,b) != (1/2,0) for G.
// resolution 0 selects CoverageResolution.
CoverageReport VerifyCoverage(CoverageCase c, const Fraction& a,
                              const Fraction& b, int resolution = 0);

}  // namespace tilesym

#endif  // TILESYM_CLOSURE_HPP_
