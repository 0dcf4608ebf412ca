// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.
//
// Exact rational scalars, points and the isometries of the square lattice.

#ifndef TILESYM_EXACT_HPP_
#define TILESYM_EXACT_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace tilesym {

// Raised when a mathematical precondition of a module operation fails.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when 64-bit rational arithmetic would wrap.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

int64_t CheckedAdd(int64_t a, int64_t b);
int64_t CheckedSub(int64_t a, int64_t b);
int64_t CheckedMul(int64_t a, int64_t b);
int64_t Gcd(int64_t a, int64_t b);
int64_t Lcm(int64_t a, int64_t b);
// Floor division for any sign of a; b must be nonzero.
int64_t FloorDiv(int64_t a, int64_t b);
// Mathematical modulus in [0, |b|).
int64_t FloorMod(int64_t a, int64_t b);

class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(int64_t value) : num_(value) {}  // NOLINT(runtime/explicit)
  Fraction(int64_t num, int64_t den);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool IsZero() const { return num_ == 0; }
  bool IsInteger() const { return den_ == 1; }
  int64_t Floor() const { return FloorDiv(num_, den_); }
  int64_t Ceil() const { return -FloorDiv(-num_, den_); }
  int Sign() const { return (num_ > 0) - (num_ < 0); }
  Fraction Abs() const { return num_ < 0 ? -*this : *this; }
  double ToDouble() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "n" or "n/d".
  std::string ToString() const;
  // Accepts "n", "n/d" and surrounding whitespace.
  static Fraction Parse(std::string_view text);

  Fraction operator-() const;
  Fraction& operator+=(const Fraction& o);
  Fraction& operator-=(const Fraction& o);
  Fraction& operator*=(const Fraction& o);
  Fraction& operator/=(const Fraction& o);

  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Fraction& a,
                                          const Fraction& b);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

struct Point {
  Fraction x;
  Fraction y;

  Point() = default;
  Point(Fraction x_in, Fraction y_in) : x(x_in), y(y_in) {}

  Point& operator+=(const Point& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Point& operator-=(const Point& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator-(const Point& a) { return {-a.x, -a.y}; }
  friend Point operator*(const Fraction& k, const Point& a) {
    return {k * a.x, k * a.y};
  }
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

  Fraction Dot(const Point& o) const { return x * o.x + y * o.y; }
  Fraction Cross(const Point& o) const { return x * o.y - y * o.x; }
  Fraction Norm2() const { return Dot(*this); }
  std::string ToString() const;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

// Element R^k * M^m of the dihedral group of order 8, where R is the
// counterclockwise quarter turn [[0,-1],[1,0]] and M = diag(1,-1).
class Dihedral {
 public:
  constexpr Dihedral() = default;
  constexpr Dihedral(int k, bool mirror) : k_(((k % 4) + 4) % 4), m_(mirror) {}

  static constexpr Dihedral Identity() { return {0, false}; }
  static constexpr Dihedral Rotation(int k) { return {k, false}; }
  static constexpr Dihedral Mirror() { return {0, true}; }
  // All 8 elements: rotations 0..3 then mirrored 0..3.
  static Dihedral FromIndex(int index) { return {index % 4, index >= 4}; }
  int Index() const { return k_ + (m_ ? 4 : 0); }

  int quarter_turns() const { return k_; }
  bool mirrored() const { return m_; }
  int Det() const { return m_ ? -1 : 1; }

  // Integer matrix entries a b / c d.
  int a() const;
  int b() const;
  int c() const;
  int d() const;

  Point Apply(const Point& p) const;
  template <typename T>
  void ApplyInt(T x, T y, T* ox, T* oy) const {
    *ox = a() * x + b() * y;
    *oy = c() * x + d() * y;
  }

  Dihedral Inverse() const;
  // (this * o): apply o first.
  Dihedral operator*(const Dihedral& o) const;
  friend bool operator==(const Dihedral&, const Dihedral&) = default;

  std::string ToString() const;

 private:
  int k_ = 0;
  bool m_ = false;
};

// The four lattice directions of mirror and glide axes.
enum class AxisDirection {
  kHorizontal,    // y = c
  kDiagonal,      // y - x = c
  kVertical,      // x = c
  kAntidiagonal,  // x + y = c
};

const char* AxisDirectionName(AxisDirection d);
// Vector along the axis: (1,0), (1,1), (0,1), (1,-1).
Point AxisVector(AxisDirection d);
// Normal used for offsets: (0,1), (-1,1), (1,0), (1,1).
Point AxisNormal(AxisDirection d);

// The line {z : normal(direction) . z = offset}.
struct Axis {
  AxisDirection direction = AxisDirection::kHorizontal;
  Fraction offset;

  bool Contains(const Point& p) const;
  std::string ToString() const;
  friend bool operator==(const Axis&, const Axis&) = default;
  friend auto operator<=>(const Axis&, const Axis&) = default;
};

struct IdentityClass {
  friend bool operator==(const IdentityClass&, const IdentityClass&) = default;
};
struct TranslationClass {
  Point vector;
  friend bool operator==(const TranslationClass&,
                         const TranslationClass&) = default;
};
struct RotationClass {
  int order = 2;  // 2 or 4
  Point center;
  int sense = 1;  // +1 counterclockwise, -1 clockwise; +1 for half turns
  friend bool operator==(const RotationClass&, const RotationClass&) = default;
};
struct ReflectionClass {
  Axis axis;
  friend bool operator==(const ReflectionClass&,
                         const ReflectionClass&) = default;
};
struct GlideClass {
  Axis axis;
  Point shift;  // nonzero, parallel to the axis
  friend bool operator==(const GlideClass&, const GlideClass&) = default;
};

using IsoClass = std::variant<IdentityClass, TranslationClass, RotationClass,
                              ReflectionClass, GlideClass>;

std::string ToString(const IsoClass& c);

// z -> linear * z + shift.
class Isometry {
 public:
  Isometry() = default;
  Isometry(Dihedral linear, Point shift) : linear_(linear), shift_(shift) {}

  static Isometry Identity() { return {}; }
  static Isometry Translation(const Point& v) { return {Dihedral(), v}; }
  // Counterclockwise rotation by k quarter turns about center.
  static Isometry Rotation(const Point& center, int k);
  static Isometry Reflection(const Axis& axis);
  // Linear part L applied about a fixed point: z -> L(z - c) + c.
  static Isometry About(const Point& center, Dihedral linear);

  const Dihedral& linear() const { return linear_; }
  const Point& shift() const { return shift_; }

  Point Apply(const Point& p) const { return linear_.Apply(p) + shift_; }
  Point operator()(const Point& p) const { return Apply(p); }

  friend bool operator==(const Isometry&, const Isometry&) = default;
  std::string ToString() const;

 private:
  Dihedral linear_;
  Point shift_;
};

// f o g: g is applied first.
Isometry Compose(const Isometry& f, const Isometry& g);
Isometry Invert(const Isometry& f);
IsoClass Classify(const Isometry& f);

}  // namespace tilesym

template <>
struct std::hash<tilesym::Fraction> {
  size_t operator()(const tilesym::Fraction& f) const noexcept {
    return std::hash<int64_t>()(f.num()) * 1000003u ^
           std::hash<int64_t>()(f.den());
  }
};

template <>
struct std::hash<tilesym::Point> {
  size_t operator()(const tilesym::Point& p) const noexcept {
    return std::hash<tilesym::Fraction>()(p.x) * 31u ^
           std::hash<tilesym::Fraction>()(p.y);
  }
};

#endif  // TILESYM_EXACT_HPP_
