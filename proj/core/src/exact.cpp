// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#include "tilesym/exact.hpp"

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace tilesym {

int64_t CheckedAdd(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 add");
  return r;
}

int64_t CheckedSub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 sub");
  return r;
}

int64_t CheckedMul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 mul");
  return r;
}

int64_t Gcd(int64_t a, int64_t b) {
  if (a == INT64_MIN || b == INT64_MIN) throw OverflowError("gcd of INT64_MIN");
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int64_t Lcm(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::llabs(CheckedMul(a / Gcd(a, b), b));
}

int64_t FloorDiv(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int64_t FloorMod(int64_t a, int64_t b) {
  int64_t m = a % b;
  if (m < 0) m += std::llabs(b);
  return m;
}

Fraction::Fraction(int64_t num, int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = CheckedSub(0, num);
    den = CheckedSub(0, den);
  }
  int64_t g = Gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Fraction Fraction::operator-() const {
  Fraction r;
  r.num_ = CheckedSub(0, num_);
  r.den_ = den_;
  return r;
}

Fraction& Fraction::operator+=(const Fraction& o) {
  if (den_ == o.den_) {
    *this = Fraction(CheckedAdd(num_, o.num_), den_);
    return *this;
  }
  int64_t g = Gcd(den_, o.den_);
  int64_t l = CheckedMul(den_ / g, o.den_);
  int64_t n = CheckedAdd(CheckedMul(num_, l / den_), CheckedMul(o.num_, l / o.den_));
  *this = Fraction(n, l);
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& o) { return *this += -o; }

Fraction& Fraction::operator*=(const Fraction& o) {
  int64_t g1 = Gcd(num_, o.den_);
  int64_t g2 = Gcd(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  int64_t n = CheckedMul(num_ / g1, o.num_ / g2);
  int64_t d = CheckedMul(den_ / g2, o.den_ / g1);
  *this = Fraction(n, d);
  return *this;
}

Fraction& Fraction::operator/=(const Fraction& o) {
  if (o.num_ == 0) throw DomainError("division by zero");
  Fraction inv(o.den_, o.num_);
  return *this *= inv;
}

__extension__ using Wide = __int128;

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  Wide l = static_cast<Wide>(a.num_) * b.den_;
  Wide r = static_cast<Wide>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Fraction::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

int64_t ParseInt(std::string_view s, std::string_view whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("not a rational number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Fraction Fraction::Parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(ParseInt(text, text));
  return Fraction(ParseInt(text.substr(0, slash), text),
                  ParseInt(text.substr(slash + 1), text));
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
  return os << f.ToString();
}

std::string Point::ToString() const {
  return "(" + x.ToString() + ", " + y.ToString() + ")";
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << p.ToString();
}

namespace {

// cos and sin of k quarter turns.
constexpr int kCos[4] = {1, 0, -1, 0};
constexpr int kSin[4] = {0, 1, 0, -1};

}  // namespace

int Dihedral::a() const { return kCos[k_]; }
int Dihedral::b() const { return m_ ? kSin[k_] : -kSin[k_]; }
int Dihedral::c() const { return kSin[k_]; }
int Dihedral::d() const { return m_ ? -kCos[k_] : kCos[k_]; }

Point Dihedral::Apply(const Point& p) const {
  return {Fraction(a()) * p.x + Fraction(b()) * p.y,
          Fraction(c()) * p.x + Fraction(d()) * p.y};
}

Dihedral Dihedral::Inverse() const {
  if (m_) return *this;
  return Dihedral(-k_, false);
}

Dihedral Dihedral::operator*(const Dihedral& o) const {
  int k = m_ ? k_ - o.k_ : k_ + o.k_;
  return Dihedral(k, m_ != o.m_);
}

std::string Dihedral::ToString() const {
  std::string s = "R" + std::to_string(90 * k_);
  if (m_) s += "*M";
  return s;
}

const char* AxisDirectionName(AxisDirection d) {
  switch (d) {
    case AxisDirection::kHorizontal:
      return "horizontal";
    case AxisDirection::kDiagonal:
      return "diagonal";
    case AxisDirection::kVertical:
      return "vertical";
    case AxisDirection::kAntidiagonal:
      return "antidiagonal";
  }
  return "?";
}

Point AxisVector(AxisDirection d) {
  switch (d) {
    case AxisDirection::kHorizontal:
      return {1, 0};
    case AxisDirection::kDiagonal:
      return {1, 1};
    case AxisDirection::kVertical:
      return {0, 1};
    case AxisDirection::kAntidiagonal:
      return {1, -1};
  }
  return {};
}

Point AxisNormal(AxisDirection d) {
  switch (d) {
    case AxisDirection::kHorizontal:
      return {0, 1};
    case AxisDirection::kDiagonal:
      return {-1, 1};
    case AxisDirection::kVertical:
      return {1, 0};
    case AxisDirection::kAntidiagonal:
      return {1, 1};
  }
  return {};
}

bool Axis::Contains(const Point& p) const {
  return AxisNormal(direction).Dot(p) == offset;
}

std::string Axis::ToString() const {
  switch (direction) {
    case AxisDirection::kHorizontal:
      return "y=" + offset.ToString();
    case AxisDirection::kDiagonal:
      return "y-x=" + offset.ToString();
    case AxisDirection::kVertical:
      return "x=" + offset.ToString();
    case AxisDirection::kAntidiagonal:
      return "x+y=" + offset.ToString();
  }
  return "?";
}

std::string ToString(const IsoClass& c) {
  struct Visitor {
    std::string operator()(const IdentityClass&) const { return "identity"; }
    std::string operator()(const TranslationClass& t) const {
      return "translation " + t.vector.ToString();
    }
    std::string operator()(const RotationClass& r) const {
      return "rotation order " + std::to_string(r.order) + " at " +
             r.center.ToString() + (r.sense > 0 ? " ccw" : " cw");
    }
    std::string operator()(const ReflectionClass& r) const {
      return "reflection " + r.axis.ToString();
    }
    std::string operator()(const GlideClass& g) const {
      return "glide " + g.axis.ToString() + " by " + g.shift.ToString();
    }
  };
  return std::visit(Visitor{}, c);
}

Isometry Isometry::About(const Point& center, Dihedral linear) {
  return {linear, center - linear.Apply(center)};
}

Isometry Isometry::Rotation(const Point& center, int k) {
  return About(center, Dihedral::Rotation(k));
}

Isometry Isometry::Reflection(const Axis& axis) {
  // Mirror k for each direction: R^k M fixes the axis vector.
  int k = static_cast<int>(axis.direction);
  Point n = AxisNormal(axis.direction);
  return {Dihedral(k, true), (Fraction(2) * axis.offset / n.Norm2()) * n};
}

std::string Isometry::ToString() const {
  return linear_.ToString() + "+" + shift_.ToString();
}

Isometry Compose(const Isometry& f, const Isometry& g) {
  return {f.linear() * g.linear(), f.linear().Apply(g.shift()) + f.shift()};
}

Isometry Invert(const Isometry& f) {
  Dihedral li = f.linear().Inverse();
  return {li, -li.Apply(f.shift())};
}

IsoClass Classify(const Isometry& f) {
  const Dihedral& l = f.linear();
  const Point& s = f.shift();
  if (!l.mirrored()) {
    if (l.quarter_turns() == 0) {
      if (s == Point()) return IdentityClass{};
      return TranslationClass{s};
    }
    // Solve (I - L) c = s.
    Fraction m00(1 - l.a()), m01(-l.b()), m10(-l.c()), m11(1 - l.d());
    Fraction det = m00 * m11 - m01 * m10;
    Point c{(m11 * s.x - m01 * s.y) / det, (m00 * s.y - m10 * s.x) / det};
    int k = l.quarter_turns();
    if (k == 2) return RotationClass{2, c, 1};
    return RotationClass{4, c, k == 1 ? 1 : -1};
  }
  auto dir = static_cast<AxisDirection>(l.quarter_turns());
  Point d = AxisVector(dir);
  Point n = AxisNormal(dir);
  Point glide = (s.Dot(d) / d.Norm2()) * d;
  Axis axis{dir, n.Dot(s) / Fraction(2)};
  if (glide == Point()) return ReflectionClass{axis};
  return GlideClass{axis, glide};
}

}  // namespace tilesym
