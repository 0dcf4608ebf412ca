// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#include <algorithm>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tilesym/lattice.hpp"

namespace tilesym {
namespace {

const Fraction kHalf(1, 2);

CenterSet Corners() { return {{0, 0}, {0, 1}, {1, 0}, {1, 1}}; }

CenterSet Sorted(CenterSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

// ----------------------------------------------------------------------------
// Coordinate maps

TEST(PatternToTile, Examples) {
  EXPECT_EQ(PatternToTile({1, 0}, 1, 2), Point(Fraction(1, 5), Fraction(-2, 5)));
  EXPECT_EQ(PatternToTile({3, -2}, 3, -2), Point(1, 0));
  EXPECT_EQ(PatternToTile({-2, 1}, 1, 2), Point(0, 1));
}

TEST(PatternToTile, RoundTrip) {
  for (int64_t p = -3; p <= 3; ++p) {
    for (int64_t q = -3; q <= 3; ++q) {
      if (p == 0 && q == 0) continue;
      for (int r = -2; r <= 2; ++r) {
        Point rs(Fraction(r, 3), Fraction(1 - r, 2));
        EXPECT_EQ(TileToPattern(PatternToTile(rs, p, q), p, q), rs);
      }
    }
  }
}

TEST(PatternToTile, ZeroVectorIsAnError) {
  EXPECT_THROW(PatternToTile({1, 0}, 0, 0), DomainError);
  EXPECT_THROW(TileToPattern({1, 0}, 0, 0), DomainError);
}

// ----------------------------------------------------------------------------
// GenerateCenters

TEST(GenerateCenters, General2OneTwo) {
  CenterSet want = Corners();
  for (Point z : {Point(Fraction(2, 5), Fraction(1, 5)), Point(Fraction(4, 5), Fraction(2, 5)),
                  Point(Fraction(3, 5), Fraction(4, 5)), Point(Fraction(1, 5), Fraction(3, 5))}) {
    want.push_back(z);
  }
  EXPECT_EQ(GenerateCenters(TileClass::General2(1, 2)), Sorted(want));
}

TEST(GenerateCenters, General1OneOneHasCenterInTheMiddle) {
  CenterSet want = Corners();
  want.emplace_back(kHalf, kHalf);
  EXPECT_EQ(GenerateCenters(TileClass::General1(1, 1)), Sorted(want));
}

TEST(GenerateCenters, General3OneZero) {
  EXPECT_EQ(GenerateCenters(TileClass::General3(1, 0)),
            CenterSet({{kHalf, 0}, {kHalf, 1}}));
}

TEST(GenerateCenters, General3OneTwoHasSixthCenter) {
  CenterSet c = GenerateCenters(TileClass::General3(1, 2, {kHalf, 0}));
  EXPECT_NE(std::find(c.begin(), c.end(), Point(Fraction(1, 10), Fraction(4, 5))), c.end());
  EXPECT_NE(std::find(c.begin(), c.end(), Point(Fraction(3, 10), Fraction(2, 5))), c.end());
  EXPECT_EQ(WeightedCount(c), 5);
}

TEST(GenerateCenters, Exceptions) {
  EXPECT_EQ(GenerateCenters(TileClass::Exception(Variant::kExcAdjacent)),
            CenterSet({{0, kHalf}, {kHalf, 0}}));
  for (Variant v : {Variant::kExcOppositeTranslation, Variant::kExcOppositeCenters}) {
    EXPECT_EQ(GenerateCenters(TileClass::Exception(v)), CenterSet({{kHalf, 0}, {kHalf, 1}}));
  }
  EXPECT_EQ(GenerateCenters(TileClass::Trivial()), Corners());
}

TEST(GenerateCenters, InvariantViolationsAreErrors) {
  EXPECT_THROW(GenerateCenters(TileClass::General1(1, 2)), DomainError);
  EXPECT_THROW(GenerateCenters(TileClass::General2(1, 1)), DomainError);
  EXPECT_THROW(GenerateCenters(TileClass::General3(2, 0)), DomainError);
  EXPECT_THROW(GenerateCenters(TileClass::General3(1, 2, {0, 0})), DomainError);
  EXPECT_THROW(GenerateCenters(TileClass::General4(1, 2)), DomainError);
  EXPECT_THROW(GenerateCenters(TileClass::General4(1, 3, {kHalf, 0})), DomainError);
  EXPECT_THROW(GenerateCenters(TileClass::General1(0, 0)), DomainError);
  EXPECT_THROW(TileClass::Exception(Variant::kGeneral1), DomainError);
}

// ----------------------------------------------------------------------------
// WeightedCount

TEST(WeightedCount, Examples) {
  EXPECT_EQ(WeightedCount(GenerateCenters(TileClass::General2(1, 0))), 1);
  EXPECT_EQ(WeightedCount(GenerateCenters(TileClass::General1(2, 0))), 4);
  EXPECT_EQ(WeightedCount(GenerateCenters(TileClass::General4(1, 3))), Fraction(5, 2));
}

TEST(WeightedCount, CountLawAgainstBruteForce) {
  for (const TileClass& c : oracle::ClassesUpToNorm(25)) {
    CenterSet got = GenerateCenters(c);
    EXPECT_EQ(got, oracle::BruteForceCenters(c)) << c.ToString();
    EXPECT_EQ(WeightedCount(got), oracle::FormulaCount(c)) << c.ToString();
    EXPECT_EQ(oracle::BruteForceWeight(got), WeightedCount(got)) << c.ToString();
    EXPECT_EQ(ExpectedCount(c), oracle::FormulaCount(c)) << c.ToString();
  }
}

// ----------------------------------------------------------------------------
// ClassifyCenters

TEST(ClassifyCenters, Examples) {
  EXPECT_EQ(ClassifyCenters({{0, kHalf}, {kHalf, 0}}).variant, Variant::kExcAdjacent);
  EXPECT_EQ(ClassifyCenters(Corners()), TileClass::Trivial());
  TileClass g4 = ClassifyCenters(GenerateCenters(TileClass::General4(1, 3)));
  EXPECT_EQ(g4.variant, Variant::kGeneral4);
  EXPECT_EQ(g4, Canonicalize(TileClass::General4(1, 3)));
  EXPECT_EQ(g4.p * g4.p + g4.q * g4.q, 10);
}

TEST(ClassifyCenters, InconsistentSetIsAnError) {
  EXPECT_THROW(ClassifyCenters({{Fraction(1, 3), Fraction(1, 7)}}), DomainError);
  EXPECT_THROW(ClassifyCenters({}), DomainError);
  CenterSet broken = GenerateCenters(TileClass::General2(1, 2));
  broken.pop_back();
  EXPECT_THROW(ClassifyCenters(broken), DomainError);
}

TEST(ClassifyCenters, RoundTrip) {
  for (const TileClass& c : oracle::ClassesUpToNorm(25)) {
    TileClass got = ClassifyCenters(GenerateCenters(c));
    EXPECT_EQ(got, Canonicalize(c)) << c.ToString();
    EXPECT_EQ(GenerateCenters(got), GenerateCenters(c)) << c.ToString();
  }
}

TEST(ClassifyCenters, MirrorCovariance) {
  for (const TileClass& c : oracle::ClassesUpToNorm(25)) {
    CenterSet mirrored;
    for (const Point& z : GenerateCenters(c)) mirrored.emplace_back(1 - z.x, z.y);
    std::sort(mirrored.begin(), mirrored.end());
    TileClass m = c;
    std::swap(m.p, m.q);
    if (c.variant == Variant::kGeneral1) m.anchor = {1 - c.anchor.x, c.anchor.y};
    if (c.variant == Variant::kGeneral4) m.anchor = {1 - c.anchor.x, c.anchor.y};
    EXPECT_EQ(ClassifyCenters(mirrored), Canonicalize(m)) << c.ToString();
  }
}

TEST(Canonicalize, PrefersPositiveP) {
  TileClass c = Canonicalize(TileClass::General2(-2, 1));
  EXPECT_GT(c.p, 0);
  EXPECT_GE(c.q, 0);
  EXPECT_EQ(c.p * c.p + c.q * c.q, 5);
  EXPECT_EQ(Canonicalize(TileClass::General2(0, 1)), TileClass::Trivial());
}

// ----------------------------------------------------------------------------
// ReduceCase

TEST(ReduceCase, Examples) {
  // p + q odd
  TileClass h1 = ReduceCase(ReductionCase::kH1, 1, 2, 1, 0);
  EXPECT_TRUE(h1.variant == Variant::kGeneral1 || h1.variant == Variant::kGeneral2);
  EXPECT_EQ(ReduceCase(ReductionCase::kG1, 1, 2, 1, 1),
            Canonicalize(TileClass::General3(1, 2, {kHalf, 0})));
  EXPECT_EQ(ReduceCase(ReductionCase::kF2, 1, 2, 0, 0).variant, Variant::kGeneral4);
}

TEST(ReduceCase, ZeroVectorIsAnError) {
  EXPECT_THROW(ReduceCase(ReductionCase::kF1, 0, 0, 1, 1), DomainError);
}

TEST(ReduceCase, AgreesWithDirectInstantiation) {
  for (ReductionCase rc : {ReductionCase::kF1, ReductionCase::kF2, ReductionCase::kG1,
                           ReductionCase::kH1, ReductionCase::kH2}) {
    for (int64_t p = -4; p <= 4; ++p) {
      for (int64_t q = -4; q <= 4; ++q) {
        if (p == 0 && q == 0) continue;
        for (int64_t r0 = -4; r0 <= 4; ++r0) {
          for (int64_t s0 = -4; s0 <= 4; ++s0) {
            CenterSet want = oracle::DirectReductionCenters(rc, p, q, r0, s0);
            EXPECT_EQ(GenerateCenters(ReduceCase(rc, p, q, r0, s0)), want)
                << ReductionCaseName(rc) << " p=" << p << " q=" << q << " r0=" << r0
                << " s0=" << s0;
          }
        }
      }
    }
  }
}

TEST(ReduceCase, NamesRoundTrip) {
  for (ReductionCase rc : {ReductionCase::kF1, ReductionCase::kF2, ReductionCase::kG1,
                           ReductionCase::kH1, ReductionCase::kH2}) {
    EXPECT_EQ(ParseReductionCase(ReductionCaseName(rc)), rc);
  }
  EXPECT_FALSE(ParseReductionCase("Z9").has_value());
}

}  // namespace
}  // namespace tilesym
