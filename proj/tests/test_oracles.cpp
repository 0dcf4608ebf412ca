// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.
//
// Sanity checks for the test oracles themselves.

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "parse_detail.hpp"

namespace tilesym {
namespace {

const Fraction kHalf(1, 2);

TEST(OracleParser, AffineForms) {
  EXPECT_EQ(oracle::ParseAffineForm("1/2"), AffineForm(kHalf));
  EXPECT_EQ(oracle::ParseAffineForm("-b"), AffineForm(0, 0, -1));
  EXPECT_EQ(oracle::ParseAffineForm("2a"), AffineForm(0, 2, 0));
  EXPECT_EQ(oracle::ParseAffineForm("1/2a"), AffineForm(0, kHalf, 0));
  EXPECT_EQ(oracle::ParseAffineForm("(1+a-b)/2"), AffineForm(kHalf, kHalf, -kHalf));
  EXPECT_EQ(oracle::ParseAffineForm("1/2 + a - 3b"), AffineForm(kHalf, 1, -3));
  EXPECT_EQ(oracle::ParseAffineForm("-(a+b)"), AffineForm(0, -1, -1));
  EXPECT_THROW(oracle::ParseAffineForm("a+"), std::exception);
  EXPECT_THROW(oracle::ParseAffineForm("c"), std::exception);
}

TEST(OracleParser, Points) {
  EXPECT_EQ(oracle::ParseAffinePoint("1/2+a", "b"),
            AffinePoint(AffineForm(kHalf, 1, 0), AffineForm::B()));
  EXPECT_EQ(oracle::ParseAffinePointText("(a, 1-b)"),
            AffinePoint(AffineForm::A(), AffineForm(1, 0, -1)));
  auto parts = oracle::SplitTopLevel("(a,b), (1,2)", ",", false);
  EXPECT_EQ(parts.size(), 2u);
}

TEST(OracleBruteForce, SmallCases) {
  EXPECT_EQ(oracle::BruteForceCenters(TileClass::General2(1, 0)).size(), 4u);
  EXPECT_EQ(oracle::BruteForceWeight(oracle::BruteForceCenters(TileClass::General2(1, 2))),
            Fraction(5));
  EXPECT_EQ(oracle::FormulaCount(TileClass::General1(3, 1)), Fraction(10));
}

TEST(OracleRaster, SymmetrizedRasterHasGeneratorSymmetry) {
  Isometry r = Isometry::Rotation({kHalf, kHalf}, 1);
  PeriodicRaster raster = oracle::SymmetrizedRaster(6, {r});
  EXPECT_TRUE(oracle::PreservesRaster(raster, r, 6));
  EXPECT_FALSE(oracle::PreservesRaster(raster, Isometry::Translation({Fraction(1, 6), 0}), 6));
  EXPECT_EQ(oracle::BruteRasterSymmetries(oracle::SymmetrizedRaster(6, {})).size(), 1u);
}

TEST(OracleRaster, AsymmetricTileIsAsymmetric) {
  MotifGrid t = oracle::AsymmetricTile(5, 9);
  for (int i = 1; i < 8; ++i) EXPECT_NE(DihedralTransform(t, Dihedral::FromIndex(i)), t);
}

TEST(OracleTables, EveryCaseHasATable) {
  EXPECT_EQ(oracle::TransformationTables().size(), 36u);
  EXPECT_NE(oracle::FindInvariance("A"), nullptr);
  EXPECT_EQ(oracle::FindInvariance("nope"), nullptr);
}

}  // namespace
}  // namespace tilesym
