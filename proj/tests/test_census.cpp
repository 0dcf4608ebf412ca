// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tilesym/census.hpp"

namespace tilesym {
namespace {

// The census takes a few seconds, so share one run per motif.
const CensusReport& DefaultCensus() {
  static const CensusReport report = NeryCensus(NeryMotif());
  return report;
}

// ----------------------------------------------------------------------------
// Quarter model and exceptions

TEST(QuarterModel, LabelNamesRoundTrip) {
  for (int i = 0; i < 12; ++i) EXPECT_EQ(ParseQuarterLabel(QuarterLabelName(i)), i);
  EXPECT_EQ(QuarterLabelName(0), "a1");
  EXPECT_EQ(QuarterLabelName(11), "c4");
  EXPECT_THROW(ParseQuarterLabel("d1"), DomainError);
}

TEST(QuarterModel, PartitionFormatting) {
  QuarterPartition p = MakePartition({"b2 a1", "c3 a4"});
  EXPECT_EQ(p, MakePartition({"a4 c3", "a1 b2"}));
  EXPECT_THROW(MakePartition({"a1 z9"}), DomainError);
}

TEST(QuarterModel, SynthesizedTileShowsItsPartition) {
  for (const CatalogEntry& e : ExceptionCatalog()) {
    MotifGrid tile = SynthesizeFromPartition(8, e.partition, 3);
    EXPECT_EQ(QuarterPartitionOf(tile), e.partition) << e.letter;
  }
}

TEST(EnumerateExceptions, Multiplicities) {
  ExceptionEnumeration en = EnumerateExceptions();
  std::vector<int> sizes;
  int total = 0;
  for (const ExceptionClass& c : en.classes) {
    sizes.push_back(static_cast<int>(c.cases.size()));
    total += static_cast<int>(c.cases.size());
  }
  EXPECT_EQ(sizes, (std::vector<int>{6, 2, 1, 3, 1, 2, 1}));
  EXPECT_EQ(total, 16);
  EXPECT_EQ(en.genuine_count, 3);
  EXPECT_EQ(en.total_with_reflections, 8);
}

TEST(EnumerateExceptions, EveryCaseAppearsOnce) {
  std::set<std::pair<int, int>> seen;
  for (const ExceptionClass& c : EnumerateExceptions().classes) {
    for (const auto& kc : c.cases) {
      EXPECT_TRUE(seen.insert(kc).second);
      EXPECT_EQ(AdjacencyPartition(kc.first, kc.second), c.partition);
    }
  }
  EXPECT_EQ(seen.size(), 16u);
}

TEST(EnumerateExceptions, GeneralInstances) {
  ExceptionEnumeration en = EnumerateExceptions();
  auto find = [&](char letter) -> const ExceptionClass& {
    for (const ExceptionClass& c : en.classes) {
      if (c.letter == letter) return c;
    }
    throw std::runtime_error("missing class");
  };
  // The anchor depends on where the class puts its centers; the type does not.
  auto same_type = [](const std::optional<TileClass>& got, const TileClass& want) {
    if (!got) return false;
    TileClass g = Canonicalize(*got), w = Canonicalize(want);
    return g.variant == w.variant && g.p == w.p && g.q == w.q;
  };
  EXPECT_TRUE(same_type(find('a').general, TileClass::General1(2, 0)));
  EXPECT_TRUE(same_type(find('d').general, TileClass::General1(1, 1)));
  EXPECT_TRUE(same_type(find('e').general, TileClass::General3(1, 0)));
  for (char letter : {'b', 'c', 'f', 'g'}) {
    EXPECT_FALSE(find(letter).general.has_value()) << letter;
    EXPECT_TRUE(find(letter).variant.has_value()) << letter;
  }
  EXPECT_EQ(find('b').genuine_group, find('f').genuine_group);
  EXPECT_NE(find('b').genuine_group, find('c').genuine_group);
  EXPECT_NE(find('c').genuine_group, find('g').genuine_group);
}

// ----------------------------------------------------------------------------
// Nery motif

TEST(NeryMotif, ValidatesAndRejectsGenericTiles) {
  EXPECT_NO_THROW(ValidateNeryMotif(NeryMotif()));
  EXPECT_NO_THROW(ValidateNeryMotif(NeryMotif(8, 42)));
  for (int size : {6, 10, 12}) EXPECT_NO_THROW(ValidateNeryMotif(NeryMotif(size))) << size;
  EXPECT_THROW(NeryMotif(4), DomainError);
  EXPECT_THROW(NeryMotif(7), DomainError);
  EXPECT_THROW(ValidateNeryMotif(oracle::AsymmetricTile(8, 1)), DomainError);
  EXPECT_THROW(NeryCensus(oracle::AsymmetricTile(8, 1)), DomainError);
}

// ----------------------------------------------------------------------------
// Canonical forms

TEST(CanonicalKey, InvariantUnderProperRigidMotions) {
  std::mt19937_64 rng(5);
  MotifGrid tile = NeryMotif();
  for (int trial = 0; trial < 100; ++trial) {
    std::array<PlacedTile, 4> tiles;
    for (auto& t : tiles) t = {tile, Dihedral::FromIndex(static_cast<int>(rng() % 8))};
    PeriodicRaster block = AssembleBlock(tiles);
    const std::vector<int> key = CanonicalKey(block);
    for (int k = 0; k < 4; ++k) {
      int dx = static_cast<int>(rng() % 16), dy = static_cast<int>(rng() % 16);
      EXPECT_EQ(CanonicalKey(ShiftRaster(RotateRaster(block, k), dx, dy)), key);
    }
  }
}

TEST(CanonicalKey, RasterMotionsAreExact) {
  PeriodicRaster r{RandomMotif(6, 9, 8)};
  EXPECT_EQ(RotateRaster(RotateRaster(r, 1), 3), r);
  EXPECT_EQ(MirrorRaster(MirrorRaster(r)), r);
  EXPECT_EQ(ShiftRaster(ShiftRaster(r, 2, 5), 4, 1), r);
  EXPECT_EQ(ShiftRaster(r, 1, 0).grid.cell(1, 0), r.grid.cell(0, 0));
}

// ----------------------------------------------------------------------------
// Census

TEST(NeryCensus, Totals) {
  const CensusReport& r = DefaultCensus();
  EXPECT_EQ(r.blocks, 4096);
  EXPECT_EQ(r.total, 23);
  EXPECT_EQ(r.reflective, 11);
  EXPECT_EQ(r.chiral, 12);
  EXPECT_EQ(r.mirror_pairs, 6);
  EXPECT_EQ(r.total_up_to_isometry, 17);
  EXPECT_EQ(static_cast<int>(r.classes.size()), r.total);
}

TEST(NeryCensus, Histogram) {
  const std::map<WallpaperGroup, int> want = {
      {WallpaperGroup::kP1, 10},  {WallpaperGroup::kP2, 2},   {WallpaperGroup::kPm, 1},
      {WallpaperGroup::kCm, 3},   {WallpaperGroup::kP2mm, 1}, {WallpaperGroup::kP2mg, 1},
      {WallpaperGroup::kP2gg, 1}, {WallpaperGroup::kC2mm, 1}, {WallpaperGroup::kP4mm, 1},
      {WallpaperGroup::kP4gm, 2}};
  std::map<WallpaperGroup, int> got;
  for (const auto& [g, n] : DefaultCensus().histogram) {
    if (n > 0) got[g] = n;
  }
  EXPECT_EQ(got, want);
}

TEST(NeryCensus, ReflectiveMatchesGroup) {
  const std::set<WallpaperGroup> chiral = {WallpaperGroup::kP1, WallpaperGroup::kP2,
                                           WallpaperGroup::kP4};
  int blocks = 0;
  for (const CensusClass& c : DefaultCensus().classes) {
    EXPECT_EQ(c.reflective, !chiral.count(c.group));
    EXPECT_EQ(ClassifyWallpaperGroup(DetectSymmetries(c.block, 8)), c.group);
    blocks += c.block_count;
  }
  EXPECT_EQ(blocks, 4096);
}

TEST(NeryCensus, ChiralClassesPairUp) {
  const auto& classes = DefaultCensus().classes;
  std::set<int> partners;
  for (size_t i = 0; i < classes.size(); ++i) {
    const CensusClass& c = classes[i];
    const std::vector<int> mirrored = CanonicalKey(MirrorRaster(c.block));
    if (c.reflective) {
      EXPECT_EQ(c.mirror_partner, static_cast<int>(i));
      EXPECT_EQ(mirrored, CanonicalKey(c.block));
      continue;
    }
    ASSERT_GE(c.mirror_partner, 0);
    ASSERT_NE(c.mirror_partner, static_cast<int>(i));
    EXPECT_EQ(classes[c.mirror_partner].mirror_partner, static_cast<int>(i));
    EXPECT_EQ(CanonicalKey(classes[c.mirror_partner].block), mirrored);
    partners.insert(c.mirror_partner);
  }
  EXPECT_EQ(partners.size(), 12u);
}

TEST(NeryCensus, IndependentOfTheMotif) {
  const CensusReport& a = DefaultCensus();
  CensusReport b = NeryCensus(NeryMotif(8, 1234));
  EXPECT_EQ(b.total, a.total);
  EXPECT_EQ(b.reflective, a.reflective);
  EXPECT_EQ(b.mirror_pairs, a.mirror_pairs);
  EXPECT_EQ(b.histogram, a.histogram);
  std::multiset<std::array<int, 4>> oa, ob;
  for (const CensusClass& c : a.classes) oa.insert(c.orientations);
  for (const CensusClass& c : b.classes) ob.insert(c.orientations);
  EXPECT_EQ(oa, ob);
}

}  // namespace
}  // namespace tilesym
