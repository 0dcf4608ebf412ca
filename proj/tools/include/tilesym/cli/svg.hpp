// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.
//
// SVG drawings of the unit tile: optional cell colours, order-4 centers as
// black squares, order-2 centers as circles, mirrors in red and the
// translation cell in yellow. Glides are never drawn. The unit square maps
// to a 512 x 512 viewport with y pointing up.

#ifndef TILESYM_CLI_SVG_HPP_
#define TILESYM_CLI_SVG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tilesym/exact.hpp"
#include "tilesym/lattice.hpp"
#include "tilesym/motif.hpp"
#include "tilesym/symdetect.hpp"

namespace tilesym::io {

struct RenderStyle {
  std::string order4_fill = "#000000";
  std::string order2_fill = "#ffffff";
  std::string order2_stroke = "#000000";
  std::string mirror_stroke = "#ff0000";
  std::string region_stroke = "#ffff00";
  std::string outline_stroke = "#000000";
  double glyph_size = 10.0;
  double viewport = 512.0;
  bool draw_cells = true;
};

// What to draw over the tile. Centers and mirrors are drawn as given plus
// every lattice image that meets the unit square when a lattice is set.
struct Overlay {
  std::vector<Point> order4;
  std::vector<Point> order2;
  std::vector<Axis> mirrors;
  std::optional<TranslationLattice> lattice;
  std::optional<std::array<Point, 2>> cell;
};

Overlay OverlayFromCenters(const CenterSet& centers);
Overlay OverlayFromSummary(const SymmetrySummary& summary);
// Symmetries of the tile repeated by translation.
Overlay OverlayFromTile(const MotifGrid& tile);

// Endpoints of the part of the line inside [0,1]^2, if it is a segment.
std::optional<std::array<Point, 2>> ClipToUnitSquare(const Axis& axis);

std::string RenderSvg(const Overlay& overlay, const MotifGrid* tile = nullptr,
                      const RenderStyle& style = {});

}  // namespace tilesym::io

#endif  // TILESYM_CLI_SVG_HPP_
