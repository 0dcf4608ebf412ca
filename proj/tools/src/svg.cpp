// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#include "tilesym/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>
#include <sstream>

namespace tilesym::io {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#d9e4f5", "#f5e0c8", "#dcefd8", "#f3d6dc", "#e6dcf2", "#f6f1c7",
    "#cfe9ec", "#ecd9c9", "#d8d8d8", "#c9dcc2", "#f0d0e8", "#c8d4e8",
};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

struct Canvas {
  double size;
  double X(const Fraction& x) const { return x.ToDouble() * size; }
  double Y(const Fraction& y) const { return size - y.ToDouble() * size; }
};

std::vector<Axis> ExpandMirrors(const Overlay& o) {
  std::set<Axis> out;
  for (const Axis& a : o.mirrors) {
    if (!o.lattice) {
      out.insert(a);
      continue;
    }
    const Point n = AxisNormal(a.direction);
    const Fraction step = o.lattice->ProjectionStep(n);
    Fraction lo = std::min(n.x, Fraction(0)) + std::min(n.y, Fraction(0));
    Fraction hi = std::max(n.x, Fraction(0)) + std::max(n.y, Fraction(0));
    for (int64_t k = ((lo - a.offset) / step).Ceil();
         k <= ((hi - a.offset) / step).Floor(); ++k) {
      out.insert({a.direction, a.offset + step * Fraction(k)});
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Point> Sorted(std::vector<Point> v) {
  NormalizeCenterSet(&v);
  return v;
}

}  // namespace

Overlay OverlayFromCenters(const CenterSet& centers) {
  Overlay o;
  o.order4 = centers;
  return o;
}

Overlay OverlayFromSummary(const SymmetrySummary& summary) {
  Overlay o;
  o.order4 = CentersInUnitSquare(summary, 4);
  o.order2 = CentersInUnitSquare(summary, 2);
  o.mirrors = summary.mirrors;
  o.lattice = summary.Lattice();
  o.cell = summary.translation_basis;
  return o;
}

Overlay OverlayFromTile(const MotifGrid& tile) {
  return OverlayFromSummary(DetectSymmetries(TranslateAssembly(tile), tile.size()));
}

std::optional<std::array<Point, 2>> ClipToUnitSquare(const Axis& axis) {
  const Point n = AxisNormal(axis.direction);
  const Fraction& c = axis.offset;
  std::vector<Point> hits;
  for (int e = 0; e <= 1; ++e) {
    if (!n.y.IsZero()) hits.emplace_back(Fraction(e), (c - n.x * e) / n.y);
    if (!n.x.IsZero()) hits.emplace_back((c - n.y * e) / n.x, Fraction(e));
  }
  std::vector<Point> inside;
  for (const Point& p : hits) {
    if (InUnitSquare(p)) inside.push_back(p);
  }
  NormalizeCenterSet(&inside);
  if (inside.size() < 2) return std::nullopt;
  return std::array<Point, 2>{inside.front(), inside.back()};
}

std::string RenderSvg(const Overlay& overlay, const MotifGrid* tile,
                      const RenderStyle& style) {
  const Canvas cv{style.viewport};
  const double margin = 2 * style.glyph_size;
  const double full = style.viewport + 2 * margin;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Num(full)
     << "\" height=\"" << Num(full) << "\" viewBox=\"" << Num(-margin) << ' '
     << Num(-margin) << ' ' << Num(full) << ' ' << Num(full) << "\">\n";
  os << "<defs><clipPath id=\"tile\"><rect x=\"0.00\" y=\"0.00\" width=\""
     << Num(style.viewport) << "\" height=\"" << Num(style.viewport)
     << "\"/></clipPath></defs>\n";

  if (tile != nullptr && style.draw_cells) {
    const int n = tile->size();
    const double w = style.viewport / n;
    os << "<g id=\"cells\" stroke=\"none\">\n";
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        int label = tile->cell(i, j);
        os << "<rect class=\"cell\" x=\"" << Num(i * w) << "\" y=\""
           << Num(style.viewport - (j + 1) * w) << "\" width=\"" << Num(w)
           << "\" height=\"" << Num(w) << "\" fill=\""
           << kPalette[static_cast<size_t>(label) % kPalette.size()] << "\"/>\n";
      }
    }
    os << "</g>\n";
  }

  if (overlay.cell) {
    const Point& b1 = (*overlay.cell)[0];
    const Point& b2 = (*overlay.cell)[1];
    os << "<g id=\"region\" clip-path=\"url(#tile)\" fill=\"none\" stroke=\""
       << style.region_stroke << "\" stroke-width=\"3\">\n";
    os << "<polygon class=\"region\" points=\"";
    bool first = true;
    for (const Point& p : {Point(), b1, b1 + b2, b2}) {
      if (!first) os << ' ';
      first = false;
      os << Num(cv.X(p.x)) << ',' << Num(cv.Y(p.y));
    }
    os << "\"/>\n</g>\n";
  }

  os << "<g id=\"mirrors\" stroke=\"" << style.mirror_stroke
     << "\" stroke-width=\"2\">\n";
  for (const Axis& a : ExpandMirrors(overlay)) {
    auto seg = ClipToUnitSquare(a);
    if (!seg) continue;
    os << "<line class=\"mirror\" x1=\"" << Num(cv.X((*seg)[0].x)) << "\" y1=\""
       << Num(cv.Y((*seg)[0].y)) << "\" x2=\"" << Num(cv.X((*seg)[1].x))
       << "\" y2=\"" << Num(cv.Y((*seg)[1].y)) << "\"/>\n";
  }
  os << "</g>\n";

  os << "<rect class=\"outline\" x=\"0.00\" y=\"0.00\" width=\""
     << Num(style.viewport) << "\" height=\"" << Num(style.viewport)
     << "\" fill=\"none\" stroke=\"" << style.outline_stroke
     << "\" stroke-width=\"2\"/>\n";

  const double g = style.glyph_size;
  os << "<g id=\"order2\" fill=\"" << style.order2_fill << "\" stroke=\""
     << style.order2_stroke << "\" stroke-width=\"1.5\">\n";
  for (const Point& p : Sorted(overlay.order2)) {
    os << "<circle class=\"c2\" cx=\"" << Num(cv.X(p.x)) << "\" cy=\""
       << Num(cv.Y(p.y)) << "\" r=\"" << Num(g / 2) << "\"/>\n";
  }
  os << "</g>\n";
  os << "<g id=\"order4\" fill=\"" << style.order4_fill << "\">\n";
  for (const Point& p : Sorted(overlay.order4)) {
    os << "<rect class=\"c4\" x=\"" << Num(cv.X(p.x) - g / 2) << "\" y=\""
       << Num(cv.Y(p.y) - g / 2) << "\" width=\"" << Num(g) << "\" height=\""
       << Num(g) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace tilesym::io
