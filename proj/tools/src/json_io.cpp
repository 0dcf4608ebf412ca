// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#include "tilesym/cli/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace tilesym::io {

namespace {

std::string Normalize(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '-' || c == '_' || c == ' ') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

Json PointList(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  Json arr = Json::array();
  for (const Point& p : points) arr.push_back(ToJson(p));
  return arr;
}

Json Histogram(const std::map<WallpaperGroup, int>& h) {
  Json obj = Json::object();
  for (WallpaperGroup g : AllWallpaperGroups()) {
    auto it = h.find(g);
    if (it != h.end() && it->second > 0) obj[WallpaperGroupName(g)] = it->second;
  }
  return obj;
}

AxisDirection ParseDirection(const std::string& name) {
  for (auto d : {AxisDirection::kHorizontal, AxisDirection::kDiagonal,
                 AxisDirection::kVertical, AxisDirection::kAntidiagonal}) {
    if (name == AxisDirectionName(d)) return d;
  }
  throw DomainError("unknown axis direction '" + name + "'");
}

}  // namespace

Json ToJson(const Fraction& f) { return f.ToString(); }

Json ToJson(const Point& p) { return Json::array({ToJson(p.x), ToJson(p.y)}); }

Json ToJson(const Axis& axis) {
  return {{"direction", AxisDirectionName(axis.direction)},
          {"offset", ToJson(axis.offset)},
          {"equation", axis.ToString()}};
}

Json ToJson(const GlideAxis& glide) {
  Json j = ToJson(glide.axis);
  j["shift"] = ToJson(glide.shift);
  return j;
}

Json ToJson(const TileClass& c) {
  Json j = {{"variant", VariantName(c.variant)}};
  if (IsGeneral(c.variant)) {
    j["p"] = c.p;
    j["q"] = c.q;
    j["anchor"] = ToJson(c.anchor);
  }
  j["label"] = c.ToString();
  return j;
}

Json ToJson(const CenterSet& centers) { return PointList(centers); }

Json ToJson(const AffinePoint& p) {
  return Json::array({p.x.ToString(), p.y.ToString()});
}

Json ToJson(const SymmetrySummary& s) {
  Json j;
  j["cells_per_unit"] = s.cells_per_unit;
  j["translation_basis"] =
      Json::array({ToJson(s.translation_basis[0]), ToJson(s.translation_basis[1])});
  j["order4"] = PointList(s.order4);
  j["order2"] = PointList(s.order2);
  std::vector<Axis> mirrors = s.mirrors;
  std::sort(mirrors.begin(), mirrors.end());
  j["mirrors"] = Json::array();
  for (const Axis& a : mirrors) j["mirrors"].push_back(ToJson(a));
  std::vector<GlideAxis> glides = s.glides;
  std::sort(glides.begin(), glides.end());
  j["glides"] = Json::array();
  for (const GlideAxis& g : glides) j["glides"].push_back(ToJson(g));
  j["symmetry_count"] = s.symmetries.size();
  return j;
}

Json ToJson(const InducedSet& set) {
  auto list = [](const std::vector<AffinePoint>& pts) {
    Json arr = Json::array();
    for (const AffinePoint& p : pts) arr.push_back(ToJson(p));
    return arr;
  };
  Json j;
  j["order4"] = list(set.order4);
  j["order2"] = list(set.order2);
  j["translations"] = list(set.translations);
  j["generator_orbits"] = list(set.generator_orbits);
  if (set.basis) {
    j["basis"] = {{"u", ToJson((*set.basis)[0])}, {"v", ToJson((*set.basis)[1])}};
  } else {
    j["basis"] = nullptr;
  }
  return j;
}

Json ToJson(const PeriodicityResult& r) {
  Json j;
  j["code"] = r.code;
  j["status"] = r.status == PeriodicityStatus::kResolved ? "resolved" : "inconclusive";
  j["identities"] = r.identities;
  if (r.status == PeriodicityStatus::kResolved) {
    j["basis"] = Json::array({ToJson(r.basis[0]), ToJson(r.basis[1])});
    j["center"] = ToJson(r.center);
  } else {
    j["basis"] = nullptr;
    j["center"] = nullptr;
  }
  j["note"] = r.note;
  return j;
}

Json ToJson(const CoverageReport& r) {
  auto cells = [](const std::vector<std::pair<int, int>>& v) {
    Json arr = Json::array();
    for (auto [i, jj] : v) arr.push_back(Json::array({i, jj}));
    return arr;
  };
  Json j;
  j["case"] = CoverageCaseName(r.which);
  j["a"] = ToJson(r.a);
  j["b"] = ToJson(r.b);
  j["resolution"] = r.resolution;
  j["holds"] = r.holds;
  j["covered_cells"] = r.covered;
  j["expected_cells"] = r.expected;
  j["missing"] = cells(r.missing);
  j["extra"] = cells(r.extra);
  return j;
}

Json ToJson(const ExceptionEnumeration& e) {
  Json j;
  j["classes"] = Json::array();
  for (const ExceptionClass& c : e.classes) {
    Json cj;
    cj["letter"] = std::string(1, c.letter);
    cj["partition"] = FormatPartition(c.partition);
    cj["multiplicity"] = c.cases.size();
    cj["cases"] = Json::array();
    for (auto [ka, kc] : c.cases) cj["cases"].push_back(Json::array({ka, kc}));
    cj["general"] = c.general ? ToJson(*c.general) : Json(nullptr);
    cj["variant"] = c.variant ? Json(VariantName(*c.variant)) : Json(nullptr);
    cj["genuine_group"] = c.genuine_group;
    j["classes"].push_back(cj);
  }
  j["genuine_count"] = e.genuine_count;
  j["reflective"] = Json::array();
  for (const ReflectiveVariant& r : e.reflective) {
    j["reflective"].push_back({{"variant", VariantName(r.variant)},
                               {"letter", std::string(1, r.letter)},
                               {"mirror", ToJson(r.mirror)},
                               {"group", WallpaperGroupName(r.group)}});
  }
  j["total_with_reflections"] = e.total_with_reflections;
  return j;
}

Json ToJson(const CensusReport& r) {
  std::map<WallpaperGroup, int> refl, chiral;
  for (const CensusClass& c : r.classes) ++(c.reflective ? refl : chiral)[c.group];
  Json j;
  j["tile_size"] = r.tile_size;
  j["blocks"] = r.blocks;
  j["total"] = r.total;
  j["reflective"] = r.reflective;
  j["chiral"] = r.chiral;
  j["mirror_pairs"] = r.mirror_pairs;
  j["total_up_to_isometry"] = r.total_up_to_isometry;
  j["histogram"] = Histogram(r.histogram);
  j["reflective_histogram"] = Histogram(refl);
  j["chiral_histogram"] = Histogram(chiral);
  j["classes"] = Json::array();
  for (size_t i = 0; i < r.classes.size(); ++i) {
    const CensusClass& c = r.classes[i];
    j["classes"].push_back({{"index", i},
                            {"orientations", c.orientations},
                            {"block_count", c.block_count},
                            {"group", WallpaperGroupName(c.group)},
                            {"reflective", c.reflective},
                            {"mirror_partner", c.mirror_partner}});
  }
  return j;
}

Fraction FractionFromJson(const Json& j) {
  if (j.is_number_integer()) return Fraction(j.get<int64_t>());
  if (j.is_string()) return Fraction::Parse(j.get<std::string>());
  throw DomainError("expected a rational string, got " + j.dump());
}

Point PointFromJson(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw DomainError("expected a point [x, y], got " + j.dump());
  }
  return {FractionFromJson(j[0]), FractionFromJson(j[1])};
}

Axis AxisFromJson(const Json& j) {
  return {ParseDirection(j.at("direction").get<std::string>()),
          FractionFromJson(j.at("offset"))};
}

TileClass TileClassFromJson(const Json& j) {
  auto v = ParseVariantName(j.at("variant").get<std::string>());
  if (!v) throw DomainError("unknown variant " + j.at("variant").dump());
  TileClass c;
  c.variant = *v;
  if (IsGeneral(*v)) {
    c.p = j.at("p").get<int64_t>();
    c.q = j.at("q").get<int64_t>();
    if (j.contains("anchor")) c.anchor = PointFromJson(j["anchor"]);
  }
  Validate(c);
  return c;
}

CenterSet CenterSetFromJson(const Json& j) {
  const Json& arr = j.is_object() ? j.at("centers") : j;
  if (!arr.is_array()) throw DomainError("expected an array of centers");
  CenterSet out;
  for (const Json& p : arr) out.push_back(PointFromJson(p));
  NormalizeCenterSet(&out);
  return out;
}

SymmetrySummary SummaryFromJson(const Json& j) {
  SymmetrySummary s;
  s.cells_per_unit = j.value("cells_per_unit", int64_t{1});
  const Json& basis = j.at("translation_basis");
  s.translation_basis = {PointFromJson(basis.at(0)), PointFromJson(basis.at(1))};
  for (const Json& p : j.at("order4")) s.order4.push_back(PointFromJson(p));
  for (const Json& p : j.at("order2")) s.order2.push_back(PointFromJson(p));
  for (const Json& a : j.at("mirrors")) s.mirrors.push_back(AxisFromJson(a));
  if (j.contains("glides")) {
    for (const Json& g : j["glides"]) {
      s.glides.push_back({AxisFromJson(g), PointFromJson(g.at("shift"))});
    }
  }
  return s;
}

std::optional<Variant> ParseVariantName(std::string_view name) {
  const std::string key = Normalize(name);
  for (Variant v : {Variant::kGeneral1, Variant::kGeneral2, Variant::kGeneral3,
                    Variant::kGeneral4, Variant::kExcAdjacent,
                    Variant::kExcOppositeTranslation,
                    Variant::kExcOppositeCenters, Variant::kTrivial}) {
    if (Normalize(VariantName(v)) == key) return v;
  }
  return std::nullopt;
}

std::string VariantSlug(Variant v) {
  std::string out;
  for (char c : std::string(VariantName(v))) {
    if (std::isupper(static_cast<unsigned char>(c)) && !out.empty()) out += '-';
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace tilesym::io
