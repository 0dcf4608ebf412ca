// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.
//
// JSON encoding of tilesym values. Rationals are always "n" or "n/d"
// strings; object keys keep insertion order so output is byte-stable.

#ifndef TILESYM_CLI_JSON_IO_HPP_
#define TILESYM_CLI_JSON_IO_HPP_

#include <optional>
#include <string_view>

#include "json.hpp"
#include "tilesym/census.hpp"
#include "tilesym/closure.hpp"
#include "tilesym/exact.hpp"
#include "tilesym/lattice.hpp"
#include "tilesym/symdetect.hpp"

namespace tilesym::io {

using Json = nlohmann::ordered_json;

Json ToJson(const Fraction& f);
Json ToJson(const Point& p);
Json ToJson(const Axis& axis);
Json ToJson(const GlideAxis& glide);
Json ToJson(const TileClass& c);
Json ToJson(const CenterSet& centers);
Json ToJson(const AffinePoint& p);
Json ToJson(const SymmetrySummary& summary);
Json ToJson(const InducedSet& set);
Json ToJson(const PeriodicityResult& result);
Json ToJson(const CoverageReport& report);
Json ToJson(const ExceptionEnumeration& e);
Json ToJson(const CensusReport& report);

// Accepts a string ("3", "-1/2") or an integer.
Fraction FractionFromJson(const Json& j);
// A two-element array.
Point PointFromJson(const Json& j);
Axis AxisFromJson(const Json& j);
TileClass TileClassFromJson(const Json& j);
// A bare array of points or an object with a "centers" array.
CenterSet CenterSetFromJson(const Json& j);
// The object written by ToJson(SymmetrySummary); "symmetries" is optional.
SymmetrySummary SummaryFromJson(const Json& j);

// "general2", "General2", "exc-adjacent", "exc_adjacent", ... .
std::optional<Variant> ParseVariantName(std::string_view name);
// Lower-case hyphenated spelling of a variant.
std::string VariantSlug(Variant v);

}  // namespace tilesym::io

#endif  // TILESYM_CLI_JSON_IO_HPP_
