// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#include "tilesym/cli/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "tilesym/census.hpp"
#include "tilesym/cli/json_io.hpp"
#include "tilesym/cli/svg.hpp"
#include "tilesym/closure.hpp"
#include "tilesym/lattice.hpp"
#include "tilesym/motif.hpp"
#include "tilesym/symdetect.hpp"

namespace tilesym::io {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutput(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot write '" + path + "'");
  f << text;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

bool LooksLikeJson(const std::string& text) {
  auto it = std::find_if(text.begin(), text.end(),
                         [](unsigned char c) { return !std::isspace(c); });
  return it != text.end() && (*it == '{' || *it == '[');
}

Point ParsePoint(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw DomainError("expected a point 'x,y', got '" + text + "'");
  }
  return {Fraction::Parse(text.substr(0, comma)), Fraction::Parse(text.substr(comma + 1))};
}

struct ClassOptions {
  std::string type;
  int64_t p = 1;
  int64_t q = 0;
  std::string anchor;
};

void AddClassOptions(CLI::App* cmd, ClassOptions* o, bool required) {
  auto* t = cmd->add_option("--type", o->type,
                            "general1..general4, exc-adjacent, exc-opposite-translation, "
                            "exc-opposite-centers, trivial");
  if (required) t->required();
  cmd->add_option("-p", o->p, "first lattice parameter");
  cmd->add_option("-q", o->q, "second lattice parameter");
  cmd->add_option("--anchor", o->anchor, "anchor point 'x,y' (rationals as n/d)");
}

TileClass BuildClass(const ClassOptions& o) {
  auto v = ParseVariantName(o.type);
  if (!v) throw CLI::ValidationError("--type", "unknown tile type '" + o.type + "'");
  TileClass c;
  switch (*v) {
    case Variant::kGeneral1:
      c = TileClass::General1(o.p, o.q);
      break;
    case Variant::kGeneral2:
      c = TileClass::General2(o.p, o.q);
      break;
    case Variant::kGeneral3:
      c = TileClass::General3(o.p, o.q);
      break;
    case Variant::kGeneral4:
      c = TileClass::General4(o.p, o.q);
      break;
    case Variant::kTrivial:
      c = TileClass::Trivial();
      break;
    default:
      c = TileClass::Exception(*v);
      break;
  }
  if (!o.anchor.empty()) {
    if (!IsGeneral(*v) || *v == Variant::kGeneral2) {
      throw CLI::ValidationError("--anchor", "this tile type has a fixed anchor");
    }
    c.anchor = ParsePoint(o.anchor);
  }
  Validate(c);
  return c;
}

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--placements", "bad integer '" + item + "'");
    }
  }
  return out;
}

std::string CensusText(const CensusReport& r) {
  std::map<WallpaperGroup, int> refl, chiral;
  for (const CensusClass& c : r.classes) ++(c.reflective ? refl : chiral)[c.group];
  auto hist = [](const std::map<WallpaperGroup, int>& h) {
    std::string s;
    for (WallpaperGroup g : AllWallpaperGroups()) {
      auto it = h.find(g);
      if (it == h.end()) continue;
      s += std::string(s.empty() ? "" : ", ") + WallpaperGroupName(g) + " " +
           std::to_string(it->second);
    }
    return s;
  };
  std::ostringstream os;
  os << "blocks " << r.blocks << ", tile size " << r.tile_size << "\n";
  os << "total " << r.total << " (reflective " << r.reflective << ", chiral " << r.chiral
     << ", mirror pairs " << r.mirror_pairs << ")\n";
  os << "up to isometry " << r.total_up_to_isometry << "\n";
  os << "reflective: " << hist(refl) << "\n";
  os << "chiral: " << hist(chiral) << "\n";
  return os.str();
}

void ExportCensus(const CensusReport& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (size_t i = 0; i < r.classes.size(); ++i) {
    const CensusClass& c = r.classes[i];
    char stem[32];
    std::snprintf(stem, sizeof(stem), "class_%02zu", i);
    const std::filesystem::path base = std::filesystem::path(dir) / stem;
    WriteOutput(base.string() + ".txt", FormatMotif(c.block.grid), std::cout);
    SymmetrySummary s = DetectSymmetries(c.block, c.block.period());
    WriteOutput(base.string() + ".svg", RenderSvg(OverlayFromSummary(s), &c.block.grid),
                std::cout);
  }
}

void PrintError(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotation-center lattices, induced symmetries and tiling census for square "
               "tiles cut from p4 patterns.",
               "tilesym"};
  app.require_subcommand(1);
  std::function<int()> action;

  // centers
  ClassOptions centers_opts;
  auto* centers = app.add_subcommand("centers", "order-4 centers of a tile class as JSON");
  AddClassOptions(centers, &centers_opts, true);
  centers->callback([&] {
    action = [&] {
      TileClass c = BuildClass(centers_opts);
      CenterSet set = GenerateCenters(c);
      Json j;
      j["class"] = ToJson(c);
      j["canonical"] = ToJson(Canonicalize(c));
      j["centers"] = ToJson(set);
      j["weighted_count"] = ToJson(WeightedCount(set));
      if (IsGeneral(c.variant)) j["expected_count"] = ToJson(ExpectedCount(c));
      out << Dump(j);
      return kExitOk;
    };
  });

  // classify
  std::string classify_in;
  auto* classify = app.add_subcommand("classify", "tile class of a center set");
  classify->add_option("--in", classify_in, "JSON file ('-' for stdin)")->required();
  classify->callback([&] {
    action = [&] {
      CenterSet set = CenterSetFromJson(ParseJson(ReadInput(classify_in)));
      out << Dump(ToJson(ClassifyCenters(set)));
      return kExitOk;
    };
  });

  // extract
  ClassOptions extract_opts;
  std::string extract_seed, extract_out;
  int64_t extract_res = 0;
  uint64_t extract_random = 2026;
  auto* extract = app.add_subcommand("extract", "cut a tile from the p4 pattern of a seed");
  AddClassOptions(extract, &extract_opts, true);
  extract->add_option("--seed", extract_seed, "seed motif file; random when omitted");
  extract->add_option("--random-seed", extract_random, "generator seed for the random motif");
  extract->add_option("--resolution", extract_res, "cells per tile side (default: minimum)");
  extract->add_option("--out", extract_out, "motif file (default stdout)");
  extract->callback([&] {
    action = [&] {
      TileClass c = BuildClass(extract_opts);
      MotifGrid seed = extract_seed.empty() ? RandomMotif(4, 8, extract_random)
                                            : ParseMotif(ReadInput(extract_seed));
      int64_t res = extract_res > 0 ? extract_res : MinimumResolution(c, seed.size());
      WriteOutput(extract_out, FormatMotif(ExtractTile(seed, c, res)), out);
      return kExitOk;
    };
  });

  // assemble
  std::string assemble_tile, assemble_placements = "0", assemble_out;
  auto* assemble = app.add_subcommand(
      "assemble", "periodic raster from one tile (translation) or a 2x2 oriented block");
  assemble->add_option("--tile", assemble_tile, "tile motif file")->required();
  assemble->add_option("--placements", assemble_placements,
                       "1 or 4 dihedral indices 0..7 (k quarter turns, +4 mirrored), "
                       "block order (0,0),(1,0),(0,1),(1,1)");
  assemble->add_option("--out", assemble_out, "raster motif file (default stdout)");
  assemble->callback([&] {
    action = [&] {
      MotifGrid tile = ParseMotif(ReadInput(assemble_tile));
      std::vector<int> idx = ParseIntList(assemble_placements);
      if (idx.size() != 1 && idx.size() != 4) {
        throw CLI::ValidationError("--placements", "expected 1 or 4 indices");
      }
      for (int i : idx) {
        if (i < 0 || i > 7) throw CLI::ValidationError("--placements", "index out of 0..7");
      }
      PeriodicRaster raster;
      if (idx.size() == 1) {
        raster = TranslateAssembly(DihedralTransform(tile, Dihedral::FromIndex(idx[0])));
      } else {
        std::array<PlacedTile, 4> block;
        for (int k = 0; k < 4; ++k) block[k] = {tile, Dihedral::FromIndex(idx[k])};
        raster = AssembleBlock(block);
      }
      WriteOutput(assemble_out, FormatMotif(raster.grid), out);
      return kExitOk;
    };
  });

  // detect
  std::string detect_in;
  int64_t detect_cpu = 0;
  auto* detect = app.add_subcommand("detect", "symmetries and wallpaper group of a raster");
  detect->add_option("--in", detect_in, "periodic raster motif file ('-' for stdin)")
      ->required();
  detect->add_option("--cells-per-unit", detect_cpu,
                     "cells per tile unit (default: the raster period)");
  detect->callback([&] {
    action = [&] {
      PeriodicRaster raster{ParseMotif(ReadInput(detect_in))};
      int64_t cpu = detect_cpu > 0 ? detect_cpu : raster.period();
      SymmetrySummary s = DetectSymmetries(raster, cpu);
      Json j = ToJson(s);
      j["group"] = WallpaperGroupName(ClassifyWallpaperGroup(s));
      out << Dump(j);
      return kExitOk;
    };
  });

  // closure
  auto* closure = app.add_subcommand("closure", "induced symmetries, periodicity, coverage");
  closure->require_subcommand(1);
  std::string induced_case;
  auto* induced = closure->add_subcommand("induced", "symbolic induced symmetries of a case");
  induced->add_option("--case", induced_case, "A..H, c1=1..c1=4, AE..DH, DF31.., DF331..")
      ->required();
  induced->callback([&] {
    action = [&] {
      PlacementCase pc = PlacementCase::Parse(induced_case);
      Json j{{"case", pc.code}};
      j.update(ToJson(InducedSymmetries(pc)));
      out << Dump(j);
      return kExitOk;
    };
  });
  std::string period_case;
  int64_t period_p = 1, period_q = 0;
  auto* period = closure->add_subcommand("periodicity", "order-4 center lattice of a case");
  period->add_option("--case", period_case, "pair code, BGi, CHi, DFi, DF3i, DF33i")
      ->required();
  period->add_option("-p", period_p, "lattice coordinate p");
  period->add_option("-q", period_q, "lattice coordinate q");
  period->callback([&] {
    action = [&] {
      out << Dump(ToJson(DerivePeriodicity(period_case, period_p, period_q)));
      return kExitOk;
    };
  });
  auto* identities = closure->add_subcommand("identities", "check every translation identity");
  identities->callback([&] {
    action = [&] {
      Json arr = Json::array();
      bool all = true;
      for (const PeriodicityIdentity& id : PeriodicityIdentities()) {
        bool ok = IdentityHolds(id);
        all = all && ok;
        arr.push_back({{"name", id.name}, {"holds", ok}});
      }
      out << Dump(arr);
      return all ? kExitOk : kExitDomain;
    };
  });
  std::string cov_case, cov_a, cov_b;
  int cov_res = 0;
  bool cov_all = false;
  auto* coverage = closure->add_subcommand("coverage", "grid orbit-closure coverage check");
  coverage->add_option("--case", cov_case, "E, F, G or H");
  coverage->add_option("--a", cov_a, "center x coordinate (n/d)");
  coverage->add_option("--b", cov_b, "center y coordinate (n/d)");
  coverage->add_option("--resolution", cov_res, "grid cells per side (default: LCM rule)");
  coverage->add_flag("--all", cov_all, "every case at the default samples");
  coverage->callback([&] {
    action = [&] {
      std::vector<CoverageReport> reports;
      if (cov_all) {
        for (CoverageCase c : {CoverageCase::kE, CoverageCase::kF, CoverageCase::kG,
                               CoverageCase::kH}) {
          for (const auto& [a, b] : DefaultCoverageSamples()) {
            reports.push_back(VerifyCoverage(c, a, b, cov_res));
          }
        }
      } else {
        if (cov_case.empty() || cov_a.empty() || cov_b.empty()) {
          throw CLI::ValidationError("coverage", "--case, --a and --b are required without --all");
        }
        auto c = ParseCoverageCase(cov_case);
        if (!c) throw CLI::ValidationError("--case", "expected E, F, G or H");
        reports.push_back(
            VerifyCoverage(*c, Fraction::Parse(cov_a), Fraction::Parse(cov_b), cov_res));
      }
      bool all = std::all_of(reports.begin(), reports.end(),
                             [](const CoverageReport& r) { return r.holds; });
      if (reports.size() == 1) {
        out << Dump(ToJson(reports[0]));
      } else {
        Json arr = Json::array();
        for (const CoverageReport& r : reports) arr.push_back(ToJson(r));
        out << Dump(arr);
      }
      return all ? kExitOk : kExitDomain;
    };
  });

  // exceptions
  auto* exceptions = app.add_subcommand("exceptions", "the sixteen adjacency cases");
  exceptions->callback([&] {
    action = [&] {
      out << Dump(ToJson(EnumerateExceptions()));
      return kExitOk;
    };
  });

  // nery-census
  std::string census_format = "json", census_export;
  int census_size = 8;
  int64_t census_seed = -1;
  auto* census = app.add_subcommand("nery-census", "census of 2x2 blocks of the Nery tile");
  census->add_option("--format", census_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  census->add_option("--size", census_size, "tile resolution (even, >= 6)");
  census->add_option("--seed", census_seed, "label permutation seed for the motif");
  census->add_option("--export-dir", census_export,
                     "write each class representative as motif + SVG");
  census->callback([&] {
    action = [&] {
      std::optional<uint64_t> seed;
      if (census_seed >= 0) seed = static_cast<uint64_t>(census_seed);
      CensusReport r = NeryCensus(NeryMotif(census_size, seed));
      if (!census_export.empty()) ExportCensus(r, census_export);
      out << (census_format == "text" ? CensusText(r) : Dump(ToJson(r)));
      return kExitOk;
    };
  });

  // render
  ClassOptions render_class;
  std::string render_in, render_out;
  RenderStyle style;
  bool no_cells = false;
  auto* render = app.add_subcommand("render", "SVG of a center set, summary, tile or class");
  render->add_option("--in", render_in,
                     "centers JSON, detect JSON, or motif file ('-' for stdin)");
  AddClassOptions(render, &render_class, false);
  render->add_option("--out", render_out, "SVG file (default stdout)");
  render->add_option("--order4-color", style.order4_fill, "fill of order-4 squares");
  render->add_option("--order2-color", style.order2_stroke, "stroke of order-2 circles");
  render->add_option("--mirror-color", style.mirror_stroke, "stroke of mirror lines");
  render->add_option("--region-color", style.region_stroke, "stroke of the translation cell");
  render->add_flag("--no-cells", no_cells, "omit tile cell colours");
  render->callback([&] {
    action = [&] {
      style.draw_cells = !no_cells;
      if (render_in.empty() == render_class.type.empty()) {
        throw CLI::ValidationError("render", "give exactly one of --in and --type");
      }
      std::string svg;
      if (!render_class.type.empty()) {
        svg = RenderSvg(OverlayFromCenters(GenerateCenters(BuildClass(render_class))),
                        nullptr, style);
      } else {
        std::string text = ReadInput(render_in);
        if (LooksLikeJson(text)) {
          Json j = ParseJson(text);
          if (j.is_object() && j.contains("translation_basis")) {
            svg = RenderSvg(OverlayFromSummary(SummaryFromJson(j)), nullptr, style);
          } else {
            svg = RenderSvg(OverlayFromCenters(CenterSetFromJson(j)), nullptr, style);
          }
        } else {
          MotifGrid tile = ParseMotif(text);
          svg = RenderSvg(OverlayFromTile(tile), &tile, style);
        }
      }
      WriteOutput(render_out, svg, out);
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    PrintError(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const CLI::Error& e) {
    PrintError(err, "usage", e.what());
    return kExitUsage;
  } catch (const DomainError& e) {
    PrintError(err, "domain", e.what());
    return kExitDomain;
  } catch (const OverflowError& e) {
    PrintError(err, "overflow", e.what());
    return kExitDomain;
  } catch (const IoError& e) {
    PrintError(err, "io", e.what());
    return kExitDomain;
  } catch (const Json::exception& e) {
    PrintError(err, "domain", std::string("bad JSON input: ") + e.what());
    return kExitDomain;
  } catch (const std::exception& e) {
    PrintError(err, "internal", e.what());
    return kExitInternal;
  }
}

}  // namespace tilesym::io
