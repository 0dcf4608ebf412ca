// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.
//
// Tabulated invariance vectors and translation identities.

#include <map>
#include <string>

#include "tilesym/closure.hpp"

namespace tilesym {

namespace {

const Fraction kHalf(1, 2);
const Fraction kThreeHalves(3, 2);

AffinePoint AP(Fraction x0, Fraction xa, Fraction xb, Fraction y0, Fraction ya,
               Fraction yb) {
  return {{x0, xa, xb}, {y0, ya, yb}};
}

using Basis = std::array<AffinePoint, 2>;

const std::map<std::string, Basis, std::less<>>& BasisTable() {
  static const auto* table = [] {
    const Fraction h = kHalf, t = kThreeHalves;
    auto* m = new std::map<std::string, Basis, std::less<>>{
        {"A", {AP(h, 0, 0, h, 0, 0), AP(-h, 0, 0, h, 0, 0)}},
        {"B", {AP(1, 0, -1, 0, 1, 0), AP(0, -1, 0, 1, 0, -1)}},
        {"C", {AP(h, -1, -1, h, 1, -1), AP(-h, -1, 1, h, -1, -1)}},
        {"D", {AP(0, 1, 0, 0, 0, 1), AP(0, 0, -1, 0, 1, 0)}},
        {"E", {AP(h, 0, 0, h, 0, 0), AP(-h, 0, 0, h, 0, 0)}},
        {"F", {AP(0, 1, 0, 0, 0, 1), AP(0, 0, -1, 0, 1, 0)}},
        {"G", {AP(h, -1, 1, h, -1, -1), AP(-h, 1, 1, h, -1, 1)}},
        {"H", {AP(0, 0, 1, 1, -1, 0), AP(-1, 1, 0, 0, 0, 1)}},
        {"c1=1", {AP(1, 0, 0, 0, 0, 0), AP(0, 0, 0, 1, 0, 0)}},
        {"c1=2", {AP(h, 0, -1, h, 1, 0), AP(-h, -1, 0, h, 0, -1)}},
        {"c1=3", {AP(0, 1, -1, 0, 1, 1), AP(0, -1, -1, 0, 1, -1)}},
        {"c1=4", {AP(h, 0, 1, h, -1, 0), AP(-h, 1, 0, h, 0, 1)}},
        {"DF31", {AP(h, -1, 1, h, -1, -1), AP(-h, 1, 1, h, -1, 1)}},
        {"DF32", {AP(1, -2, -1, 0, 1, -2), AP(0, -1, 2, 1, -2, -1)}},
        {"DF33", {AP(h, -2, 2, t, -2, -2), AP(-t, 2, 2, h, -2, 2)}},
        {"DF34", {AP(1, -2, 1, 1, -1, -2), AP(-1, 1, 2, 1, -2, 1)}},
        {"DF331", {AP(0, 0, 1, 1, -1, 0), AP(-1, 1, 0, 0, 0, 1)}},
        {"DF332", {AP(h, -1, 1, h, -1, -1), AP(-h, 1, 1, h, -1, 1)}},
        {"DF333", {AP(1, -2, 1, 1, -1, -2), AP(-1, 1, 2, 1, -2, 1)}},
        {"DF334", {AP(t, -2, 0, h, 0, -2), AP(-h, 0, 2, t, -2, 0)}},
    };
    return m;
  }();
  return *table;
}

// Pair cases share four invariance bases.
const char* PairGroupBasisKey(std::string_view code) {
  static const std::map<std::string, const char*, std::less<>> kGroups = {
      {"AE", "pair:0"}, {"BF", "pair:0"}, {"CG", "pair:0"}, {"DH", "pair:0"},
      {"AF", "pair:1"}, {"BG", "pair:1"}, {"CH", "pair:1"}, {"DE", "pair:1"},
      {"AG", "pair:2"}, {"BH", "pair:2"}, {"CE", "pair:2"}, {"DF", "pair:2"},
      {"AH", "pair:3"}, {"BE", "pair:3"}, {"CF", "pair:3"}, {"DG", "pair:3"},
  };
  auto it = kGroups.find(code);
  return it == kGroups.end() ? nullptr : it->second;
}

const std::map<std::string, Basis, std::less<>>& PairBasisTable() {
  static const auto* table = [] {
    const Fraction h = kHalf;
    return new std::map<std::string, Basis, std::less<>>{
        {"pair:0", {AP(1, 0, 0, 0, 0, 0), AP(0, 0, 0, 1, 0, 0)}},
        {"pair:1", {AP(h, 1, 0, h, 0, 1), AP(-h, 0, -1, h, 1, 0)}},
        {"pair:2", {AP(0, 1, -1, 0, 1, 1), AP(0, -1, -1, 0, 1, -1)}},
        {"pair:3", {AP(h, -1, 0, h, 0, -1), AP(-h, 0, 1, h, -1, 0)}},
    };
  }();
  return *table;
}

IdentityTerm U(Fraction ap, Fraction aq, std::string key) {
  return {ap, aq, std::move(key), false};
}
IdentityTerm V(Fraction ap, Fraction aq, std::string key) {
  return {ap, aq, std::move(key), true};
}

}  // namespace

std::optional<std::array<AffinePoint, 2>> InvarianceBasis(std::string_view code) {
  const auto& t = BasisTable();
  if (auto it = t.find(code); it != t.end()) return it->second;
  if (const char* key = PairGroupBasisKey(code)) return PairBasisTable().at(key);
  return std::nullopt;
}

const std::vector<PeriodicityIdentity>& PeriodicityIdentities() {
  static const auto* ids = [] {
    const Fraction h = kHalf, t = kThreeHalves;
    const Point diag_u(h, h), diag_v(-h, h);
    const Point e1(1, 0), e2(0, 1);
    const Point d1(1, 1), d2(-1, 1);
    const Point bg1(h, t), bg2(-t, h);
    const Point ch1(t, h), ch2(-h, t);
    return new std::vector<PeriodicityIdentity>{
        {"A", {U(1, 0, "A"), V(0, 1, "A")}, diag_u, diag_v},
        {"E", {U(1, 0, "E"), V(0, 1, "E")}, diag_u, diag_v},
        {"BF", {U(1, 0, "B"), V(0, 1, "B"), U(0, 1, "F"), V(-1, 0, "F")}, e1, e2},
        {"BG",
         {U(1, 1, "B"), V(-1, 1, "B"), U(1, 0, "G"), V(0, 1, "G")},
         -bg2,
         bg1},
        {"BH", {U(1, 0, "B"), V(0, 1, "B"), U(1, 0, "H"), V(0, 1, "H")}, d1, d2},
        {"CF",
         {U(1, 0, "C"), V(0, 1, "C"), U(1, 1, "F"), V(-1, 1, "F")},
         diag_u,
         diag_v},
        {"CG", {U(1, 0, "C"), V(0, -1, "C"), U(0, 1, "G"), V(1, 0, "G")}, e2, e1},
        {"CH",
         {U(1, 0, "C"), V(0, -1, "C"), U(1, 1, "H"), V(1, -1, "H")},
         ch2,
         ch1},
        {"DF", {U(1, 0, "D"), V(0, 1, "D"), V(0, -1, "F"), U(-1, 0, "F")}, {}, {}},
        {"DG",
         {U(1, 1, "D"), V(1, -1, "D"), U(1, 0, "G"), V(0, -1, "G")},
         diag_u,
         -diag_v},
        {"DH", {U(1, 0, "D"), V(0, 1, "D"), U(0, 1, "H"), V(-1, 0, "H")}, e1, e2},
        {"c1=1", {U(1, 0, "c1=1"), V(0, 1, "c1=1")}, e1, e2},
        {"BG2a",
         {U(1, 0, "B"), V(0, 1, "B"), U(-1, 0, "c1=2"), V(0, -1, "c1=2")},
         {h, -h},
         diag_u},
        {"BG2b",
         {U(1, 0, "G"), V(0, 1, "G"), U(1, 1, "c1=2"), V(-1, 1, "c1=2")},
         ch1,
         ch2},
        {"BG3a",
         {U(-1, 1, "B"), V(1, 1, "B"), U(1, 0, "c1=3"), V(0, -1, "c1=3")},
         d2,
         d1},
        {"BG3b",
         {U(1, 0, "G"), V(0, 1, "G"), U(1, 0, "c1=3"), V(0, 1, "c1=3")},
         diag_u,
         diag_v},
        {"BG4a",
         {U(1, 0, "B"), V(0, 1, "B"), U(1, 0, "c1=4"), V(0, 1, "c1=4")},
         ch1,
         ch2},
        {"BG4b",
         {U(1, 0, "G"), V(0, 1, "G"), U(-1, -1, "c1=4"), V(1, -1, "c1=4")},
         diag_v,
         -diag_u},
        {"CH2a",
         {U(1, 0, "H"), V(0, 1, "H"), U(1, 0, "c1=2"), V(0, 1, "c1=2")},
         bg1,
         bg2},
        {"CH2b",
         {U(-1, 0, "C"), V(0, 1, "C"), U(1, 1, "c1=2"), V(1, -1, "c1=2")},
         diag_v,
         diag_u},
        {"CH3a",
         {U(1, 1, "H"), V(-1, 1, "H"), U(1, 0, "c1=3"), V(0, 1, "c1=3")},
         d1,
         d2},
        {"CH3b",
         {U(1, 0, "C"), V(0, 1, "C"), U(0, 1, "c1=3"), V(-1, 0, "c1=3")},
         diag_u,
         diag_v},
        {"CH4a",
         {U(1, 0, "H"), V(0, -1, "H"), U(-1, 0, "c1=4"), V(0, 1, "c1=4")},
         diag_v,
         diag_u},
        {"CH4b",
         {U(1, 0, "C"), V(0, 1, "C"), U(1, -1, "c1=4"), V(1, 1, "c1=4")},
         bg1,
         bg2},
        {"DF2",
         {U(1, 0, "D"), V(0, -1, "D"), U(0, 1, "c1=2"), V(1, 0, "c1=2")},
         diag_v,
         diag_u},
        {"DF3",
         {U(-1, 1, "D"), V(-1, -1, "D"), U(1, 0, "c1=3"), V(0, 1, "c1=3")},
         {},
         {}},
        {"DF4",
         {U(-1, 0, "D"), V(0, 1, "D"), U(0, 1, "c1=4"), V(1, 0, "c1=4")},
         diag_v,
         diag_u},
        {"DF31",
         {U(1, -1, "D"), V(1, 1, "D"), U(1, 0, "DF31"), V(0, 1, "DF31")},
         diag_u,
         diag_v},
        {"DF32",
         {U(2, 1, "D"), V(-1, 2, "D"), U(1, 0, "DF32"), V(0, 1, "DF32")},
         e1,
         e2},
        {"DF33",
         {U(2, -2, "D"), V(2, 2, "D"), U(1, 0, "DF33"), V(0, 1, "DF33")},
         bg1,
         bg2},
        {"DF34",
         {U(2, -1, "D"), V(1, 2, "D"), U(1, 0, "DF34"), V(0, 1, "DF34")},
         d1,
         d2},
        {"DF331",
         {U(1, 0, "D"), V(0, 1, "D"), U(0, 1, "DF331"), V(-1, 0, "DF331")},
         e1,
         e2},
        {"DF332",
         {U(1, -1, "D"), V(1, 1, "D"), U(1, 0, "DF332"), V(0, 1, "DF332")},
         diag_u,
         diag_v},
        {"DF333",
         {U(2, -1, "D"), V(1, 2, "D"), U(1, 0, "DF333"), V(0, 1, "DF333")},
         d1,
         d2},
        {"DF334",
         {U(2, 0, "D"), V(0, 2, "D"), U(1, 0, "DF334"), V(0, 1, "DF334")},
         ch1,
         ch2},
        {"DF33x",
         {U(-1, 0, "DF33"), V(0, -1, "DF33"), U(1, -1, "DF334"), V(1, 1, "DF334")},
         diag_u,
         diag_v},
    };
  }();
  return *ids;
}

}  // namespace tilesym
