#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gf_linalg.hpp"
#include "perm_group.hpp"

namespace grpkit {

struct AtlasEntry {
  std::string name;
  PermGroup group;
  std::uint64_t order = 0;
  bool soluble = false;
  bool supersoluble = false;
};

namespace detail {

inline PermGroup from_cycles(std::size_t degree, std::initializer_list<const char*> gens) {
  std::vector<Perm> out;
  for (const char* g : gens) out.push_back(parse_cycles(g, degree));
  return PermGroup(degree, std::move(out));
}

/// SL(2,3) acting on the eight nonzero row vectors of GF(3)^2.
inline PermGroup sl23() {
  std::vector<GFVector> points;
  for (std::uint64_t i = 1; i < 9; ++i) {
    GFVector v(3, 2);
    v[0] = static_cast<Residue>(i % 3);
    v[1] = static_cast<Residue>(i / 3);
    points.push_back(v);
  }
  auto as_perm = [&](const GFMatrix& a) {
    std::vector<Point> img;
    for (const auto& v : points) {
      GFVector w = a.apply_row(v);
      img.push_back(static_cast<Point>(std::find(points.begin(), points.end(), w) - points.begin()));
    }
    return Perm(std::move(img));
  };
  return PermGroup(8, {as_perm(GFMatrix::from_rows(3, {{1, 1}, {0, 1}})),
                       as_perm(GFMatrix::from_rows(3, {{1, 0}, {1, 1}}))});
}

}  // namespace detail

/// The built-in corpus. Flags were derived from chief series.
inline const std::vector<AtlasEntry>& atlas() {
  static const std::vector<AtlasEntry> entries = [] {
    using detail::from_cycles;
    std::vector<AtlasEntry> a;
    auto add = [&](std::string name, PermGroup g, std::uint64_t order, bool sol, bool ss) {
      a.push_back(AtlasEntry{std::move(name), std::move(g), order, sol, ss});
    };
    add("C2", from_cycles(2, {"(1 2)"}), 2, true, true);
    add("C3", from_cycles(3, {"(1 2 3)"}), 3, true, true);
    add("C4", from_cycles(4, {"(1 2 3 4)"}), 4, true, true);
    add("C6", from_cycles(6, {"(1 2 3 4 5 6)"}), 6, true, true);
    add("C12", from_cycles(12, {"(1 2 3 4 5 6 7 8 9 10 11 12)"}), 12, true, true);
    add("V4", from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"}), 4, true, true);
    add("S3", from_cycles(3, {"(1 2)", "(1 2 3)"}), 6, true, true);
    add("D8", from_cycles(4, {"(1 2 3 4)", "(1 3)"}), 8, true, true);
    add("Q8", from_cycles(8, {"(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"}), 8, true, true);
    add("A4", from_cycles(4, {"(1 2 3)", "(1 2)(3 4)"}), 12, true, false);
    add("S4", from_cycles(4, {"(1 2)", "(1 2 3 4)"}), 24, true, false);
    add("D10", from_cycles(5, {"(1 2 3 4 5)", "(2 5)(3 4)"}), 10, true, true);
    add("D12", from_cycles(6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"}), 12, true, true);
    add("C7:C3", from_cycles(7, {"(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"}), 21, true, true);
    add("SL(2,3)", detail::sl23(), 24, true, false);
    add("A5", from_cycles(5, {"(1 2 3 4 5)", "(1 2 3)"}), 60, false, false);
    add("S5", from_cycles(5, {"(1 2 3 4 5)", "(1 2)"}), 120, false, false);
    add("A5xC2", from_cycles(7, {"(1 2 3 4 5)", "(1 2 3)", "(6 7)"}), 120, false, false);
    add("S3xS3", from_cycles(6, {"(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)"}), 36, true, true);
    add("C2^3", from_cycles(6, {"(1 2)", "(3 4)", "(5 6)"}), 8, true, true);
    return a;
  }();
  return entries;
}

/// Case-insensitive exact name lookup.
inline const AtlasEntry& atlas_lookup(const std::string& name) {
  auto lower = [](std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  };
  for (const auto& e : atlas())
    if (lower(e.name) == lower(name)) return e;
  std::string names;
  for (const auto& e : atlas()) names += (names.empty() ? "" : ", ") + e.name;
  throw InvalidInput("unknown atlas group '" + name + "' (known: " + names + ")");
}

}  // namespace grpkit
