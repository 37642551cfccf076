#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "perm_group.hpp"

namespace grpkit {

// Group text format:
//   degree N
//   gen (a b c)(d e)
// one `gen` line per generator, 1-based points, blank lines and `#` comments ignored.

namespace detail {
inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}
}  // namespace detail

/// Parses generators only; reads until end of input or a line that is not
/// part of the group description (returned through `rest` when non-null).
inline PermGroup parse_grp(std::istream& in, std::string* rest = nullptr) {
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Perm> gens;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line.rfind("degree", 0) == 0) {
      if (have_degree) throw InvalidInput("line " + std::to_string(lineno) + ": repeated degree");
      std::istringstream ls(line.substr(6));
      long long d = 0;
      if (!(ls >> d) || d < 1)
        throw InvalidInput("line " + std::to_string(lineno) + ": bad degree");
      degree = static_cast<std::size_t>(d);
      have_degree = true;
    } else if (line.rfind("gen", 0) == 0) {
      if (!have_degree)
        throw InvalidInput("line " + std::to_string(lineno) + ": gen before degree");
      try {
        gens.push_back(parse_cycles(detail::trim(line.substr(3)), degree));
      } catch (const InvalidInput& e) {
        throw InvalidInput("line " + std::to_string(lineno) + ": " + e.what());
      }
    } else if (rest != nullptr) {
      *rest = line;
      break;
    } else {
      throw InvalidInput("line " + std::to_string(lineno) + ": unrecognized '" + line + "'");
    }
  }
  if (!have_degree) throw InvalidInput("missing `degree` line");
  return PermGroup(degree, std::move(gens));
}

inline PermGroup parse_grp(const std::string& text) {
  std::istringstream in(text);
  return parse_grp(in);
}

inline PermGroup read_grp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return parse_grp(in);
}

inline std::string print_grp(const PermGroup& g) {
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& p : g.generators()) out += "gen " + p.to_cycle_string() + "\n";
  return out;
}

}  // namespace grpkit
