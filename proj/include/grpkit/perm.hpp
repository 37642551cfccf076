#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace grpkit {

using Point = std::uint32_t;

/// A permutation of {0..degree-1}, stored as a dense image array.
///
/// Products compose left to right: x^(g*h) = (x^g)^h. Every textual surface
/// (cycle strings, `.grp` files, reports) is 1-based.
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// Takes 0-based images; throws InvalidInput unless they form a bijection.
  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x])
        throw InvalidInput("images do not form a bijection");
      seen[x] = true;
    }
  }

  static Perm identity(std::size_t degree) { return Perm(degree); }

  /// Builds from 1-based disjoint (or not) cycles; cycles compose left to right.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles) {
    Perm result(degree);
    for (const auto& cyc : cycles) {
      if (cyc.size() < 2) {
        for (Point x : cyc)
          if (x < 1 || x > degree)
            throw InvalidInput("cycle point " + std::to_string(x) +
                               " outside 1.." + std::to_string(degree));
        continue;
      }
      Perm c(degree);
      std::vector<bool> seen(degree, false);
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        Point a = cyc[i];
        Point b = cyc[(i + 1) % cyc.size()];
        if (a < 1 || a > degree || b < 1 || b > degree)
          throw InvalidInput("cycle point outside 1.." + std::to_string(degree));
        if (seen[a - 1]) throw InvalidInput("repeated point in a cycle");
        seen[a - 1] = true;
        c.images_[a - 1] = b - 1;
      }
      result = result * c;
    }
    return result;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Perm operator*(const Perm& rhs) const {
    if (rhs.degree() != degree()) throw InvalidInput("degree mismatch in product");
    Perm out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out.images_[i] = rhs.images_[images_[i]];
    return out;
  }

  Perm& operator*=(const Perm& rhs) {
    if (rhs.degree() != degree()) throw InvalidInput("degree mismatch in product");
    if (&rhs == this) return *this = *this * rhs;
    for (auto& x : images_) x = rhs.images_[x];
    return *this;
  }

  Perm inverse() const {
    Perm out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out.images_[images_[i]] = static_cast<Point>(i);
    return out;
  }

  /// s^-1 * this * s
  Perm conjugate(const Perm& s) const {
    Perm out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out.images_[s.images_[i]] = s.images_[images_[i]];
    return out;
  }

  Perm pow(long long e) const {
    Perm base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                                 : static_cast<unsigned long long>(e);
    Perm acc(degree());
    while (n) {
      if (n & 1) acc *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return acc;
  }

  /// Lcm of cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
        seen[x] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  /// First point moved, or degree() when identity.
  std::size_t first_moved() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return i;
    return images_.size();
  }

  /// Disjoint-cycle notation with 1-based points; "()" for the identity.
  std::string to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      bool first = true;
      for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
        seen[x] = true;
        if (!first) out += ' ';
        out += std::to_string(x + 1);
        first = false;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Parses "(1 2 3)(4 5)" (1-based, commas between points tolerated) into a
/// permutation of the given degree. "()" and "" denote the identity.
inline Perm parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r'))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw InvalidInput("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<Point> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw InvalidInput("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      Point v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc{} || ptr == text.data() + i)
        throw InvalidInput("bad point in cycle notation: " + std::string(text));
      i = static_cast<std::size_t>(ptr - text.data());
      cyc.push_back(v);
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return Perm::from_cycles(degree, cycles);
}

}  // namespace grpkit
