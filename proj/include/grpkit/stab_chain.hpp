#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "perm.hpp"

namespace grpkit {

/// Base and strong generating set built by deterministic incremental
/// Schreier-Sims.
///
/// Each level keeps its base point, the strong generators fixing all earlier
/// base points, and a breadth-first Schreier vector of the basic orbit in which
/// the first generator reaching a point wins. Schreier generators already
/// verified are remembered per (orbit position, generator), so adding a
/// generator later only checks new pairs. Base points passed as `base_prefix`
/// are fixed at the front of the base in the given order.
class StabChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;
    std::vector<Perm> inv;
    std::vector<Point> orbit;
    std::vector<std::int32_t> label;  // -1 not in orbit, -2 base point, else gen index
    std::vector<std::uint32_t> checked;
  };

  /// Thrown internally when the partial order passes the configured limit.
  struct OrderLimitHit {};

  StabChain() = default;

  explicit StabChain(std::size_t degree, std::span<const Point> base_prefix = {},
                     std::uint64_t order_limit = 0)
      : degree_(degree), order_limit_(order_limit) {
    for (Point b : base_prefix) {
      if (b >= degree) throw InvalidInput("base point outside degree");
      append_level(b);
    }
  }

  /// Chain for <gens>, or nullopt as soon as the order provably exceeds `limit`.
  static std::optional<StabChain> bounded(std::size_t degree,
                                          std::span<const Perm> gens,
                                          std::uint64_t limit) {
    StabChain chain(degree, {}, limit);
    try {
      for (const auto& g : gens) chain.add_generator(g);
    } catch (const OrderLimitHit&) {
      return std::nullopt;
    }
    chain.order_limit_ = 0;
    return chain;
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    b.reserve(levels_.size());
    for (const auto& L : levels_) b.push_back(L.base);
    return b;
  }

  /// Union of the level generators, in first-seen order.
  std::vector<Perm> strong_generators() const {
    std::vector<Perm> out;
    for (const auto& L : levels_)
      for (const auto& g : L.gens)
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    return out;
  }

  std::uint64_t order() const {
    std::uint64_t ord = 1;
    for (const auto& L : levels_) {
      std::uint64_t next = 0;
      if (__builtin_mul_overflow(ord, static_cast<std::uint64_t>(L.orbit.size()), &next))
        throw BoundExceeded("group order (64-bit)", ~0ull, ~0ull);
      ord = next;
    }
    return ord;
  }

  /// Strips g through levels [from, end). Returns the residue and the level at
  /// which stripping stopped (levels().size() when every level succeeded).
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from = 0) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Level& L = levels_[l];
      Point beta = g[L.base];
      if (L.label[beta] == -1) return {std::move(g), l};
      if (!tinv_.empty()) {
        g *= tinv_[l][beta];
      } else {
        while (beta != L.base) {
          auto s = static_cast<std::size_t>(L.label[beta]);
          g *= L.inv[s];
          beta = L.inv[s][beta];
        }
      }
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) throw InvalidInput("degree mismatch in membership test");
    return sift(g).first.is_identity();
  }

  /// u with base^u = beta at the given level.
  Perm transversal(std::size_t level, Point beta) const {
    return transversal_inverse(level, beta).inverse();
  }

  Perm transversal_inverse(std::size_t level, Point beta) const {
    const Level& L = levels_[level];
    if (!tinv_.empty()) return tinv_[level][beta];
    Perm x(degree_);
    while (beta != L.base) {
      auto s = static_cast<std::size_t>(L.label[beta]);
      x *= L.inv[s];
      beta = L.inv[s][beta];
    }
    return x;
  }

  /// Base images of g: identifies g uniquely among members of the group.
  std::vector<Point> key(const Perm& g) const {
    std::vector<Point> k;
    k.reserve(levels_.size());
    for (const auto& L : levels_) k.push_back(g[L.base]);
    return k;
  }

  /// Adds g to the generated group. Returns false when g was already a member.
  bool add_generator(const Perm& g) {
    if (g.degree() != degree_) throw InvalidInput("generator degree mismatch");
    if (g.is_identity() || contains(g)) return false;
    tinv_.clear();
    std::size_t j = 0;
    while (j < levels_.size() && g[levels_[j].base] == levels_[j].base) ++j;
    if (j == levels_.size()) append_level(static_cast<Point>(g.first_moved()));
    for (std::size_t l = 0; l <= j; ++l) add_to_level(l, g);
    run(j);
    return true;
  }

  /// Materializes inverse transversals so sifting costs one product per level.
  /// Skipped when it would exceed `budget` stored points.
  void freeze(std::size_t budget = 30'000'000) {
    std::size_t need = 0;
    for (const auto& L : levels_) need += L.orbit.size() * degree_;
    if (need > budget || levels_.empty()) return;
    std::vector<std::vector<Perm>> t(levels_.size());
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      const Level& L = levels_[l];
      t[l].resize(degree_);
      t[l][L.base] = Perm(degree_);
      for (std::size_t pos = 1; pos < L.orbit.size(); ++pos) {
        Point gamma = L.orbit[pos];
        auto s = static_cast<std::size_t>(L.label[gamma]);
        Point prev = L.inv[s][gamma];
        t[l][gamma] = L.inv[s] * t[l][prev];
      }
    }
    tinv_ = std::move(t);
  }

  /// Calls f(g) once for every group element, in a fixed order.
  template <class F>
  void for_each_element(F&& f) const {
    std::vector<std::vector<Perm>> trans(levels_.size());
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      const Level& L = levels_[l];
      trans[l].reserve(L.orbit.size());
      for (Point beta : L.orbit) trans[l].push_back(transversal(l, beta));
    }
    if (levels_.empty()) {
      f(Perm(degree_));
      return;
    }
    // elements are u_{k-1} ... u_1 u_0, built as running prefixes
    std::vector<Perm> suffix(levels_.size() + 1);
    suffix[0] = Perm(degree_);
    enumerate(trans, 0, suffix, f);
  }

 private:
  template <class F>
  void enumerate(const std::vector<std::vector<Perm>>& trans, std::size_t depth,
                 std::vector<Perm>& suffix, F& f) const {
    // depth counts from the last level towards level 0
    std::size_t l = levels_.size() - 1 - depth;
    for (const auto& u : trans[l]) {
      suffix[depth + 1] = depth == 0 ? u : suffix[depth] * u;
      if (l == 0)
        f(static_cast<const Perm&>(suffix[depth + 1]));
      else
        enumerate(trans, depth + 1, suffix, f);
    }
  }

  void append_level(Point b) {
    Level L;
    L.base = b;
    L.label.assign(degree_, -1);
    L.label[b] = -2;
    L.orbit.push_back(b);
    L.checked.push_back(0);
    levels_.push_back(std::move(L));
  }

  void add_to_level(std::size_t l, const Perm& g) {
    Level& L = levels_[l];
    std::size_t old_gens = L.gens.size();
    std::size_t old_orbit = L.orbit.size();
    L.gens.push_back(g);
    L.inv.push_back(g.inverse());
    for (std::size_t pos = 0; pos < L.orbit.size(); ++pos) {
      std::size_t s0 = pos < old_orbit ? old_gens : 0;
      Point beta = L.orbit[pos];
      for (std::size_t s = s0; s < L.gens.size(); ++s) {
        Point gamma = L.gens[s][beta];
        if (L.label[gamma] == -1) {
          L.label[gamma] = static_cast<std::int32_t>(s);
          L.orbit.push_back(gamma);
          L.checked.push_back(0);
        }
      }
    }
    if (order_limit_ != 0 && L.orbit.size() != old_orbit) {
      std::uint64_t ord = 1;
      for (const auto& M : levels_) {
        if (__builtin_mul_overflow(ord, static_cast<std::uint64_t>(M.orbit.size()), &ord))
          throw OrderLimitHit{};
      }
      if (ord > order_limit_) throw OrderLimitHit{};
    }
  }

  void run(std::size_t start) {
    auto i = static_cast<std::ptrdiff_t>(start);
    while (i >= 0) {
      auto li = static_cast<std::size_t>(i);
      bool restarted = false;
      for (std::size_t pos = 0; pos < levels_[li].orbit.size() && !restarted; ++pos) {
        if (levels_[li].checked[pos] >= levels_[li].gens.size()) continue;
        Perm u = transversal(li, levels_[li].orbit[pos]);
        for (std::size_t s = levels_[li].checked[pos]; s < levels_[li].gens.size(); ++s) {
          Perm sg = u * levels_[li].gens[s];
          auto [h, lev] = sift(std::move(sg), li);
          levels_[li].checked[pos] = static_cast<std::uint32_t>(s + 1);
          if (h.is_identity()) continue;
          if (lev == levels_.size()) append_level(static_cast<Point>(h.first_moved()));
          for (std::size_t l = li + 1; l <= lev; ++l) add_to_level(l, h);
          i = static_cast<std::ptrdiff_t>(lev);
          restarted = true;
          break;
        }
      }
      if (!restarted) --i;
    }
  }

  std::size_t degree_ = 0;
  std::uint64_t order_limit_ = 0;
  std::vector<Level> levels_;
  std::vector<std::vector<Perm>> tinv_;
};

}  // namespace grpkit
