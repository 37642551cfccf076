#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "affine.hpp"
#include "errors.hpp"
#include "homomorphism.hpp"
#include "limits.hpp"
#include "meataxe.hpp"
#include "perm_group.hpp"
#include "structure.hpp"

namespace grpkit {

/// Canonical ordering key of a subgroup: its lexicographically least
/// non-identity element and an order-independent hash of all elements.
struct SubgroupFingerprint {
  std::vector<Point> least;
  std::uint64_t hash_sum = 0;
  friend auto operator<=>(const SubgroupFingerprint&, const SubgroupFingerprint&) = default;
};

inline SubgroupFingerprint fingerprint(const PermGroup& g) {
  SubgroupFingerprint fp;
  PermHash h;
  bool have = false;
  g.for_each_element([&](const Perm& x) {
    fp.hash_sum += detail::splitmix(h(x));
    if (x.is_identity()) return;
    if (!have || x.images() < fp.least) {
      fp.least = x.images();
      have = true;
    }
  });
  return fp;
}

struct MaximalSet {
  PermGroup parent;
  std::vector<SubgroupHandle> maximals;
  std::string method;  // "brute" or "split-extension"
};

namespace detail {

/// Elements of a small group with a full multiplication table.
class ElementTable {
 public:
  explicit ElementTable(const PermGroup& g) : g_(g) {
    check_bound("brute-force group order", g.order(), limits().brute_bound);
    g.for_each_element([&](const Perm& x) {
      index_.emplace(g.key(x), static_cast<std::uint32_t>(elems_.size()));
      elems_.push_back(x);
    });
    n_ = elems_.size();
    mul_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) mul_[i * n_ + j] = index_of(elems_[i] * elems_[j]);
    identity_ = index_of(Perm(g.degree()));
  }

  std::size_t size() const noexcept { return n_; }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return mul_[a * n_ + b]; }
  const Perm& element(std::uint32_t i) const { return elems_[i]; }
  std::uint32_t index_of(const Perm& x) const { return index_.at(g_.key(x)); }

 private:
  PermGroup g_;
  std::vector<Perm> elems_;
  std::unordered_map<std::vector<Point>, std::uint32_t, KeyHash> index_;
  std::vector<std::uint32_t> mul_;
  std::size_t n_ = 0;
  std::uint32_t identity_ = 0;
};

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : b) h = (h ^ splitmix(w)) * 1099511628211ull;
    return h;
  }
};

struct SmallSubgroup {
  Bits bits;
  std::vector<std::uint32_t> gens;
  std::size_t order = 0;
};

inline bool has(const Bits& b, std::uint32_t i) { return (b[i >> 6] >> (i & 63)) & 1; }
inline void set(Bits& b, std::uint32_t i) { b[i >> 6] |= 1ull << (i & 63); }

inline SmallSubgroup closure(const ElementTable& t, std::vector<std::uint32_t> gens) {
  SmallSubgroup s;
  s.bits.assign((t.size() + 63) / 64, 0);
  std::vector<std::uint32_t> queue{t.identity()};
  set(s.bits, t.identity());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto g : gens) {
      std::uint32_t y = t.mul(queue[i], g);
      if (!has(s.bits, y)) {
        set(s.bits, y);
        queue.push_back(y);
      }
    }
  s.order = queue.size();
  s.gens = std::move(gens);
  return s;
}

inline bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

/// Every subgroup, by extending each known subgroup with each cyclic subgroup.
inline std::vector<SmallSubgroup> subgroup_lattice(const ElementTable& t) {
  std::vector<SmallSubgroup> subs{closure(t, {})};
  std::unordered_set<Bits, BitsHash> seen{subs.front().bits};
  std::vector<std::uint32_t> cyclic_gens;
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    SmallSubgroup c = closure(t, {x});
    if (seen.insert(c.bits).second) {
      cyclic_gens.push_back(x);
      subs.push_back(std::move(c));
    }
  }
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (auto x : cyclic_gens) {
      if (has(subs[i].bits, x)) continue;
      std::vector<std::uint32_t> gens = subs[i].gens;
      gens.push_back(x);
      SmallSubgroup c = closure(t, std::move(gens));
      if (seen.insert(c.bits).second) subs.push_back(std::move(c));
    }
  return subs;
}

inline PermGroup to_perm_group(const ElementTable& t, const SmallSubgroup& s, std::size_t degree) {
  std::vector<Perm> gens;
  for (auto i : s.gens) gens.push_back(t.element(i));
  return PermGroup(degree, std::move(gens));
}

inline void sort_maximals(const PermGroup& g, std::vector<PermGroup>& ms) {
  std::vector<std::pair<std::pair<std::uint64_t, SubgroupFingerprint>, std::size_t>> keys;
  for (std::size_t i = 0; i < ms.size(); ++i)
    keys.push_back({{g.order() / ms[i].order(), fingerprint(ms[i])}, i});
  std::stable_sort(keys.begin(), keys.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<PermGroup> sorted;
  for (const auto& k : keys) sorted.push_back(ms[k.second]);
  ms = std::move(sorted);
}

/// Subgroups <U, k_1 a_1, ..., k_r a_r> of order |U| |K| over all choices of
/// a_i from `reps`, after discarding choices with (k_i a_i)^ord(k_i) outside U.
inline std::vector<PermGroup> twisted_complements(std::size_t degree, const PermGroup& u,
                                                  const std::vector<Perm>& k_gens,
                                                  std::uint64_t k_order,
                                                  const std::vector<Perm>& reps) {
  std::vector<std::vector<Perm>> options(k_gens.size());
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < k_gens.size(); ++i) {
    auto ord = static_cast<long long>(k_gens[i].order());
    for (const auto& a : reps) {
      Perm c = k_gens[i] * a;
      if (u.contains(c.pow(ord))) options[i].push_back(std::move(c));
    }
    if (options[i].empty()) return {};
    if (__builtin_mul_overflow(tuples, static_cast<std::uint64_t>(options[i].size()), &tuples))
      tuples = ~0ull;
  }
  check_bound("complement tuple", tuples, limits().tuple_bound);
  std::uint64_t target = u.order() * k_order;
  std::vector<PermGroup> out;
  std::vector<std::size_t> pick(k_gens.size(), 0);
  std::vector<Perm> gens = u.generators();
  std::size_t base = gens.size();
  gens.resize(base + k_gens.size());
  while (true) {
    for (std::size_t i = 0; i < k_gens.size(); ++i) gens[base + i] = options[i][pick[i]];
    auto chain = StabChain::bounded(degree, gens, target);
    if (chain && chain->order() == target) out.push_back(PermGroup(degree, gens));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

}  // namespace detail

/// Every subgroup of a group of order at most limits().brute_bound.
inline std::vector<SubgroupHandle> all_subgroups(const PermGroup& g) {
  detail::ElementTable t(g);
  std::vector<SubgroupHandle> out;
  for (const auto& s : detail::subgroup_lattice(t))
    out.push_back(SubgroupHandle{g, detail::to_perm_group(t, s, g.degree())});
  return out;
}

inline std::vector<PermGroup> maximal_subgroups_brute(const PermGroup& g) {
  detail::ElementTable t(g);
  auto subs = detail::subgroup_lattice(t);
  std::vector<PermGroup> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].order == t.size()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < subs.size() && maximal; ++j)
      if (subs[j].order > subs[i].order && subs[j].order < t.size() &&
          detail::subset(subs[i].bits, subs[j].bits))
        maximal = false;
    if (maximal) out.push_back(detail::to_perm_group(t, subs[i], g.degree()));
  }
  detail::sort_maximals(g, out);
  return out;
}

inline MaximalSet maximal_subgroups(const PermGroup& g);

/// Maximal subgroups of an affine group A:K: the preimages of the maximal
/// subgroups of K, and the complements to A/U in G/U lifted to G for every
/// maximal submodule U of A.
inline std::vector<PermGroup> maximal_subgroups_split(const PermGroup& g, std::uint64_t seed = 0) {
  const SplitInfo* info = g.split_info();
  if (info == nullptr) throw NotApplicable("group carries no split-extension metadata");
  const PermGroup& k = info->module.group();
  const std::size_t n = g.degree();
  std::vector<PermGroup> out;

  if (!k.is_trivial()) {
    Homomorphism to_complement = Homomorphism::build(k, n, info->complement_gens, false);
    for (const auto& mk : maximal_subgroups(k).maximals) {
      std::vector<Perm> gens = info->translation_gens;
      for (const auto& x : mk.group.generators()) gens.push_back(to_complement.apply(x));
      out.emplace_back(n, std::move(gens));
    }
  }

  const FpModule& m = info->module;
  for (const auto& u : maximal_submodules(m, seed)) {
    std::vector<bool> piv(m.dim(), false);
    for (auto c : u.pivots) piv[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!piv[j]) free.push_back(j);
    std::uint64_t count = detail::ipow(m.p(), free.size(), limits().tuple_bound);
    check_bound("complement coset representatives", count, limits().tuple_bound);
    std::vector<Perm> reps;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      GFVector digits = vector_from_index(m.p(), free.size(), idx);
      GFVector coords(m.p(), m.dim());
      for (std::size_t j = 0; j < free.size(); ++j) coords[free[j]] = digits[j];
      reps.push_back(info->translation(coords));
    }
    std::vector<Perm> u_gens;
    for (std::size_t i = 0; i < u.dim(); ++i) u_gens.push_back(info->translation(u.basis.row(i)));
    PermGroup ug(n, std::move(u_gens));
    for (auto& t : detail::twisted_complements(n, ug, info->complement_gens, k.order(), reps))
      out.push_back(std::move(t));
  }
  detail::sort_maximals(g, out);
  return out;
}

/// Split path when the group carries affine metadata, brute path otherwise.
/// Cached per group.
inline MaximalSet maximal_subgroups(const PermGroup& g) {
  bool split = g.split_info() != nullptr;
  auto groups = g.cached<std::vector<PermGroup>>("maximals", [&] {
    if (split) return maximal_subgroups_split(g);
    if (g.order() > limits().brute_bound)
      throw NotApplicable("maximal subgroups: order " + std::to_string(g.order()) +
                          " exceeds the brute-force bound " +
                          std::to_string(limits().brute_bound) +
                          " and the group has no split-extension metadata");
    return maximal_subgroups_brute(g);
  });
  MaximalSet ms{g, {}, split ? "split-extension" : "brute"};
  for (auto& m : groups) ms.maximals.push_back(SubgroupHandle{g, m});
  return ms;
}

/// All complements of an abelian normal subgroup A of X, given one complement K0.
inline std::vector<SubgroupHandle> complements_to_abelian_normal(const PermGroup& x,
                                                                 const SubgroupHandle& a,
                                                                 const SubgroupHandle& k0) {
  if (!is_normal(x, a.group)) throw InvalidInput("complements: A is not normal");
  if (!is_abelian(a.group)) throw InvalidInput("complements: A is not abelian");
  if (!k0.group.is_subgroup_of(x) || a.order() * k0.order() != x.order() ||
      !intersection(a.group, k0.group).is_trivial())
    throw InvalidInput("complements: K0 is not a complement to A");
  std::vector<Perm> reps = a.group.elements();
  std::vector<SubgroupHandle> out;
  for (auto& t : detail::twisted_complements(x.degree(), PermGroup::trivial(x.degree()),
                                             k0.group.generators(), k0.order(), reps)) {
    bool dup = false;
    for (const auto& o : out)
      if (o.group.same_elements(t)) dup = true;
    if (!dup) out.push_back(SubgroupHandle{x, std::move(t)});
  }
  return out;
}

/// Intersection of all maximal subgroups. Cached per group.
inline SubgroupHandle frattini(const PermGroup& g) {
  return SubgroupHandle{g, g.cached<PermGroup>("frattini", [&] {
                          auto ms = maximal_subgroups(g).maximals;
                          if (ms.empty()) return PermGroup::trivial(g.degree());
                          PermGroup cur = ms.front().group;
                          for (std::size_t i = 1; i < ms.size() && !cur.is_trivial(); ++i)
                            cur = intersection(cur, ms[i].group);
                          return cur;
                        })};
}

}  // namespace grpkit
