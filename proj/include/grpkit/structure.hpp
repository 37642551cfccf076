#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "homomorphism.hpp"
#include "limits.hpp"
#include "perm_group.hpp"

namespace grpkit {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

namespace detail {

struct KeyHash {
  std::size_t operator()(const std::vector<Point>& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : k) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

/// Closure of `seeds` under conjugation by the generators of g.
inline PermGroup normal_closure_gens(const PermGroup& g, const std::vector<Perm>& seeds) {
  StabChain chain(g.degree());
  std::vector<Perm> gens;
  std::vector<Perm> queue;
  for (const auto& s : seeds)
    if (chain.add_generator(s)) {
      gens.push_back(s);
      queue.push_back(s);
    }
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& x : g.generators()) {
      Perm c = queue[i].conjugate(x);
      if (chain.add_generator(c)) {
        gens.push_back(c);
        queue.push_back(std::move(c));
      }
    }
  return PermGroup(g.degree(), std::move(gens));
}

/// Subgroup of g generated by the elements passing `keep`.
template <class F>
PermGroup filter_subgroup(const PermGroup& g, F&& keep) {
  StabChain chain(g.degree());
  std::vector<Perm> gens;
  g.for_each_element([&](const Perm& x) {
    if (!chain.contains(x) && keep(x)) {
      chain.add_generator(x);
      gens.push_back(x);
    }
  });
  return PermGroup(g.degree(), std::move(gens));
}

}  // namespace detail

/// S is normalized by every generator of G.
inline bool is_normal(const PermGroup& g, const PermGroup& s) {
  if (!s.is_subgroup_of(g)) return false;
  for (const auto& x : g.generators())
    for (const auto& y : s.generators())
      if (!s.contains(y.conjugate(x))) return false;
  return true;
}

inline SubgroupHandle normal_closure(const PermGroup& g, const Perm& x) {
  if (!g.contains(x)) throw InvalidInput("normal_closure: element not in group");
  return SubgroupHandle{g, detail::normal_closure_gens(g, {x})};
}

inline SubgroupHandle normal_closure(const PermGroup& g, const PermGroup& s) {
  return SubgroupHandle{g, detail::normal_closure_gens(g, s.generators())};
}

/// [A, B] for subgroups normalized by G, as the normal closure in G of the
/// generator commutators.
inline PermGroup commutator_subgroup(const PermGroup& g, const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> seeds;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) {
      Perm c = commutator(x, y);
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  return detail::normal_closure_gens(g, seeds);
}

inline PermGroup derived_subgroup(const PermGroup& g) { return commutator_subgroup(g, g, g); }

/// G, G', G'', ... until it stabilizes.
inline std::vector<SubgroupHandle> derived_series(const PermGroup& g) {
  std::vector<SubgroupHandle> out{SubgroupHandle::whole(g)};
  while (true) {
    PermGroup next = derived_subgroup(out.back().group);
    if (next.order() == out.back().order()) break;
    out.push_back(SubgroupHandle{g, next});
  }
  return out;
}

/// G = g_1, g_{i+1} = [g_i, G], until it stabilizes.
inline std::vector<SubgroupHandle> lower_central_series(const PermGroup& g) {
  std::vector<SubgroupHandle> out{SubgroupHandle::whole(g)};
  while (true) {
    PermGroup next = commutator_subgroup(g, out.back().group, g);
    if (next.order() == out.back().order()) break;
    out.push_back(SubgroupHandle{g, next});
  }
  return out;
}

inline bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

inline bool is_soluble(const PermGroup& g) {
  return g.cached<bool>("soluble", [&] { return derived_series(g).back().group.is_trivial(); });
}

inline bool is_nilpotent(const PermGroup& g) {
  return g.cached<bool>("nilpotent",
                        [&] { return lower_central_series(g).back().group.is_trivial(); });
}

inline SubgroupHandle centralizer(const PermGroup& g, const PermGroup& s) {
  const auto& sg = s.generators();
  return SubgroupHandle{g, detail::filter_subgroup(g, [&](const Perm& x) {
                          for (const auto& y : sg)
                            if (!(x * y == y * x)) return false;
                          return true;
                        })};
}

inline SubgroupHandle normalizer(const PermGroup& g, const PermGroup& s) {
  const auto& sg = s.generators();
  return SubgroupHandle{g, detail::filter_subgroup(g, [&](const Perm& x) {
                          for (const auto& y : sg)
                            if (!s.contains(y.conjugate(x))) return false;
                          return true;
                        })};
}

/// A n B, by filtering the elements of the smaller group.
inline PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  if (a.is_subgroup_of(b)) return a;
  if (b.is_subgroup_of(a)) return b;
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  return detail::filter_subgroup(small, [&](const Perm& x) { return large.contains(x); });
}

inline SubgroupHandle intersection(const SubgroupHandle& a, const SubgroupHandle& b) {
  return SubgroupHandle{a.parent, intersection(a.group, b.group)};
}

/// Largest normal subgroup of G inside S: intersect S with its conjugates
/// under the generators until stable.
inline SubgroupHandle core(const PermGroup& g, const PermGroup& s) {
  PermGroup cur = s;
  while (!is_normal(g, cur)) {
    for (const auto& x : g.generators()) {
      std::vector<Perm> conj;
      for (const auto& y : cur.generators()) conj.push_back(y.conjugate(x));
      cur = intersection(cur, PermGroup(g.degree(), std::move(conj)));
    }
  }
  return SubgroupHandle{g, cur};
}

/// Sylow p-subgroup grown one p-element at a time inside normalizers.
inline SubgroupHandle sylow(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput("sylow: " + std::to_string(p) + " is not prime");
  std::uint64_t target = p_part(g.order(), p);
  PermGroup cur = PermGroup::trivial(g.degree());
  while (cur.order() < target) {
    bool grown = false;
    g.for_each_element([&](const Perm& x) {
      if (cur.order() >= target || cur.contains(x)) return;
      if (!cur.contains(x.pow(static_cast<long long>(p)))) return;
      for (const auto& y : cur.generators())
        if (!cur.contains(y.conjugate(x))) return;
      std::vector<Perm> gens = cur.generators();
      gens.push_back(x);
      cur = PermGroup(g.degree(), std::move(gens));
      grown = true;
    });
    if (!grown) throw Error("sylow: failed to extend a p-subgroup");
  }
  return SubgroupHandle{g, cur};
}

/// One representative per conjugacy class, in element-enumeration order.
inline std::vector<Perm> conjugacy_class_reps(const PermGroup& g) {
  std::unordered_set<std::vector<Point>, detail::KeyHash> seen;
  std::vector<Perm> reps;
  g.for_each_element([&](const Perm& x) {
    if (seen.count(g.key(x))) return;
    reps.push_back(x);
    std::vector<Perm> queue{x};
    seen.insert(g.key(x));
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& s : g.generators()) {
        Perm c = queue[i].conjugate(s);
        if (seen.insert(g.key(c)).second) queue.push_back(std::move(c));
      }
  });
  return reps;
}

/// Inclusion-minimal normal closures of class representatives, sorted by order.
inline std::vector<SubgroupHandle> minimal_normal_subgroups(const PermGroup& g) {
  auto groups = g.cached<std::vector<PermGroup>>("minimal_normal", [&] {
    std::vector<PermGroup> closures;
    for (const auto& x : conjugacy_class_reps(g)) {
      if (x.is_identity()) continue;
      PermGroup n = detail::normal_closure_gens(g, {x});
      bool dup = false;
      for (const auto& c : closures)
        if (c.same_elements(n)) dup = true;
      if (!dup) closures.push_back(std::move(n));
    }
    std::vector<PermGroup> out;
    for (const auto& n : closures) {
      bool minimal = true;
      for (const auto& m : closures)
        if (m.order() < n.order() && m.is_subgroup_of(n)) minimal = false;
      if (minimal) out.push_back(n);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.order() < b.order(); });
    return out;
  });
  std::vector<SubgroupHandle> out;
  for (auto& n : groups) out.push_back(SubgroupHandle{g, n});
  return out;
}

inline SubgroupHandle socle(const PermGroup& g) {
  return join_all(g, minimal_normal_subgroups(g));
}

struct ChiefSeries {
  std::vector<SubgroupHandle> terms;  // 1 = N_0 < N_1 < ... < N_r = G
  std::vector<std::uint64_t> factor_orders;
};

/// Each step pulls back a minimal normal subgroup of G/N_i.
inline ChiefSeries chief_series(const PermGroup& g) {
  ChiefSeries cs;
  cs.terms.push_back(SubgroupHandle::trivial(g));
  while (cs.terms.back().order() < g.order()) {
    const SubgroupHandle& n = cs.terms.back();
    SubgroupHandle next;
    if (n.group.is_trivial()) {
      next = minimal_normal_subgroups(g).front();
    } else {
      CosetAction q = coset_action(g, n);
      next = q.hom.preimage(minimal_normal_subgroups(q.image).front().group);
    }
    cs.factor_orders.push_back(next.order() / n.order());
    cs.terms.push_back(std::move(next));
  }
  return cs;
}

/// Every chief factor has prime order. Insoluble groups are rejected before
/// building the series.
inline bool is_supersoluble(const PermGroup& g) {
  return g.cached<bool>("supersoluble", [&] {
    if (!is_soluble(g)) return false;
    for (auto f : chief_series(g).factor_orders)
      if (!is_prime(f)) return false;
    return true;
  });
}

/// Largest normal p-subgroup, as the core of a Sylow p-subgroup.
inline SubgroupHandle p_core(const PermGroup& g, std::uint64_t p) {
  return core(g, sylow(g, p).group);
}

/// Join of the p-cores over the primes dividing |G|.
inline SubgroupHandle fitting(const PermGroup& g) {
  return SubgroupHandle{g, g.cached<PermGroup>("fitting", [&] {
                          std::vector<SubgroupHandle> cores;
                          for (auto p : prime_divisors(g.order())) cores.push_back(p_core(g, p));
                          return join_all(g, cores).group;
                        })};
}

/// F*(G): F = F(G), J = F C_G(F), and F*(G)/F = Soc(J/F).
inline SubgroupHandle generalized_fitting_star(const PermGroup& g) {
  SubgroupHandle f = fitting(g);
  SubgroupHandle c = centralizer(g, f.group);
  SubgroupHandle j = join(f, c);
  if (f.group.is_trivial()) return SubgroupHandle{g, socle(j.group).group};
  if (f.order() == j.order()) return f;
  CosetAction q = coset_action(j.group, SubgroupHandle{j.group, f.group});
  SubgroupHandle pre = q.hom.preimage(socle(q.image).group);
  return SubgroupHandle{g, join(SubgroupHandle{j.group, pre.group}, SubgroupHandle{j.group, f.group}).group};
}

}  // namespace grpkit
