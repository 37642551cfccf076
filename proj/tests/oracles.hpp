#pragma once

// Brute-force reference computations. Deliberately naive: element sets are
// std::set<Perm>, vectors are enumerated one by one.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <grpkit/fp_module.hpp>
#include <grpkit/perm.hpp>
#include <grpkit/perm_group.hpp>

namespace oracle {

using grpkit::Perm;
using ElementSet = std::set<Perm>;

inline ElementSet closure(std::size_t degree, const std::vector<Perm>& gens) {
  ElementSet seen{Perm::identity(degree)};
  std::vector<Perm> queue{Perm::identity(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Perm y = queue[i] * g;
      if (seen.insert(y).second) queue.push_back(y);
    }
  return seen;
}

inline ElementSet elements(const grpkit::PermGroup& g) { return closure(g.degree(), g.generators()); }

inline bool is_hom(std::size_t degree, const std::vector<Perm>& gens, std::size_t codegree,
                   const std::vector<Perm>& images) {
  std::map<Perm, Perm> img{{Perm::identity(degree), Perm::identity(codegree)}};
  std::vector<Perm> queue{Perm::identity(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Perm y = queue[i] * gens[j];
      Perm v = img.at(queue[i]) * images[j];
      auto [it, fresh] = img.emplace(y, v);
      if (fresh) queue.push_back(y);
      else if (it->second != v) return false;
    }
  return true;
}

inline ElementSet join(std::size_t degree, const ElementSet& a, const ElementSet& b) {
  std::vector<Perm> gens(a.begin(), a.end());
  gens.insert(gens.end(), b.begin(), b.end());
  return closure(degree, gens);
}

/// All subgroups: cyclic ones closed under pairwise joins.
inline std::vector<ElementSet> subgroups(const grpkit::PermGroup& g) {
  std::set<ElementSet> found;
  std::vector<ElementSet> list;
  for (const auto& x : elements(g)) {
    ElementSet c = closure(g.degree(), {x});
    if (found.insert(c).second) list.push_back(c);
  }
  std::vector<ElementSet> cyclic = list;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (const auto& c : cyclic) {
      if (std::includes(list[i].begin(), list[i].end(), c.begin(), c.end())) continue;
      ElementSet j = join(g.degree(), list[i], c);
      if (found.insert(j).second) list.push_back(j);
    }
  return list;
}

inline bool is_normal(const ElementSet& g, const ElementSet& h) {
  for (const auto& x : g)
    for (const auto& y : h)
      if (!h.count(y.conjugate(x))) return false;
  return true;
}

inline std::vector<ElementSet> normal_subgroups(const grpkit::PermGroup& g) {
  ElementSet all = oracle::elements(g);
  std::vector<ElementSet> out;
  for (auto& s : oracle::subgroups(g))
    if (is_normal(all, s)) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

inline std::vector<ElementSet> maximal_subgroups(const grpkit::PermGroup& g) {
  auto subs = oracle::subgroups(g);
  std::size_t n = oracle::elements(g).size();
  std::vector<ElementSet> out;
  for (const auto& s : subs) {
    if (s.size() == n) continue;
    bool maximal = true;
    for (const auto& t : subs)
      if (t.size() > s.size() && t.size() < n && std::includes(t.begin(), t.end(), s.begin(), s.end()))
        maximal = false;
    if (maximal) out.push_back(s);
  }
  return out;
}

inline ElementSet intersect_all(const std::vector<ElementSet>& sets, const ElementSet& whole) {
  ElementSet cur = whole;
  for (const auto& s : sets) {
    ElementSet next;
    std::set_intersection(cur.begin(), cur.end(), s.begin(), s.end(), std::inserter(next, next.end()));
    cur = std::move(next);
  }
  return cur;
}

inline ElementSet centralizer(const ElementSet& g, const ElementSet& s) {
  ElementSet out;
  for (const auto& x : g) {
    bool ok = true;
    for (const auto& y : s) ok = ok && x * y == y * x;
    if (ok) out.insert(x);
  }
  return out;
}

/// Chief factor orders read off a chain of normal subgroups, each minimal over the last.
inline std::vector<std::uint64_t> chief_factor_orders(const grpkit::PermGroup& g) {
  auto normals = oracle::normal_subgroups(g);
  ElementSet cur = normals.front();
  std::vector<std::uint64_t> out;
  while (cur.size() < normals.back().size()) {
    for (const auto& n : normals)
      if (n.size() > cur.size() && std::includes(n.begin(), n.end(), cur.begin(), cur.end())) {
        out.push_back(n.size() / cur.size());
        cur = n;
        break;
      }
  }
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_supersoluble(const grpkit::PermGroup& g) {
  for (auto f : oracle::chief_factor_orders(g))
    if (!is_prime(f)) return false;
  return true;
}

inline ElementSet as_set(const grpkit::PermGroup& g) { return elements(g); }

// Modules: vectors as index sets, enumerated exhaustively.

inline std::set<std::uint64_t> spin(const grpkit::FpModule& m, const grpkit::GFVector& seed) {
  std::set<std::uint64_t> span{grpkit::vector_index(grpkit::GFVector(m.p(), m.dim()))};
  std::vector<grpkit::GFVector> queue;
  auto add_all = [&](const grpkit::GFVector& v) {
    // closes the span under addition with v's multiples
    std::vector<std::uint64_t> cur(span.begin(), span.end());
    for (auto idx : cur) {
      grpkit::GFVector w = grpkit::vector_from_index(m.p(), m.dim(), idx);
      for (std::uint32_t c = 1; c < m.p(); ++c) {
        grpkit::GFVector z = w;
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = static_cast<grpkit::Residue>((z[i] + c * v[i]) % m.p());
        span.insert(grpkit::vector_index(z));
      }
    }
  };
  queue.push_back(seed);
  add_all(seed);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& a : m.action()) {
      grpkit::GFVector w = a.apply_row(queue[i]);
      if (!span.count(grpkit::vector_index(w))) {
        add_all(w);
        queue.push_back(w);
      }
    }
  return span;
}

/// Every submodule as a set of vector indices; needs p^dim small.
inline std::vector<std::set<std::uint64_t>> submodules(const grpkit::FpModule& m) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < m.dim(); ++i) count *= m.p();
  std::set<std::set<std::uint64_t>> found;
  std::vector<std::set<std::uint64_t>> cyclic;
  for (std::uint64_t i = 0; i < count; ++i) {
    auto s = spin(m, grpkit::vector_from_index(m.p(), m.dim(), i));
    if (found.insert(s).second) cyclic.push_back(s);
  }
  std::vector<std::set<std::uint64_t>> list = cyclic;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (const auto& c : cyclic) {
      if (std::includes(list[i].begin(), list[i].end(), c.begin(), c.end())) continue;
      std::set<std::uint64_t> s;
      for (auto a : list[i])
        for (auto b : c) {
          auto va = grpkit::vector_from_index(m.p(), m.dim(), a);
          auto vb = grpkit::vector_from_index(m.p(), m.dim(), b);
          for (std::size_t k = 0; k < va.size(); ++k)
            va[k] = static_cast<grpkit::Residue>((va[k] + vb[k]) % m.p());
          s.insert(grpkit::vector_index(va));
        }
      if (found.insert(s).second) list.push_back(s);
    }
  return list;
}

inline std::size_t log_p(std::size_t size, std::uint32_t p) {
  std::size_t d = 0;
  while (size > 1) {
    size /= p;
    ++d;
  }
  return d;
}

inline std::set<std::uint64_t> span_of(const grpkit::SubmoduleBasis& u) {
  std::set<std::uint64_t> out{grpkit::vector_index(grpkit::GFVector(u.parent.p(), u.parent.dim()))};
  for (std::size_t i = 0; i < u.dim(); ++i) {
    std::vector<std::uint64_t> cur(out.begin(), out.end());
    grpkit::GFVector v = u.basis.row(i);
    for (auto idx : cur) {
      grpkit::GFVector w = grpkit::vector_from_index(u.parent.p(), u.parent.dim(), idx);
      for (std::uint32_t c = 1; c < u.parent.p(); ++c) {
        grpkit::GFVector z = w;
        for (std::size_t k = 0; k < z.size(); ++k) z[k] = static_cast<grpkit::Residue>((z[k] + c * v[k]) % u.parent.p());
        out.insert(grpkit::vector_index(z));
      }
    }
  }
  return out;
}

}  // namespace oracle
