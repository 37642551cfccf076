#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "errors.hpp"
#include "fp_module.hpp"
#include "gf_linalg.hpp"
#include "limits.hpp"

namespace grpkit {

namespace detail {

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Fisher-Yates driven by raw engine output, so the order is the same on
/// every standard library.
template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / b) return cap + 1;
    r *= b;
  }
  return r;
}

/// Representatives of the 1-dim subspaces: vector indices whose last nonzero
/// coordinate is 1. Returns nullopt above `cap`.
inline std::optional<std::vector<std::uint64_t>> line_reps(std::uint32_t p, std::size_t d,
                                                           std::uint64_t cap) {
  std::uint64_t total = ipow(p, d, ~0ull / 2);
  std::uint64_t lines = (total - 1) / (p - 1);
  if (lines > cap) return std::nullopt;
  std::vector<std::uint64_t> out;
  out.reserve(lines);
  std::uint64_t block = 1;
  for (std::size_t top = 0; top < d; ++top) {
    // last nonzero coordinate is `top`, with value 1
    for (std::uint64_t low = 0; low < block; ++low) out.push_back(block + low);
    block *= p;
  }
  return out;
}

inline GFMatrix rows_matrix(std::uint32_t p, std::size_t n, const std::vector<GFVector>& rows) {
  return GFMatrix::from_vectors(p, n, rows);
}

}  // namespace detail

/// Smallest submodule containing every seed.
inline SubmoduleBasis spin(const FpModule& m, const std::vector<GFVector>& seeds) {
  EchelonSpace s(m.p(), m.dim());
  std::vector<GFVector> queue;
  for (const auto& v : seeds) {
    if (v.size() != m.dim()) throw InvalidInput("spin: seed has wrong length");
    if (s.add(v)) queue.push_back(v);
  }
  for (std::size_t i = 0; i < queue.size() && s.dim() < m.dim(); ++i) {
    for (const auto& a : m.action()) {
      GFVector w = a.apply_row(queue[i]);
      if (s.add(w)) queue.push_back(std::move(w));
    }
  }
  return SubmoduleBasis::from_space(m, s);
}

/// Submodule of M spanned by the lifts of a submodule of submodule_module(u).
inline SubmoduleBasis lift_submodule(const SubmoduleBasis& u, const SubmoduleBasis& inner) {
  EchelonSpace s(u.parent.p(), u.parent.dim());
  for (std::size_t i = 0; i < inner.dim(); ++i) s.add(submodule_lift(u, inner.basis.row(i)));
  return SubmoduleBasis::from_space(u.parent, s);
}

struct IrreducibilityResult {
  bool irreducible = true;
  std::optional<SubmoduleBasis> witness;  // a simple proper submodule when reducible
  enum class Method { trivial, exhaustive, norton } method = Method::trivial;
};

namespace detail {

inline std::optional<SubmoduleBasis> proper_submodule_exhaustive(const FpModule& m,
                                                                 std::vector<std::uint64_t> lines,
                                                                 std::mt19937_64& rng) {
  shuffle(lines, rng);
  for (auto idx : lines) {
    SubmoduleBasis u = spin(m, {vector_from_index(m.p(), m.dim(), idx)});
    if (u.dim() < m.dim()) return u;
  }
  return std::nullopt;
}

inline GFMatrix random_algebra_element(std::vector<GFMatrix>& pool, std::mt19937_64& rng,
                                       std::uint32_t p) {
  if (pool.size() < 64) {
    const GFMatrix& a = pool[rng() % pool.size()];
    const GFMatrix& b = pool[rng() % pool.size()];
    pool.push_back(a * b);
  }
  GFMatrix theta(p, pool.front().rows(), pool.front().cols());
  for (int t = 0; t < 3; ++t) {
    Residue c = static_cast<Residue>(rng() % p);
    theta = theta + pool[rng() % pool.size()].scaled(c);
  }
  return theta;
}

/// Holt-Rees generalization of Norton's test. Returns a proper submodule,
/// nullopt once irreducibility is certified; throws Inconclusive otherwise.
inline std::optional<SubmoduleBasis> proper_submodule_norton(const FpModule& m,
                                                             std::mt19937_64& rng) {
  const std::uint32_t p = m.p();
  std::vector<GFMatrix> pool = m.action();
  pool.push_back(GFMatrix::identity(p, m.dim()));
  std::vector<GFMatrix> transposed;
  for (const auto& a : m.action()) transposed.push_back(a.transpose());
  FpModule mt = FpModule::unchecked(m.group(), p, m.dim(), transposed);

  for (std::uint64_t attempt = 0; attempt < limits().random_attempts; ++attempt) {
    GFMatrix theta = random_algebra_element(pool, rng, p);
    std::vector<GFVector> kernel = left_nullspace(theta);
    if (kernel.empty()) continue;
    auto reps = line_reps(p, kernel.size(), 1000);
    if (!reps) continue;
    GFMatrix kb = rows_matrix(p, m.dim(), kernel);
    for (auto idx : *reps) {
      GFVector coords = vector_from_index(p, kernel.size(), idx);
      SubmoduleBasis u = spin(m, {kb.transpose().apply_col(coords)});
      if (u.dim() < m.dim()) return u;
    }
    std::vector<GFVector> cokernel = nullspace(theta);
    SubmoduleBasis s = spin(mt, {cokernel.front()});
    if (s.dim() == m.dim()) return std::nullopt;
    return SubmoduleBasis::span(m, nullspace(s.basis));
  }
  throw Inconclusive("irreducibility test did not conclude after " +
                     std::to_string(limits().random_attempts) +
                     " random algebra elements; raise the attempt limit");
}

}  // namespace detail

/// Irreducibility with a simple proper submodule as witness. Modules with at
/// most limits().line_bound one-dimensional subspaces are decided by spinning
/// every line; larger ones by the randomized kernel test.
inline IrreducibilityResult is_irreducible(const FpModule& m, std::uint64_t seed = 0) {
  if (m.dim() == 0) throw InvalidInput("is_irreducible: zero-dimensional module");
  IrreducibilityResult res;
  if (m.dim() == 1) return res;
  std::mt19937_64 rng(seed);
  std::optional<SubmoduleBasis> w;
  if (auto lines = detail::line_reps(m.p(), m.dim(), limits().line_bound)) {
    res.method = IrreducibilityResult::Method::exhaustive;
    w = detail::proper_submodule_exhaustive(m, std::move(*lines), rng);
  } else {
    res.method = IrreducibilityResult::Method::norton;
    w = detail::proper_submodule_norton(m, rng);
  }
  if (!w) return res;
  res.irreducible = false;
  auto inner = is_irreducible(submodule_module(*w), detail::splitmix(seed));
  res.witness = inner.irreducible ? *w : lift_submodule(*w, *inner.witness);
  return res;
}

/// Isomorphism-class fingerprint: dimension, then traces of all generator
/// words of length 1 to 3.
inline std::vector<std::uint32_t> module_tag(const FpModule& m) {
  std::vector<std::uint32_t> tag{static_cast<std::uint32_t>(m.dim())};
  const auto& a = m.action();
  std::vector<GFMatrix> level = a;
  for (int len = 1; len <= 3; ++len) {
    std::vector<GFMatrix> next;
    for (const auto& w : level) {
      tag.push_back(w.trace());
      if (len < 3)
        for (const auto& g : a) next.push_back(w * g);
    }
    level = std::move(next);
  }
  return tag;
}

struct CompositionFactor {
  std::size_t dim = 0;
  std::vector<std::uint32_t> tag;
  FpModule module;
};

/// Composition factors sorted by tag; the seed only changes the chop order.
inline std::vector<CompositionFactor> composition_factors(const FpModule& m,
                                                          std::uint64_t seed = 0) {
  std::vector<CompositionFactor> out;
  if (m.dim() == 0) return out;
  std::vector<FpModule> stack{m};
  std::uint64_t s = seed;
  while (!stack.empty()) {
    FpModule x = std::move(stack.back());
    stack.pop_back();
    if (x.dim() == 0) continue;
    s = detail::splitmix(s);
    auto r = is_irreducible(x, s);
    if (r.irreducible) {
      out.push_back(CompositionFactor{x.dim(), module_tag(x), x});
      continue;
    }
    stack.push_back(factor_module(x, *r.witness).module);
    stack.push_back(submodule_module(*r.witness));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.tag < b.tag; });
  return out;
}

/// Basis of Hom_K(S, M): matrices X with rho_S(k) X = X rho_M(k).
inline std::vector<GFMatrix> hom_space(const FpModule& s, const FpModule& m) {
  if (s.p() != m.p()) throw InvalidInput("hom_space: different characteristics");
  if (s.action().size() != m.action().size())
    throw InvalidInput("hom_space: modules for different generator lists");
  const std::uint32_t p = m.p();
  const std::size_t ds = s.dim(), dm = m.dim();
  const std::size_t nvar = ds * dm;
  if (nvar == 0) return {};
  PrimeField f(p);
  std::size_t ngen = m.action().size();
  GFMatrix eq(p, ngen * nvar, nvar);
  for (std::size_t g = 0; g < ngen; ++g) {
    const GFMatrix& as = s.action()[g];
    const GFMatrix& am = m.action()[g];
    for (std::size_t i = 0; i < ds; ++i)
      for (std::size_t j = 0; j < dm; ++j) {
        std::size_t row = g * nvar + i * dm + j;
        for (std::size_t k = 0; k < ds; ++k)
          eq(row, k * dm + j) = f.add(eq(row, k * dm + j), as(i, k));
        for (std::size_t k = 0; k < dm; ++k)
          eq(row, i * dm + k) = f.sub(eq(row, i * dm + k), am(k, j));
      }
  }
  std::vector<GFMatrix> out;
  for (const auto& v : nullspace(eq)) out.emplace_back(p, ds, dm, v.entries);
  return out;
}

/// Sum of all simple submodules.
inline SubmoduleBasis socle_basis(const FpModule& m, std::uint64_t seed = 0) {
  if (m.dim() == 0) throw InvalidInput("socle_basis: zero-dimensional module");
  EchelonSpace space(m.p(), m.dim());
  std::vector<std::vector<GFMatrix>> done;
  for (const auto& cf : composition_factors(m, seed)) {
    if (std::find(done.begin(), done.end(), cf.module.action()) != done.end()) continue;
    done.push_back(cf.module.action());
    for (const auto& x : hom_space(cf.module, m))
      for (std::size_t i = 0; i < x.rows(); ++i) space.add(x.row(i));
  }
  return SubmoduleBasis::from_space(m, space);
}

/// Jacobson radical, as the annihilator of the socle of the dual module.
inline SubmoduleBasis radical_basis(const FpModule& m, std::uint64_t seed = 0) {
  SubmoduleBasis soc = socle_basis(dual(m), seed);
  if (soc.dim() == 0) return whole_module(m);
  return SubmoduleBasis::span(m, nullspace(soc.basis));
}

inline SubmoduleBasis fixed_points(const FpModule& m) {
  GFMatrix stacked(m.p(), 0, m.dim());
  GFMatrix id = GFMatrix::identity(m.p(), m.dim());
  for (const auto& a : m.action()) stacked = stacked.stacked((a - id).transpose());
  return SubmoduleBasis::span(m, nullspace(stacked));
}

/// True iff only the identity of K acts trivially.
inline bool is_faithful(const FpModule& m) {
  std::uint64_t nvec = m.vector_count();
  if (nvec != 0 && nvec <= limits().point_bound) {
    std::vector<Perm> images;
    for (const auto& a : m.action()) images.push_back(matrix_as_perm(a));
    return PermGroup(static_cast<std::size_t>(nvec), std::move(images)).order() ==
           m.group().order();
  }
  check_bound("faithfulness check", m.group().order(), limits().enum_bound);
  std::vector<GFMatrix> seen{GFMatrix::identity(m.p(), m.dim())};
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (const auto& a : m.action()) {
      GFMatrix y = seen[i] * a;
      if (std::find(seen.begin(), seen.end(), y) == seen.end()) seen.push_back(std::move(y));
    }
  return seen.size() == m.group().order();
}

/// Maximal submodules, as kernels of the nonzero maps from the head
/// M/Rad(M) to each of its simple factors. Sorted by basis.
inline std::vector<SubmoduleBasis> maximal_submodules(const FpModule& m, std::uint64_t seed = 0) {
  if (m.dim() == 0) return {};
  SubmoduleBasis rad = radical_basis(m, seed);
  FactorModule head = factor_module(m, rad);
  std::vector<SubmoduleBasis> out;
  std::vector<std::vector<GFMatrix>> done;
  for (const auto& cf : composition_factors(head.module, detail::splitmix(seed))) {
    if (std::find(done.begin(), done.end(), cf.module.action()) != done.end()) continue;
    done.push_back(cf.module.action());
    std::vector<GFMatrix> homs = hom_space(head.module, cf.module);
    auto reps = detail::line_reps(m.p(), homs.size(), limits().line_bound);
    if (!reps) throw BoundExceeded("maximal submodule enumeration", ~0ull, limits().line_bound);
    for (auto idx : *reps) {
      GFVector c = vector_from_index(m.p(), homs.size(), idx);
      GFMatrix x(m.p(), head.module.dim(), cf.module.dim());
      for (std::size_t t = 0; t < homs.size(); ++t)
        if (c[t]) x = x + homs[t].scaled(c[t]);
      SubmoduleBasis k = head.preimage(SubmoduleBasis::span(head.module, nullspace(x.transpose())));
      if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(std::move(k));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.basis.data() < b.basis.data(); });
  return out;
}

/// Decides whether M is a direct sum of two proper submodules. Small
/// endomorphism rings are enumerated (local ring test); large ones are
/// searched for an element whose Fitting decomposition splits M.
inline bool is_indecomposable(const FpModule& m, std::uint64_t seed = 0) {
  if (m.dim() == 0) throw InvalidInput("is_indecomposable: zero-dimensional module");
  if (m.dim() == 1) return true;
  std::vector<GFMatrix> end = hom_space(m, m);
  const std::uint32_t p = m.p();
  auto splits = [&](const GFMatrix& x) {
    std::size_t r = rank(mat_pow(x, m.dim()));
    return r != 0 && r != m.dim();
  };
  std::uint64_t count = detail::ipow(p, end.size(), limits().endo_enum_bound);
  if (count <= limits().endo_enum_bound) {
    for (std::uint64_t idx = 1; idx < count; ++idx) {
      GFVector c = vector_from_index(p, end.size(), idx);
      GFMatrix x(p, m.dim(), m.dim());
      for (std::size_t t = 0; t < end.size(); ++t)
        if (c[t]) x = x + end[t].scaled(c[t]);
      if (splits(x)) return false;
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t attempt = 0; attempt < limits().random_attempts; ++attempt) {
    GFMatrix x(p, m.dim(), m.dim());
    for (const auto& e : end) x = x + e.scaled(static_cast<Residue>(rng() % p));
    if (splits(x)) return false;
  }
  throw Inconclusive("no splitting endomorphism found after " +
                     std::to_string(limits().random_attempts) +
                     " random attempts; raise the attempt limit");
}

}  // namespace grpkit
