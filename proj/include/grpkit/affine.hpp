#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "errors.hpp"
#include "fp_module.hpp"
#include "gf_linalg.hpp"
#include "homomorphism.hpp"
#include "limits.hpp"
#include "perm_group.hpp"

namespace grpkit {

/// Metadata kept on a group A:K of affine maps v -> v*rho(k) + w of an
/// ambient space GF(p)^n, where A is the group of translations by a
/// K-submodule of the ambient space and K acts linearly.
struct SplitInfo {
  FpModule module;                  // A as a K-module, in its own coordinates
  std::uint32_t p = 2;
  std::size_t ambient_dim = 0;
  GFMatrix embed;                   // module coordinates -> ambient vector (rows)
  std::vector<Perm> complement_gens;  // linear maps, one per generator of module.group()
  std::vector<Perm> translation_gens;  // translations by the rows of `embed`
  std::size_t points = 1;              // p^ambient_dim

  std::size_t degree() const noexcept { return points; }

  /// Translation by the vector with the given module coordinates.
  Perm translation(const GFVector& coords) const {
    return translation_by(p, ambient_dim, embed.apply_row(coords));
  }

  /// Module coordinates of a translation in A.
  GFVector coordinates(const Perm& t) const {
    GFVector w = vector_from_index(p, ambient_dim, t[0]);
    auto c = solve_linear(embed.transpose(), w);
    if (!c) throw InvalidInput("element is not a translation of the module");
    return *c;
  }

  PermGroup translations() const { return PermGroup(degree(), translation_gens); }
  PermGroup complement() const { return PermGroup(degree(), complement_gens); }

  static Perm translation_by(std::uint32_t p, std::size_t n, const GFVector& w) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    std::vector<Point> img(total);
    std::vector<Residue> digits(n, 0);
    for (std::uint64_t x = 0; x < total; ++x) {
      std::uint64_t idx = 0;
      for (std::size_t i = n; i-- > 0;) idx = idx * p + (digits[i] + w[i]) % p;
      img[x] = static_cast<Point>(idx);
      for (std::size_t i = 0; i < n; ++i) {
        if (++digits[i] < p) break;
        digits[i] = 0;
      }
    }
    return Perm(std::move(img));
  }
};

struct AffineGroup {
  PermGroup group;
  SubgroupHandle vectors;
  SubgroupHandle complement;
};

namespace detail {

inline AffineGroup assemble_affine(std::shared_ptr<SplitInfo> info, std::uint64_t expected_order) {
  std::size_t n = info->degree();
  std::vector<Perm> gens = info->translation_gens;
  gens.insert(gens.end(), info->complement_gens.begin(), info->complement_gens.end());
  PermGroup g(n, std::move(gens));
  if (g.order() != expected_order)
    throw NotApplicable("the module is not faithful: affine group has order " +
                        std::to_string(g.order()) + ", expected " +
                        std::to_string(expected_order));
  g = g.with_split_info(info);
  return AffineGroup{g, SubgroupHandle{g, info->translations()},
                     SubgroupHandle{g, info->complement()}};
}

}  // namespace detail

/// W:K acting on the p^d vectors of M (points numbered by vector_index).
/// Throws NotApplicable when M is not faithful, BoundExceeded above the point bound.
inline AffineGroup affine_semidirect_product(const FpModule& m) {
  std::uint64_t nvec = m.vector_count();
  if (nvec == 0 || nvec > limits().point_bound)
    throw BoundExceeded("affine point count", nvec == 0 ? ~0ull : nvec, limits().point_bound);
  auto info = std::make_shared<SplitInfo>();
  info->module = m;
  info->p = m.p();
  info->ambient_dim = m.dim();
  info->points = static_cast<std::size_t>(nvec);
  info->embed = GFMatrix::identity(m.p(), m.dim());
  for (const auto& a : m.action()) info->complement_gens.push_back(matrix_as_perm(a));
  for (std::size_t i = 0; i < m.dim(); ++i)
    info->translation_gens.push_back(SplitInfo::translation_by(m.p(), m.dim(), info->embed.row(i)));
  return detail::assemble_affine(info, nvec * m.group().order());
}

/// The subgroup U:K of an affine group G = W:K, for a submodule U of W,
/// carrying its own split metadata.
inline AffineGroup affine_subextension(const PermGroup& g, const SubmoduleBasis& u) {
  const SplitInfo* parent = g.split_info();
  if (parent == nullptr) throw NotApplicable("affine_subextension: group has no split metadata");
  if (!(u.parent.dim() == parent->module.dim() && u.parent.p() == parent->p))
    throw InvalidInput("affine_subextension: submodule of a different module");
  auto info = std::make_shared<SplitInfo>(*parent);
  info->module = submodule_module(u);
  info->embed = u.basis * parent->embed;
  info->translation_gens.clear();
  for (std::size_t i = 0; i < info->embed.rows(); ++i)
    info->translation_gens.push_back(
        SplitInfo::translation_by(info->p, info->ambient_dim, info->embed.row(i)));
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < u.dim(); ++i) size *= info->p;
  AffineGroup h = detail::assemble_affine(info, size * info->module.group().order());
  for (const auto& x : h.group.generators())
    if (!g.contains(x)) throw Error("affine_subextension: generator outside the parent");
  return AffineGroup{h.group, SubgroupHandle{g, h.vectors.group}, SubgroupHandle{g, h.complement.group}};
}

}  // namespace grpkit
