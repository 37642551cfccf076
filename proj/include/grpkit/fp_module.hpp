#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "gf_linalg.hpp"
#include "grp_io.hpp"
#include "homomorphism.hpp"
#include "limits.hpp"
#include "perm_group.hpp"

namespace grpkit {

/// A representation of a permutation group K over GF(p): one invertible
/// dim x dim matrix per generator of K, acting on row vectors (v -> v * A).
class FpModule {
 public:
  FpModule() = default;

  /// Validates invertibility and that the assignment is a homomorphism.
  FpModule(PermGroup group, std::uint32_t p, std::size_t dim, std::vector<GFMatrix> action)
      : FpModule(unchecked(std::move(group), p, dim, std::move(action))) {
    validate();
  }

  /// For modules derived from a valid one (submodules, quotients, duals).
  static FpModule unchecked(PermGroup group, std::uint32_t p, std::size_t dim,
                            std::vector<GFMatrix> action) {
    PrimeField check(p);
    if (action.size() != group.generators().size())
      throw InvalidInput("need one matrix per group generator");
    for (const auto& a : action)
      if (a.rows() != dim || a.cols() != dim || a.p() != p)
        throw InvalidInput("action matrix has wrong shape or modulus");
    FpModule m;
    m.group_ = std::move(group);
    m.p_ = p;
    m.dim_ = dim;
    m.action_ = std::move(action);
    return m;
  }

  const PermGroup& group() const noexcept { return group_; }
  std::uint32_t p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<GFMatrix>& action() const noexcept { return action_; }

  bool is_trivial_action() const {
    for (const auto& a : action_)
      if (!a.is_identity()) return false;
    return true;
  }

  /// Number of vectors, p^dim, or 0 on overflow past 2^63.
  std::uint64_t vector_count() const {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(p_), &n)) return 0;
      if (n > (1ull << 62)) return 0;
    }
    return n;
  }

 private:
  void validate() const;

  PermGroup group_;
  std::uint32_t p_ = 2;
  std::size_t dim_ = 0;
  std::vector<GFMatrix> action_;
};

// Vector <-> integer index: sum of v_i p^i.

inline std::uint64_t vector_index(const GFVector& v) {
  std::uint64_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * v.p + v[i];
  return idx;
}

inline GFVector vector_from_index(std::uint32_t p, std::size_t dim, std::uint64_t idx) {
  GFVector v(p, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = static_cast<Residue>(idx % p);
    idx /= p;
  }
  return v;
}

/// The permutation v -> v * A of all p^dim vectors.
inline Perm matrix_as_perm(const GFMatrix& a) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) n *= a.p();
  std::vector<Point> img(n);
  for (std::uint64_t i = 0; i < n; ++i)
    img[i] = static_cast<Point>(vector_index(a.apply_row(vector_from_index(a.p(), a.rows(), i))));
  return Perm(std::move(img));
}

inline void FpModule::validate() const {
  for (const auto& a : action_)
    if (!inverse(a)) throw InvalidInput("action matrix is not invertible");
  std::uint64_t nvec = vector_count();
  if (nvec != 0 && nvec <= limits().point_bound) {
    std::vector<Perm> images;
    for (const auto& a : action_) images.push_back(matrix_as_perm(a));
    try {
      hom_from_images(group_, static_cast<std::size_t>(nvec), std::move(images));
    } catch (const InconsistentHomomorphism&) {
      throw InvalidInput("matrices do not define a representation of the group");
    }
    return;
  }
  // Closure of (permutation, matrix) pairs: a homomorphism iff every
  // permutation is reached with a single matrix.
  check_bound("representation validation", group_.order(), limits().enum_bound);
  std::unordered_map<Perm, GFMatrix, PermHash> seen;
  std::vector<Perm> queue{Perm(group_.degree())};
  seen.emplace(queue.front(), GFMatrix::identity(p_, dim_));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Perm x = queue[i];
    GFMatrix mx = seen.at(x);
    for (std::size_t s = 0; s < action_.size(); ++s) {
      Perm y = x * group_.generators()[s];
      GFMatrix my = mx * action_[s];
      auto it = seen.find(y);
      if (it == seen.end()) {
        seen.emplace(y, std::move(my));
        queue.push_back(std::move(y));
      } else if (!(it->second == my)) {
        throw InvalidInput("matrices do not define a representation of the group");
      }
    }
  }
}

/// Subspace in reduced row echelon form, grown one vector at a time.
class EchelonSpace {
 public:
  EchelonSpace(std::uint32_t p, std::size_t n) : f_(p), n_(n) {}

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient() const noexcept { return n_; }

  /// v minus its projection onto the pivot columns.
  GFVector reduce(GFVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Residue c = v[piv_[i]];
      if (!c) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] = f_.sub(v[j], f_.mul(c, rows_[i][j]));
    }
    return v;
  }

  bool contains(const GFVector& v) const { return reduce(v).is_zero(); }

  /// Adds v; returns false when it was already in the span.
  bool add(const GFVector& v) {
    GFVector r = reduce(v);
    std::size_t c = 0;
    while (c < n_ && r[c] == 0) ++c;
    if (c == n_) return false;
    Residue s = f_.inv(r[c]);
    for (auto& x : r.entries) x = f_.mul(x, s);
    for (auto& row : rows_) {
      Residue m = row[c];
      if (!m) continue;
      for (std::size_t j = 0; j < n_; ++j) row[j] = f_.sub(row[j], f_.mul(m, r[j]));
    }
    rows_.push_back(std::move(r));
    piv_.push_back(c);
    return true;
  }

  /// Rows sorted by pivot column.
  GFMatrix matrix() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return piv_[a] < piv_[b]; });
    GFMatrix m(f_.p(), rows_.size(), n_);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = rows_[order[i]][j];
    return m;
  }

 private:
  PrimeField f_;
  std::size_t n_;
  std::vector<GFVector> rows_;
  std::vector<std::size_t> piv_;
};

/// A submodule given by an RREF basis (rows). Invariance is checked on construction.
struct SubmoduleBasis {
  FpModule parent;
  GFMatrix basis;  // rows in RREF
  std::vector<std::size_t> pivots;

  std::size_t dim() const noexcept { return basis.rows(); }

  static SubmoduleBasis from_space(const FpModule& m, const EchelonSpace& s) {
    SubmoduleBasis u{m, s.matrix(), {}};
    u.fill_pivots();
    return u;
  }

  /// Span of `vectors`; throws InvalidInput if it is not invariant.
  static SubmoduleBasis span(const FpModule& m, const std::vector<GFVector>& vectors) {
    EchelonSpace s(m.p(), m.dim());
    for (const auto& v : vectors) s.add(v);
    SubmoduleBasis u = from_space(m, s);
    if (!u.is_invariant()) throw InvalidInput("subspace is not invariant under the action");
    return u;
  }

  bool is_invariant() const {
    EchelonSpace s(parent.p(), parent.dim());
    for (std::size_t i = 0; i < basis.rows(); ++i) s.add(basis.row(i));
    for (const auto& a : parent.action())
      for (std::size_t i = 0; i < basis.rows(); ++i)
        if (!s.contains(a.apply_row(basis.row(i)))) return false;
    return true;
  }

  bool contains(const GFVector& v) const {
    PrimeField f(parent.p());
    GFVector r = v;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      Residue c = r[pivots[i]];
      if (!c) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] = f.sub(r[j], f.mul(c, basis(i, j)));
    }
    return r.is_zero();
  }

  bool contains(const SubmoduleBasis& o) const {
    for (std::size_t i = 0; i < o.basis.rows(); ++i)
      if (!contains(o.basis.row(i))) return false;
    return true;
  }

  friend bool operator==(const SubmoduleBasis& a, const SubmoduleBasis& b) {
    return a.basis == b.basis;
  }

  void fill_pivots() {
    pivots.clear();
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      std::size_t c = 0;
      while (c < basis.cols() && basis(i, c) == 0) ++c;
      pivots.push_back(c);
    }
  }
};

inline SubmoduleBasis zero_submodule(const FpModule& m) {
  return SubmoduleBasis{m, GFMatrix(m.p(), 0, m.dim()), {}};
}

inline SubmoduleBasis whole_module(const FpModule& m) {
  return SubmoduleBasis{m, GFMatrix::identity(m.p(), m.dim()), [&] {
                          std::vector<std::size_t> v(m.dim());
                          for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
                          return v;
                        }()};
}

inline SubmoduleBasis sum(const SubmoduleBasis& a, const SubmoduleBasis& b) {
  EchelonSpace s(a.parent.p(), a.parent.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) s.add(a.basis.row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) s.add(b.basis.row(i));
  return SubmoduleBasis::from_space(a.parent, s);
}

/// Permutation module: generator k acts by the matrix with (i, i^k) entries 1.
inline FpModule permutation_module(const PermGroup& k, std::uint32_t p) {
  std::vector<GFMatrix> action;
  std::size_t n = k.degree();
  for (const auto& g : k.generators()) {
    GFMatrix a(p, n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, g[static_cast<Point>(i)]) = 1;
    action.push_back(std::move(a));
  }
  return FpModule::unchecked(k, p, n, std::move(action));
}

/// The action restricted to a submodule, in the coordinates of its RREF basis.
inline FpModule submodule_module(const SubmoduleBasis& u) {
  const FpModule& m = u.parent;
  std::vector<GFMatrix> action;
  for (const auto& a : m.action()) {
    GFMatrix c(m.p(), u.dim(), u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
      GFVector y = a.apply_row(u.basis.row(i));
      for (std::size_t j = 0; j < u.dim(); ++j) c(i, j) = y[u.pivots[j]];
    }
    action.push_back(std::move(c));
  }
  return FpModule::unchecked(m.group(), m.p(), u.dim(), std::move(action));
}

/// Submodule coordinates -> vector of the parent.
inline GFVector submodule_lift(const SubmoduleBasis& u, const GFVector& coords) {
  return u.basis.transpose().apply_col(coords);
}

/// M/U in the coordinates of the unit vectors outside U's pivot columns.
struct FactorModule {
  FpModule module;
  SubmoduleBasis kernel;
  std::vector<std::size_t> complement;  // columns of M spanning the complement

  GFVector project(const GFVector& v) const {
    PrimeField f(kernel.parent.p());
    GFVector r = v;
    for (std::size_t i = 0; i < kernel.dim(); ++i) {
      Residue c = r[kernel.pivots[i]];
      if (!c) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] = f.sub(r[j], f.mul(c, kernel.basis(i, j)));
    }
    GFVector out(kernel.parent.p(), complement.size());
    for (std::size_t j = 0; j < complement.size(); ++j) out[j] = r[complement[j]];
    return out;
  }

  GFVector lift(const GFVector& coords) const {
    GFVector v(kernel.parent.p(), kernel.parent.dim());
    for (std::size_t j = 0; j < complement.size(); ++j) v[complement[j]] = coords[j];
    return v;
  }

  /// Full preimage in M of a submodule of the factor.
  SubmoduleBasis preimage(const SubmoduleBasis& sub) const {
    EchelonSpace s(kernel.parent.p(), kernel.parent.dim());
    for (std::size_t i = 0; i < kernel.dim(); ++i) s.add(kernel.basis.row(i));
    for (std::size_t i = 0; i < sub.dim(); ++i) s.add(lift(sub.basis.row(i)));
    return SubmoduleBasis::from_space(kernel.parent, s);
  }
};

/// Throws InvalidInput when U is not invariant.
inline FactorModule factor_module(const FpModule& m, const SubmoduleBasis& u) {
  if (!u.is_invariant()) throw InvalidInput("factor_module: subspace is not a submodule");
  std::vector<bool> piv(m.dim(), false);
  for (auto c : u.pivots) piv[c] = true;
  std::vector<std::size_t> comp;
  for (std::size_t j = 0; j < m.dim(); ++j)
    if (!piv[j]) comp.push_back(j);
  FactorModule fm{FpModule(), u, comp};
  std::vector<GFMatrix> action;
  for (const auto& a : m.action()) {
    GFMatrix c(m.p(), comp.size(), comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      GFVector e(m.p(), m.dim());
      e[comp[i]] = 1;
      GFVector y = fm.project(a.apply_row(e));
      for (std::size_t j = 0; j < comp.size(); ++j) c(i, j) = y[j];
    }
    action.push_back(std::move(c));
  }
  fm.module = FpModule::unchecked(m.group(), m.p(), comp.size(), std::move(action));
  return fm;
}

/// Dual module: generator k acts by the transpose of rho(k)^-1.
inline FpModule dual(const FpModule& m) {
  std::vector<GFMatrix> action;
  for (const auto& a : m.action()) action.push_back(inverse(a).value().transpose());
  return FpModule::unchecked(m.group(), m.p(), m.dim(), std::move(action));
}

inline FpModule direct_sum(const FpModule& a, const FpModule& b) {
  if (!a.group().identical(b.group()) && !a.group().same_elements(b.group()))
    throw InvalidInput("direct_sum: modules for different groups");
  if (a.p() != b.p()) throw InvalidInput("direct_sum: different characteristics");
  std::size_t n = a.dim() + b.dim();
  std::vector<GFMatrix> action;
  for (std::size_t s = 0; s < a.action().size(); ++s) {
    GFMatrix c(a.p(), n, n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a.action()[s](i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) c(a.dim() + i, a.dim() + j) = b.action()[s](i, j);
    action.push_back(std::move(c));
  }
  return FpModule::unchecked(a.group(), a.p(), n, std::move(action));
}

// Module text format: the `.grp` description of K, then
//   module p dim ngens
// followed by ngens matrices in the `matrix p rows cols` format.

inline std::string print_module(const FpModule& m) {
  std::string out = print_grp(m.group());
  out += "module " + std::to_string(m.p()) + " " + std::to_string(m.dim()) + " " +
         std::to_string(m.action().size()) + "\n";
  for (const auto& a : m.action()) out += print_matrix(a);
  return out;
}

inline FpModule parse_module(std::istream& in) {
  std::string header;
  PermGroup k = parse_grp(in, &header);
  std::istringstream hs(header);
  std::string word;
  long long p = 0, dim = 0, ngens = 0;
  if (!(hs >> word) || word != "module" || !(hs >> p >> dim >> ngens) || p < 2 || dim < 0 ||
      ngens < 0)
    throw InvalidInput("expected `module p dim ngens` header");
  std::vector<GFMatrix> action;
  for (long long i = 0; i < ngens; ++i) {
    GFMatrix a = parse_matrix(in);
    if (a.p() != static_cast<std::uint32_t>(p)) throw InvalidInput("matrix modulus differs from module");
    action.push_back(std::move(a));
  }
  return FpModule(k, static_cast<std::uint32_t>(p), static_cast<std::size_t>(dim), std::move(action));
}

inline FpModule parse_module(const std::string& text) {
  std::istringstream in(text);
  return parse_module(in);
}

}  // namespace grpkit
