#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace grpkit {

using Residue = std::uint8_t;

/// Arithmetic in the prime field GF(p), p <= 251.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p > 251) throw InvalidInput("prime modulus must lie in [2, 251]");
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw InvalidInput(std::to_string(p) + " is not prime");
  }
  std::uint32_t p() const noexcept { return p_; }
  Residue add(Residue a, Residue b) const noexcept { return static_cast<Residue>((a + b) % p_); }
  Residue sub(Residue a, Residue b) const noexcept { return static_cast<Residue>((a + p_ - b) % p_); }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint32_t>(a) * b % p_);
  }
  Residue neg(Residue a) const noexcept { return static_cast<Residue>((p_ - a) % p_); }
  Residue inv(Residue a) const {
    if (a == 0) throw InvalidInput("inverse of zero");
    // extended Euclid
    long long t = 0, nt = 1, r = p_, nr = a;
    while (nr) {
      long long q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    return reduce(t);
  }
  Residue reduce(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }

 private:
  std::uint32_t p_;
};

struct GFVector {
  std::uint32_t p = 2;
  std::vector<Residue> entries;

  GFVector() = default;
  GFVector(std::uint32_t p_, std::size_t n) : p(p_), entries(n, 0) {}
  GFVector(std::uint32_t p_, std::vector<Residue> e) : p(p_), entries(std::move(e)) {
    for (auto x : entries)
      if (x >= p) throw InvalidInput("vector entry not reduced mod p");
  }
  std::size_t size() const noexcept { return entries.size(); }
  Residue operator[](std::size_t i) const noexcept { return entries[i]; }
  Residue& operator[](std::size_t i) noexcept { return entries[i]; }
  bool is_zero() const noexcept {
    for (auto x : entries)
      if (x) return false;
    return true;
  }
  friend bool operator==(const GFVector&, const GFVector&) = default;
};

/// Dense row-major matrix over GF(p).
class GFMatrix {
 public:
  GFMatrix() = default;
  GFMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  GFMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
      : p_(p), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw InvalidInput("matrix entry count mismatch");
    for (auto x : a_)
      if (x >= p) throw InvalidInput("matrix entry not reduced mod p");
  }

  /// From nested integer rows, reducing mod p.
  static GFMatrix from_rows(std::uint32_t p, const std::vector<std::vector<long long>>& rows) {
    PrimeField f(p);
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    GFMatrix m(p, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw InvalidInput("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = f.reduce(rows[i][j]);
    }
    return m;
  }

  static GFMatrix identity(std::uint32_t p, std::size_t n) {
    GFMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Rows given by vectors (all of length `cols`).
  static GFMatrix from_vectors(std::uint32_t p, std::size_t cols, const std::vector<GFVector>& vs) {
    GFMatrix m(p, vs.size(), cols);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].size() != cols) throw InvalidInput("vector length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = vs[i][j];
    }
    return m;
  }

  std::uint32_t p() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Residue operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }
  Residue& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }
  const std::vector<Residue>& data() const noexcept { return a_; }

  GFVector row(std::size_t i) const {
    return GFVector(p_, std::vector<Residue>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                             a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
  }
  std::vector<GFVector> row_vectors() const {
    std::vector<GFVector> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  bool is_zero() const noexcept {
    for (auto x : a_)
      if (x) return false;
    return true;
  }
  bool is_identity() const noexcept {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  GFMatrix transpose() const {
    GFMatrix t(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  GFMatrix operator*(const GFMatrix& b) const {
    if (cols_ != b.rows_ || p_ != b.p_) throw InvalidInput("matrix shape mismatch in product");
    GFMatrix c(p_, rows_, b.cols_);
    std::vector<std::uint32_t> acc(b.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0u);
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint32_t x = (*this)(i, k);
        if (!x) continue;
        const Residue* br = &b.a_[k * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += x * br[j];
        if (k % 64 == 63)
          for (auto& v : acc) v %= p_;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<Residue>(acc[j] % p_);
    }
    return c;
  }

  GFMatrix operator+(const GFMatrix& b) const {
    check_same(b);
    GFMatrix c = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] = static_cast<Residue>((a_[i] + b.a_[i]) % p_);
    return c;
  }
  GFMatrix operator-(const GFMatrix& b) const {
    check_same(b);
    GFMatrix c = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
      c.a_[i] = static_cast<Residue>((a_[i] + p_ - b.a_[i]) % p_);
    return c;
  }
  GFMatrix scaled(Residue s) const {
    GFMatrix c = *this;
    for (auto& x : c.a_) x = static_cast<Residue>(static_cast<std::uint32_t>(x) * s % p_);
    return c;
  }

  /// Row vector times matrix.
  GFVector apply_row(const GFVector& v) const {
    if (v.size() != rows_) throw InvalidInput("vector length mismatch in v*A");
    std::vector<std::uint32_t> acc(cols_, 0);
    for (std::size_t k = 0; k < rows_; ++k) {
      std::uint32_t x = v[k];
      if (!x) continue;
      for (std::size_t j = 0; j < cols_; ++j) acc[j] += x * (*this)(k, j);
    }
    GFVector out(p_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = static_cast<Residue>(acc[j] % p_);
    return out;
  }

  /// Matrix times column vector.
  GFVector apply_col(const GFVector& v) const {
    if (v.size() != cols_) throw InvalidInput("vector length mismatch in A*v");
    GFVector out(p_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint32_t acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<std::uint32_t>((*this)(i, j)) * v[j];
      out[i] = static_cast<Residue>(acc % p_);
    }
    return out;
  }

  std::uint32_t trace() const {
    std::uint32_t t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t % p_;
  }

  /// Stacks `b` below this matrix.
  GFMatrix stacked(const GFMatrix& b) const {
    if (b.cols_ != cols_) throw InvalidInput("column mismatch when stacking");
    GFMatrix c(p_, rows_ + b.rows_, cols_);
    std::copy(a_.begin(), a_.end(), c.a_.begin());
    std::copy(b.a_.begin(), b.a_.end(), c.a_.begin() + static_cast<std::ptrdiff_t>(a_.size()));
    return c;
  }

  friend bool operator==(const GFMatrix&, const GFMatrix&) = default;

 private:
  void check_same(const GFMatrix& b) const {
    if (b.rows_ != rows_ || b.cols_ != cols_ || b.p_ != p_) throw InvalidInput("matrix shape mismatch");
  }

  std::uint32_t p_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Residue> a_;
};

struct RrefResult {
  GFMatrix matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form by Gauss-Jordan elimination; the first nonzero
/// entry in a column is the pivot. Zero rows end up at the bottom.
inline RrefResult rref(GFMatrix a) {
  PrimeField f(a.p());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    Residue s = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), s);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Residue m = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(m, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(a), std::move(pivots), r};
}

inline std::size_t rank(const GFMatrix& a) { return rref(a).rank; }

/// Basis of {v : A v = 0} (column convention), one vector per free column.
inline std::vector<GFVector> nullspace(const GFMatrix& a) {
  PrimeField f(a.p());
  RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<GFVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    GFVector v(a.p(), a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.matrix(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of {v : v A = 0} (row convention).
inline std::vector<GFVector> left_nullspace(const GFMatrix& a) { return nullspace(a.transpose()); }

/// Some x with A x = b, or nullopt when inconsistent.
inline std::optional<GFVector> solve_linear(const GFMatrix& a, const GFVector& b) {
  if (b.size() != a.rows()) throw InvalidInput("shape mismatch in solve_linear");
  GFMatrix aug(a.p(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  GFVector x(a.p(), a.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.matrix(i, a.cols());
  return x;
}

inline std::optional<GFMatrix> inverse(const GFMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  std::size_t n = a.rows();
  GFMatrix aug(a.p(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  GFMatrix inv(a.p(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.matrix(i, n + j);
  return inv;
}

inline GFMatrix mat_pow(const GFMatrix& a, std::uint64_t e) {
  GFMatrix acc = GFMatrix::identity(a.p(), a.rows());
  GFMatrix base = a;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

// Matrix text format: `matrix p rows cols`, then one row per line.

inline std::string print_matrix(const GFMatrix& m) {
  std::string out = "matrix " + std::to_string(m.p()) + " " + std::to_string(m.rows()) + " " +
                    std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += std::to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

inline GFMatrix parse_matrix(std::istream& in) {
  std::string word;
  long long p = 0, r = 0, c = 0;
  if (!(in >> word) || word != "matrix") throw InvalidInput("expected `matrix` header");
  if (!(in >> p >> r >> c) || p < 2 || r < 0 || c < 0) throw InvalidInput("bad matrix header");
  GFMatrix m(static_cast<std::uint32_t>(p), static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  for (long long i = 0; i < r; ++i)
    for (long long j = 0; j < c; ++j) {
      long long v = 0;
      if (!(in >> v)) throw InvalidInput("matrix body truncated");
      if (v < 0 || v >= p) throw InvalidInput("matrix entry not reduced mod p");
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = static_cast<Residue>(v);
    }
  return m;
}

inline GFMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

}  // namespace grpkit
