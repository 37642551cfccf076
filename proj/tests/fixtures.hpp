#pragma once

#include <grpkit/affine.hpp>
#include <grpkit/fp_module.hpp>

namespace fixtures {

using namespace grpkit;

/// One-dimensional module of C2 = <(1 2)> over GF(p) where the involution acts by -1.
inline FpModule sign_line(std::uint32_t p) {
  PermGroup c2(2, {parse_cycles("(1 2)", 2)});
  return FpModule(c2, p, 1, {GFMatrix::from_rows(p, {{static_cast<long long>(p) - 1}})});
}

/// GF(2)^2 with C3 acting by a matrix of order 3.
inline FpModule v4_for_c3() {
  PermGroup c3(3, {parse_cycles("(1 2 3)", 3)});
  return FpModule(c3, 2, 2, {GFMatrix::from_rows(2, {{0, 1}, {1, 1}})});
}

inline AffineGroup s3_split() { return affine_semidirect_product(sign_line(3)); }
inline AffineGroup a4_split() { return affine_semidirect_product(v4_for_c3()); }
inline AffineGroup d10_split() { return affine_semidirect_product(sign_line(5)); }

}  // namespace fixtures
