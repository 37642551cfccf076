#pragma once

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace grpkit {

/// Enumeration bounds. Exceeding one raises BoundExceeded.
struct Limits {
  std::uint64_t enum_bound = 1'000'000;    // elements enumerated from one group
  std::uint64_t index_bound = 10'000;      // degree of a coset action
  std::uint64_t brute_bound = 1'000;       // |G| for the subgroup-lattice path
  std::uint64_t point_bound = 100'000;     // p^d for vector permutation actions
  std::uint64_t tuple_bound = 100'000;     // twisted generator tuples for complements
  std::uint64_t line_bound = 100'000;      // exhaustive 1-dim seed spinning
  std::uint64_t endo_enum_bound = 1'000'000;
  std::uint64_t random_attempts = 400;
};

inline Limits& limits() {
  static Limits instance;
  return instance;
}

/// Overrides the process-wide limits for the lifetime of the guard.
class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& l) : saved_(limits()) { limits() = l; }
  ~ScopedLimits() { limits() = saved_; }
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

inline void check_bound(const char* name, std::uint64_t needed,
                        std::uint64_t limit) {
  if (needed > limit) throw BoundExceeded(name, needed, limit);
}

}  // namespace grpkit
