#pragma once

#include <stdexcept>
#include <string>

namespace grpkit {

/// Base of every exception thrown by grpkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: degree mismatch, non-bijective images, parse errors.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration bound would be exceeded. Never silently truncated.
class BoundExceeded : public Error {
 public:
  BoundExceeded(const std::string& what_bound, unsigned long long needed,
                unsigned long long limit)
      : Error(what_bound + " bound exceeded: need " + std::to_string(needed) +
              ", limit " + std::to_string(limit)),
        needed_(needed),
        limit_(limit) {}
  unsigned long long needed() const noexcept { return needed_; }
  unsigned long long limit() const noexcept { return limit_; }

 private:
  unsigned long long needed_;
  unsigned long long limit_;
};

/// Operation preconditions not met (subgroup not normal, no applicable path, ...).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// Randomized certification ran out of attempts.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

}  // namespace grpkit
