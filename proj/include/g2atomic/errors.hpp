#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace g2 {

/// Input outside an operation's domain (e.g. a non-dominant weight where a
/// dominant one is required).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Combining values carrying incompatible basis labels.
class BasisMismatch : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A mathematical guarantee failed at run time (positivity, exact division,
/// recursion depth). Always a bug, never a user error.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("int64 overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("int64 overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("int64 overflow in multiplication");
  return r;
}

}  // namespace detail
}  // namespace g2
