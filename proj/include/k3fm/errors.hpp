#pragma once

#include <cstdint>
#include <stdexcept>

namespace k3fm {

/// Violated precondition of a lattice or stability operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed divisor, vector or object literal.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Overflow-checked int64 arithmetic. All lattice quantities go through these.
namespace checked {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_add_overflow(x, y, &out)) throw DomainError("integer overflow");
  return out;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_sub_overflow(x, y, &out)) throw DomainError("integer overflow");
  return out;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw DomainError("integer overflow");
  return out;
}

inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

}  // namespace checked
}  // namespace k3fm
