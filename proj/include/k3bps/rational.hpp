#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace k3bps {

/// Exact rational over arbitrary-precision integers (GMP). Always canonical.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool fits_int64(const Integer& z) {
  static const Integer lo("-9223372036854775808");
  static const Integer hi("9223372036854775807");
  return z >= lo && z <= hi;
}

/// (-1)^n for any integer n.
constexpr int sign_power(long long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace k3bps
