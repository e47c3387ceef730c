#pragma once

// Residue arithmetic on canonical representatives in [0, m). Moduli are
// bounded by 2^63 - 1; products go through 128-bit intermediates.

#include <cstdint>

namespace covlift::modular {

using Residue = std::int64_t;

constexpr Residue reduce(__int128 value, Residue modulus) {
  __int128 r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<Residue>(r);
}

constexpr Residue add(Residue a, Residue b, Residue modulus) {
  return reduce(static_cast<__int128>(a) + b, modulus);
}

constexpr Residue sub(Residue a, Residue b, Residue modulus) {
  return reduce(static_cast<__int128>(a) - b, modulus);
}

constexpr Residue mul(Residue a, Residue b, Residue modulus) {
  return reduce(static_cast<__int128>(a) * b, modulus);
}

constexpr Residue neg(Residue a, Residue modulus) { return sub(0, a, modulus); }

/// Inverse of a modulo m via extended Euclid; returns 0 when gcd(a, m) != 1.
constexpr Residue inverse_or_zero(Residue a, Residue modulus) {
  __int128 old_r = reduce(a, modulus), r = modulus;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return 0;
  return reduce(old_s, modulus);
}

/// Checked multiplication; false on overflow of int64.
inline bool checked_mul(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

/// p^e, or -1 if it does not fit in int64.
inline std::int64_t checked_pow(std::int64_t base, int exponent) {
  std::int64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (!checked_mul(result, base, result)) return -1;
  }
  return result;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace covlift::modular
