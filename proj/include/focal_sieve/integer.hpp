#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace focal_sieve {

/// Integer-valued quantities of the sieve (p, n, a, k, quotients, remainders).
using Int = std::int64_t;

/// Largest accepted prime; keeps p^2 and the products formed on it in range.
inline constexpr Int kMaxPrime = (Int{1} << 31) - 1;

/// Floor of n / d for d > 0, correct for negative n.
constexpr Int floor_div(Int n, Int d) {
  Int q = n / d;
  if ((n % d != 0) && (n < 0)) --q;
  return q;
}

/// Non-negative remainder of n / d for d > 0.
constexpr Int floor_mod(Int n, Int d) { return n - floor_div(n, d) * d; }

/// floor(sqrt(n)) for n >= 0, integer Newton iteration checked by squaring.
constexpr Int isqrt(Int n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  if (n < 2) return n;
  Int x = n;
  Int y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  // x*x <= n < (x+1)*(x+1)
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

/// Smallest factor of n in [2, sqrt(n)] by trial division; nullopt if n is prime.
constexpr std::optional<Int> smallest_factor(Int n) {
  if (n < 4) return std::nullopt;
  if (n % 2 == 0) return 2;
  const Int r = isqrt(n);
  for (Int d = 3; d <= r; d += 2)
    if (n % d == 0) return d;
  return std::nullopt;
}

constexpr bool is_prime(Int n) { return n >= 2 && !smallest_factor(n); }

}  // namespace focal_sieve
