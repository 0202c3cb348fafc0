#pragma once

// Embedding of the integers 1..p^2 into the plane. A non-multiple n of p sits
// at (n mod p, -floor(n/p)); a multiple kp sits on the vertical x = p one row
// higher, at (p, -k + 1).

#include "focal_sieve/integer.hpp"
#include "focal_sieve/rational.hpp"

#include <stdexcept>
#include <string>

namespace focal_sieve {

/// Thrown when a sieve is requested for a p that is not prime.
class NotPrimeError : public std::invalid_argument {
 public:
  NotPrimeError(Int value, Int factor)
      : std::invalid_argument(describe(value, factor)), value_(value), factor_(factor) {}

  Int value() const { return value_; }
  /// Smallest factor found, or 0 when value < 2.
  Int factor() const { return factor_; }

 private:
  static std::string describe(Int value, Int factor) {
    if (value < 2) return std::to_string(value) + " is not prime (must be >= 2)";
    return std::to_string(value) + " is not prime (factor " + std::to_string(factor) + ")";
  }
  Int value_;
  Int factor_;
};

/// A validated prime p with p^2 cached.
class SieveContext {
 public:
  explicit SieveContext(Int p) : p_(p), p_squared_(p * p) {
    if (p < 2) throw NotPrimeError(p, 0);
    if (p > kMaxPrime) throw std::out_of_range("p exceeds supported maximum " + std::to_string(kMaxPrime));
    if (auto f = smallest_factor(p)) throw NotPrimeError(p, *f);
  }

  Int p() const { return p_; }
  Int p_squared() const { return p_squared_; }

  /// floor(p / a) for a >= 1.
  Int quotient(Int a) const { return p_ / a; }
  /// rem(p / a) for a >= 1.
  Int remainder(Int a) const { return p_ % a; }

  friend bool operator==(const SieveContext&, const SieveContext&) = default;

 private:
  Int p_;
  Int p_squared_;
};

inline SieveContext new_context(Int p) { return SieveContext(p); }

struct PlanePoint {
  Rational x;
  Rational y;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

inline PlanePoint map_to_plane(const SieveContext& ctx, Int n) {
  const Int p = ctx.p();
  if (n < 1 || n > ctx.p_squared())
    throw std::out_of_range("n = " + std::to_string(n) + " outside [1, p^2] for p = " + std::to_string(p));
  const Int row = n / p;
  const Int col = n % p;
  if (col != 0) return {Rational(col), Rational(-row)};
  return {Rational(p), Rational(-row + 1)};
}

/// Inverse of map_to_plane. Throws std::invalid_argument for points outside the image.
inline Int unmap(const SieveContext& ctx, const PlanePoint& pt) {
  const Int p = ctx.p();
  auto fail = [&]() -> Int {
    throw std::invalid_argument("(" + pt.x.str() + ", " + pt.y.str() + ") is not the image of any n in [1, p^2]");
  };
  if (!pt.x.is_integer() || !pt.y.is_integer()) return fail();
  const Rational lo(-(p - 1));
  if (pt.x < Rational(1) || pt.x > Rational(p) || pt.y > Rational(0) || pt.y < lo) return fail();
  const Int x = pt.x.numerator().convert_to<Int>();
  const Int y = pt.y.numerator().convert_to<Int>();
  if (x == p) return (1 - y) * p;
  return -y * p + x;
}

}  // namespace focal_sieve
