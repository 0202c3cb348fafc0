#pragma once

// The quotient points (a, floor(p/a)) for 1 < a < p and the extremes among
// them, the points after which the quotient strictly drops.
//
// Every quotient point lies in the band p/a - 1 < q <= p/a. Extremes with
// q >= 2 are closed under swapping (a, q) -> (q, a), i.e. symmetric about the
// bisector y = x, and those on or above the bisector have a <= floor(sqrt(p)).
// No closed form for floor(p/a) with a <= floor(sqrt(p)) is attempted.

#include "focal_sieve/integer.hpp"
#include "focal_sieve/plane.hpp"
#include "focal_sieve/rational.hpp"

#include <utility>
#include <vector>

namespace focal_sieve {

struct QuotientPoint {
  Int a = 0;
  Int q = 0;

  friend bool operator==(const QuotientPoint&, const QuotientPoint&) = default;
};

struct Extreme {
  Int a = 0;
  Int q = 0;

  friend bool operator==(const Extreme&, const Extreme&) = default;
};

inline std::vector<QuotientPoint> quotient_points(const SieveContext& ctx) {
  std::vector<QuotientPoint> points;
  for (Int a = 2; a < ctx.p(); ++a) points.push_back({a, ctx.quotient(a)});
  return points;
}

/// True when (a, q) is a quotient point of p and floor(p/(a+1)) < q.
inline bool is_extreme(const SieveContext& ctx, Int a, Int q) {
  if (a < 2 || a > ctx.p() - 1) return false;
  return ctx.quotient(a) == q && ctx.quotient(a + 1) < q;
}

inline std::vector<Extreme> extremes(const SieveContext& ctx) {
  std::vector<Extreme> out;
  for (Int a = 2; a < ctx.p(); ++a) {
    const Int q = ctx.quotient(a);
    if (ctx.quotient(a + 1) < q) out.push_back({a, q});
  }
  return out;
}

/// Mirror image across the principal bisector.
inline std::pair<Int, Int> reflect(const Extreme& e) { return {e.q, e.a}; }

/// p/a - 1 < q <= p/a, compared as exact rationals.
inline bool in_quotient_band(const SieveContext& ctx, const QuotientPoint& pt) {
  const Rational upper(ctx.p(), pt.a);
  const Rational q(pt.q);
  return upper - Rational(1) < q && q <= upper;
}

}  // namespace focal_sieve
