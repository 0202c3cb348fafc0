#pragma once

// Quotient classes: the divisors a sharing floor(p/a) = q. Their remainders
// p - q*a descend in steps of q from the maximum p - q*(floor(p/(q+1)) + 1),
// reached at the smallest member a = floor(p/(q+1)) + 1.

#include "focal_sieve/integer.hpp"
#include "focal_sieve/plane.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace focal_sieve {

struct QuotientClass {
  Int q = 0;
  Int a_min = 0;
  Int a_max = 0;
  Int max_rem = 0;
  /// (a, rem(p/a)) pairs, remainders descending.
  std::vector<std::pair<Int, Int>> remainders;
};

/// { floor(p/a) : 1 < a < p }, ascending.
inline std::vector<Int> attained_quotients(const SieveContext& ctx) {
  std::vector<Int> qs;
  for (Int a = 2; a < ctx.p(); ++a) qs.push_back(ctx.quotient(a));
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  return qs;
}

namespace detail {

// Largest a in [2, p-1] with floor(p/a) = q, if q is attained. Any a with that
// quotient satisfies a <= p/q, and floor(p/a) is non-increasing in a.
inline std::optional<Int> largest_a_for_quotient(const SieveContext& ctx, Int q) {
  if (q < 1) return std::nullopt;
  const Int b = std::min(ctx.p() / q, ctx.p() - 1);
  if (b < 2 || ctx.quotient(b) != q) return std::nullopt;
  return b;
}

inline Int require_attained(const SieveContext& ctx, Int q) {
  const auto b = largest_a_for_quotient(ctx, q);
  if (!b)
    throw std::invalid_argument("quotient " + std::to_string(q) + " is not attained for p = " + std::to_string(ctx.p()));
  return *b;
}

}  // namespace detail

inline bool is_attained(const SieveContext& ctx, Int q) { return detail::largest_a_for_quotient(ctx, q).has_value(); }

/// floor(p/(q+1)) + 1. Throws std::invalid_argument for unattained q.
inline Int min_a_for_quotient(const SieveContext& ctx, Int q) {
  detail::require_attained(ctx, q);
  return ctx.p() / (q + 1) + 1;
}

/// p - q*(floor(p/(q+1)) + 1). Throws std::invalid_argument for unattained q.
inline Int max_remainder_for_quotient(const SieveContext& ctx, Int q) {
  return ctx.p() - q * min_a_for_quotient(ctx, q);
}

inline QuotientClass quotient_class(const SieveContext& ctx, Int q) {
  QuotientClass cls;
  cls.q = q;
  cls.a_max = detail::require_attained(ctx, q);
  cls.a_min = min_a_for_quotient(ctx, q);
  cls.max_rem = max_remainder_for_quotient(ctx, q);
  for (Int a = cls.a_min; a <= cls.a_max; ++a) cls.remainders.emplace_back(a, ctx.remainder(a));
  return cls;
}

}  // namespace focal_sieve
