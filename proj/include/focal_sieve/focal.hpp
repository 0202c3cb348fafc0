#pragma once

// Focal lines y = (x - k*a) / rem(p/a), the vertical zeroth-order line x = p,
// families sharing (k, floor(p/a)), and their common focal points.

#include "focal_sieve/integer.hpp"
#include "focal_sieve/plane.hpp"
#include "focal_sieve/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace focal_sieve {

/// Focal line of order (k, rem(p/a)) for 1 < a < p, 1 <= k <= p.
struct StandardLine {
  Int a = 0;
  Int k = 0;
  Int remainder = 0;  // rem(p/a), never zero for prime p

  Rational slope() const { return Rational(1, remainder); }
  Int x_intercept() const { return k * a; }

  friend bool operator==(const StandardLine&, const StandardLine&) = default;
};

/// The zeroth-order focal line x = p.
struct VerticalLine {
  Int x = 0;

  friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};

using FocalLine = std::variant<StandardLine, VerticalLine>;

inline StandardLine focal_line(const SieveContext& ctx, Int a, Int k) {
  const Int p = ctx.p();
  if (a < 2 || a > p - 1)
    throw std::out_of_range("focal line order a = " + std::to_string(a) + " outside (1, p)");
  if (k < 1 || k > p)
    throw std::out_of_range("focal line order k = " + std::to_string(k) + " outside [1, p]");
  return StandardLine{a, k, ctx.remainder(a)};
}

inline VerticalLine zeroth_line(const SieveContext& ctx) { return VerticalLine{ctx.p()}; }

inline bool line_contains(const StandardLine& line, const PlanePoint& pt) {
  // y = (x - ka) / r  <=>  r*y = x - ka, r > 0
  return Rational(line.remainder) * pt.y == pt.x - Rational(line.x_intercept());
}

inline bool line_contains(const VerticalLine& line, const PlanePoint& pt) { return pt.x == Rational(line.x); }

inline bool line_contains(const FocalLine& line, const PlanePoint& pt) {
  return std::visit([&](const auto& l) { return line_contains(l, pt); }, line);
}

/// The focal line of order a (k in [1, p]) passing through pt, if any.
inline std::optional<StandardLine> focal_line_through(const SieveContext& ctx, Int a, const PlanePoint& pt) {
  const Int p = ctx.p();
  if (a < 2 || a > p - 1) throw std::out_of_range("focal line order a = " + std::to_string(a) + " outside (1, p)");
  // ka = x - r*y must be an integer multiple of a with k in range.
  const Rational ka = pt.x - Rational(ctx.remainder(a)) * pt.y;
  if (!ka.is_integer()) return std::nullopt;
  const BigInt& v = ka.numerator();
  if (v % a != 0) return std::nullopt;
  const BigInt k = v / a;
  if (k < 1 || k > p) return std::nullopt;
  return StandardLine{a, k.convert_to<Int>(), ctx.remainder(a)};
}

/// The k for which the image of n lies on focal_line(a, k).
///
/// When p does not divide n this is the unique k with n = a(floor(n/p) floor(p/a) + k).
/// Multiples of p sit one row higher on x = p; their k solves the line equation
/// through that shifted image instead.
inline Int k_witness(const SieveContext& ctx, Int a, Int n) {
  const Int p = ctx.p();
  if (a < 2 || a > p - 1) throw std::out_of_range("a = " + std::to_string(a) + " outside (1, p)");
  if (n <= p || n >= ctx.p_squared()) throw std::out_of_range("n = " + std::to_string(n) + " outside (p, p^2)");
  if (n % a != 0) throw std::invalid_argument(std::to_string(a) + " does not divide " + std::to_string(n));
  if (n % p != 0) return n / a - (n / p) * ctx.quotient(a);
  const auto line = focal_line_through(ctx, a, map_to_plane(ctx, n));
  if (!line) throw std::logic_error("no focal line of order " + std::to_string(a) + " through " + std::to_string(n));
  return line->k;
}

/// Every n in (p, p^2) whose image lies on focal_line(a, k), ascending.
///
/// Walks the rows y = -j, j = 0..p-1. On row j the line sits at x = ka - j*rem(p/a);
/// for 1 <= x < p that is the image of a(j floor(p/a) + k), and x = p is the shifted
/// image of (j + 1)p.
inline std::vector<Int> lattrace(const SieveContext& ctx, Int a, Int k) {
  const auto line = focal_line(ctx, a, k);
  const Int p = ctx.p();
  const Int q = ctx.quotient(a);
  std::vector<Int> hits;
  for (Int j = 0; j < p; ++j) {
    const Int x = line.x_intercept() - j * line.remainder;
    if (x < 1) break;  // x decreases with j
    if (x > p) continue;
    const Int n = (x < p) ? a * (j * q + k) : (j + 1) * p;
    if (n > p && n < ctx.p_squared()) hits.push_back(n);
  }
  return hits;
}

/// Family point F_k^q = (kp/q, k/q), with q the up-order and k the down-order.
struct FocalPoint {
  Int q = 0;
  Int k = 0;
  PlanePoint coords;

  friend bool operator==(const FocalPoint&, const FocalPoint&) = default;
};

inline FocalPoint focal_point(const SieveContext& ctx, Int q, Int k) {
  if (q < 1) throw std::out_of_range("focal point up-order must be >= 1, got " + std::to_string(q));
  if (k < 1) throw std::out_of_range("focal point down-order must be >= 1, got " + std::to_string(k));
  return FocalPoint{q, k, PlanePoint{Rational(BigInt(k) * ctx.p(), q), Rational(k, q)}};
}

/// All focal lines of down-order k whose a has floor(p/a) = q. Empty when q is unattained.
inline std::vector<StandardLine> family_lines(const SieveContext& ctx, Int q, Int k) {
  if (q < 1) throw std::out_of_range("family up-order must be >= 1, got " + std::to_string(q));
  std::vector<StandardLine> lines;
  for (Int a = 2; a < ctx.p(); ++a)
    if (ctx.quotient(a) == q) lines.push_back(focal_line(ctx, a, k));
  return lines;
}

/// Intersection of two standard focal lines; nullopt when parallel.
/// Throws std::invalid_argument when both describe the same geometric line.
inline std::optional<PlanePoint> pairwise_intersection(const StandardLine& l1, const StandardLine& l2) {
  if (l1.remainder == l2.remainder) {
    if (l1.x_intercept() == l2.x_intercept())
      throw std::invalid_argument("identical focal lines have no single intersection");
    return std::nullopt;
  }
  // r2 (x - k1 a1) = r1 (x - k2 a2)
  const Rational r1(l1.remainder);
  const Rational r2(l2.remainder);
  const Rational x = (r2 * Rational(l1.x_intercept()) - r1 * Rational(l2.x_intercept())) / (r2 - r1);
  const Rational y = (x - Rational(l1.x_intercept())) / r1;
  return PlanePoint{x, y};
}

/// The line y = x/p through the origin on which every focal point lies.
struct AxisLine {
  Rational slope;

  bool contains(const PlanePoint& pt) const { return pt.y == slope * pt.x; }
};

inline AxisLine multiplicative_axis(const SieveContext& ctx) { return AxisLine{Rational(1, ctx.p())}; }

}  // namespace focal_sieve
