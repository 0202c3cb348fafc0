#pragma once

// Property sweeps over all primes up to a bound. Each property re-derives its
// claim from brute force or from a second algebraic route and records every
// disagreement as a failure.

#include "focal_sieve/extremes.hpp"
#include "focal_sieve/focal.hpp"
#include "focal_sieve/integer.hpp"
#include "focal_sieve/plane.hpp"
#include "focal_sieve/remainders.hpp"
#include "focal_sieve/sieve.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace focal_sieve {

enum class Property { thm3, thm5, cor6, cor7, cor8, thm11, thm12, rem13, prop15, eq14, eq15, rem16, roundtrip };

inline constexpr std::array<std::pair<Property, std::string_view>, 13> kPropertyNames{{
    {Property::thm3, "thm3"},
    {Property::thm5, "thm5"},
    {Property::cor6, "cor6"},
    {Property::cor7, "cor7"},
    {Property::cor8, "cor8"},
    {Property::thm11, "thm11"},
    {Property::thm12, "thm12"},
    {Property::rem13, "rem13"},
    {Property::prop15, "prop15"},
    {Property::eq14, "eq14"},
    {Property::eq15, "eq15"},
    {Property::rem16, "rem16"},
    {Property::roundtrip, "roundtrip"},
}};

inline std::string_view to_string(Property prop) {
  for (const auto& [p, name] : kPropertyNames)
    if (p == prop) return name;
  return "?";
}

inline std::optional<Property> parse_property(std::string_view name) {
  for (const auto& [p, n] : kPropertyNames)
    if (n == name) return p;
  return std::nullopt;
}

inline std::vector<Property> all_properties() {
  std::vector<Property> out;
  for (const auto& [p, name] : kPropertyNames) out.push_back(p);
  return out;
}

struct PropertyOutcome {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++checked;
    if (!ok) failures.push_back(describe());
  }

  void absorb(PropertyOutcome&& other) {
    checked += other.checked;
    for (auto& f : other.failures) failures.push_back(std::move(f));
  }
};

namespace detail {

inline std::string tag(const SieveContext& ctx) { return "p=" + std::to_string(ctx.p()); }

template <typename... Parts>
std::string describe(const SieveContext& ctx, const Parts&... parts) {
  std::ostringstream os;
  os << tag(ctx);
  ((os << ' ' << parts), ...);
  return os.str();
}

// Brute-force scan of a in [2, p-1]: per quotient, the smallest a, largest a and largest remainder.
struct QuotientScan {
  std::vector<Int> min_a, max_a, max_rem;  // indexed by q; 0 = unattained

  explicit QuotientScan(const SieveContext& ctx) {
    const auto size = static_cast<std::size_t>(ctx.p() / 2 + 2);
    min_a.assign(size, 0);
    max_a.assign(size, 0);
    max_rem.assign(size, 0);
    for (Int a = 2; a < ctx.p(); ++a) {
      const auto q = static_cast<std::size_t>(ctx.p() / a);
      if (min_a[q] == 0) min_a[q] = a;
      max_a[q] = a;
      max_rem[q] = std::max(max_rem[q], ctx.p() % a);
    }
  }

  bool attained(Int q) const { return q >= 1 && q < static_cast<Int>(min_a.size()) && min_a[static_cast<std::size_t>(q)] != 0; }
};

}  // namespace detail

/// Lattice hits of each line are multiples of a lying on it; every multiple of a lies on
/// focal_line(a, k_witness) with k in [1, p]; no non-multiple lies on any line of order a.
inline PropertyOutcome check_thm3(const SieveContext& ctx) {
  PropertyOutcome out;
  const Int p = ctx.p();
  const Int top = ctx.p_squared();
  std::vector<bool> traced(static_cast<std::size_t>(top));
  for (Int a = 2; a < p; ++a) {
    std::fill(traced.begin(), traced.end(), false);
    for (Int k = 1; k <= p; ++k) {
      const auto line = focal_line(ctx, a, k);
      for (Int n : lattrace(ctx, a, k)) {
        traced[static_cast<std::size_t>(n)] = true;
        out.check(n % a == 0 && line_contains(line, map_to_plane(ctx, n)),
                  [&] { return detail::describe(ctx, "a=", a, "k=", k, "traced n=", n, "not a multiple on the line"); });
      }
    }
    for (Int n = p + 1; n < top; ++n) {
      const PlanePoint image = map_to_plane(ctx, n);
      if (n % a == 0) {
        const Int k = k_witness(ctx, a, n);
        const bool ok = k >= 1 && k <= p && line_contains(focal_line(ctx, a, k), image) &&
                        traced[static_cast<std::size_t>(n)];
        out.check(ok, [&] { return detail::describe(ctx, "a=", a, "n=", n, "k=", k, "multiple off its focal line"); });
      } else {
        const bool ok = !focal_line_through(ctx, a, image) && !traced[static_cast<std::size_t>(n)];
        out.check(ok, [&] { return detail::describe(ctx, "a=", a, "n=", n, "non-multiple on a focal line"); });
      }
    }
  }
  return out;
}

/// Pairwise intersections within each family equal the closed-form focal point.
inline PropertyOutcome check_thm5(const SieveContext& ctx) {
  PropertyOutcome out;
  for (Int q : attained_quotients(ctx)) {
    if (family_lines(ctx, q, 1).size() < 2) continue;
    for (Int k = 1; k <= ctx.p(); ++k) {
      const auto lines = family_lines(ctx, q, k);
      const PlanePoint expected = focal_point(ctx, q, k).coords;
      for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
          const auto hit = pairwise_intersection(lines[i], lines[j]);
          out.check(hit && *hit == expected, [&] {
            return detail::describe(ctx, "q=", q, "k=", k, "a=", lines[i].a, "a'=", lines[j].a, "family lines miss focal point");
          });
        }
    }
  }
  return out;
}

/// Every focal point lies on y = x/p.
inline PropertyOutcome check_cor6(const SieveContext& ctx) {
  PropertyOutcome out;
  const auto axis = multiplicative_axis(ctx);
  for (Int q : attained_quotients(ctx))
    for (Int k = 1; k <= ctx.p(); ++k)
      out.check(axis.contains(focal_point(ctx, q, k).coords),
                [&] { return detail::describe(ctx, "q=", q, "k=", k, "focal point off the multiplicative axis"); });
  return out;
}

/// Lines of equal a and different k share the slope and never meet.
inline PropertyOutcome check_cor7(const SieveContext& ctx) {
  PropertyOutcome out;
  for (Int a = 2; a < ctx.p(); ++a) {
    const auto base = focal_line(ctx, a, 1);
    for (Int k = 2; k <= ctx.p(); ++k) {
      const auto other = focal_line(ctx, a, k);
      out.check(other.slope() == base.slope() && !pairwise_intersection(base, other),
                [&] { return detail::describe(ctx, "a=", a, "k=", k, "not parallel to k=1"); });
    }
  }
  return out;
}

/// F_k = k * F_1 componentwise, both for the closed form and for actual family intersections.
inline PropertyOutcome check_cor8(const SieveContext& ctx) {
  PropertyOutcome out;
  for (Int q : attained_quotients(ctx)) {
    const PlanePoint first = focal_point(ctx, q, 1).coords;
    const auto family1 = family_lines(ctx, q, 1);
    std::optional<PlanePoint> meet1;
    if (family1.size() >= 2) meet1 = pairwise_intersection(family1[0], family1[1]);
    for (Int k = 1; k <= ctx.p(); ++k) {
      const Rational kk(k);
      const PlanePoint fk = focal_point(ctx, q, k).coords;
      out.check(fk == PlanePoint{kk * first.x, kk * first.y},
                [&] { return detail::describe(ctx, "q=", q, "k=", k, "F_k != k F_1"); });
      if (meet1) {
        const auto family = family_lines(ctx, q, k);
        const auto meet = pairwise_intersection(family[0], family[1]);
        out.check(meet && *meet == PlanePoint{kk * meet1->x, kk * meet1->y},
                  [&] { return detail::describe(ctx, "q=", q, "k=", k, "family intersection does not scale with k"); });
      }
    }
  }
  return out;
}

/// Extremes all have q >= 2 and are closed under (a, q) -> (q, a).
inline PropertyOutcome check_thm11(const SieveContext& ctx) {
  PropertyOutcome out;
  for (const auto& e : extremes(ctx)) {
    out.check(e.q >= 2, [&] { return detail::describe(ctx, "extreme (", e.a, ",", e.q, ") has q = 1"); });
    if (e.q < 2) continue;
    const auto [ra, rq] = reflect(e);
    out.check(is_extreme(ctx, ra, rq),
              [&] { return detail::describe(ctx, "extreme (", e.a, ",", e.q, ") reflects to a non-extreme"); });
  }
  return out;
}

/// Extremes on or above the bisector have a <= floor(sqrt(p)).
inline PropertyOutcome check_thm12(const SieveContext& ctx) {
  PropertyOutcome out;
  const Int root = isqrt(ctx.p());
  for (const auto& e : extremes(ctx))
    if (e.q >= e.a)
      out.check(e.a <= root, [&] { return detail::describe(ctx, "extreme (", e.a, ",", e.q, ") above bisector with a > sqrt(p)"); });
  return out;
}

/// Quotient points lie in p/a - 1 < q <= p/a.
inline PropertyOutcome check_rem13(const SieveContext& ctx) {
  PropertyOutcome out;
  for (const auto& qp : quotient_points(ctx))
    out.check(in_quotient_band(ctx, qp), [&] { return detail::describe(ctx, "a=", qp.a, "q=", qp.q, "outside band"); });
  return out;
}

/// Closed-form maximum remainder and minimal a against the exhaustive scan.
inline PropertyOutcome check_prop15(const SieveContext& ctx) {
  PropertyOutcome out;
  const detail::QuotientScan scan(ctx);
  for (Int q = 1; q < static_cast<Int>(scan.min_a.size()); ++q) {
    if (!scan.attained(q)) continue;
    const auto i = static_cast<std::size_t>(q);
    out.check(max_remainder_for_quotient(ctx, q) == scan.max_rem[i],
              [&] { return detail::describe(ctx, "q=", q, "max remainder", max_remainder_for_quotient(ctx, q), "!= scan", scan.max_rem[i]); });
    out.check(min_a_for_quotient(ctx, q) == scan.min_a[i],
              [&] { return detail::describe(ctx, "q=", q, "min a", min_a_for_quotient(ctx, q), "!= scan", scan.min_a[i]); });
  }
  return out;
}

/// floor(p / (floor(p/(q+1)) + 1)) = q for attained q.
inline PropertyOutcome check_eq14(const SieveContext& ctx) {
  PropertyOutcome out;
  const Int p = ctx.p();
  const detail::QuotientScan scan(ctx);
  for (Int q = 1; q < static_cast<Int>(scan.min_a.size()); ++q) {
    if (!scan.attained(q)) continue;
    out.check(p / (p / (q + 1) + 1) == q, [&] { return detail::describe(ctx, "q=", q, "fails the minimizer identity"); });
  }
  return out;
}

/// floor(p / floor(p/(floor(p/a) + 1))) > floor(p/a) for every 1 < a < p.
inline PropertyOutcome check_eq15(const SieveContext& ctx) {
  PropertyOutcome out;
  const Int p = ctx.p();
  for (Int a = 2; a < p; ++a) {
    const Int q = p / a;
    const Int below = p / (q + 1);
    out.check(below >= 1 && p / below > q, [&] { return detail::describe(ctx, "a=", a, "fails the strict-minimality identity"); });
  }
  return out;
}

/// Each class spans a contiguous a-interval and its remainders step down by exactly q.
inline PropertyOutcome check_rem16(const SieveContext& ctx) {
  PropertyOutcome out;
  const detail::QuotientScan scan(ctx);
  for (Int q : attained_quotients(ctx)) {
    const auto cls = quotient_class(ctx, q);
    const auto i = static_cast<std::size_t>(q);
    out.check(cls.a_min == scan.min_a[i] && cls.a_max == scan.max_a[i],
              [&] { return detail::describe(ctx, "q=", q, "class interval differs from scan"); });
    out.check(!cls.remainders.empty() && cls.remainders.front().second == cls.max_rem,
              [&] { return detail::describe(ctx, "q=", q, "first remainder is not the maximum"); });
    for (std::size_t j = 0; j < cls.remainders.size(); ++j) {
      const auto [a, r] = cls.remainders[j];
      out.check(ctx.quotient(a) == q, [&] { return detail::describe(ctx, "q=", q, "a=", a, "wrong class"); });
      if (j == 0) continue;
      const auto [pa, pr] = cls.remainders[j - 1];
      out.check(a == pa + 1 && pr - r == q,
                [&] { return detail::describe(ctx, "q=", q, "a=", a, "remainder step", pr - r); });
    }
  }
  return out;
}

inline PropertyOutcome check_roundtrip(const SieveContext& ctx) {
  PropertyOutcome out;
  for (Int n = 1; n <= ctx.p_squared(); ++n) {
    const PlanePoint pt = map_to_plane(ctx, n);
    const bool branch_ok = (pt.x == Rational(ctx.p())) == (n % ctx.p() == 0);
    out.check(branch_ok && unmap(ctx, pt) == n, [&] { return detail::describe(ctx, "n=", n, "does not round-trip"); });
  }
  return out;
}

inline PropertyOutcome check_property(const SieveContext& ctx, Property prop) {
  switch (prop) {
    case Property::thm3: return check_thm3(ctx);
    case Property::thm5: return check_thm5(ctx);
    case Property::cor6: return check_cor6(ctx);
    case Property::cor7: return check_cor7(ctx);
    case Property::cor8: return check_cor8(ctx);
    case Property::thm11: return check_thm11(ctx);
    case Property::thm12: return check_thm12(ctx);
    case Property::rem13: return check_rem13(ctx);
    case Property::prop15: return check_prop15(ctx);
    case Property::eq14: return check_eq14(ctx);
    case Property::eq15: return check_eq15(ctx);
    case Property::rem16: return check_rem16(ctx);
    case Property::roundtrip: return check_roundtrip(ctx);
  }
  throw std::logic_error("unknown property");
}

struct PropertyReport {
  std::string name;
  std::size_t checked_cases = 0;
  std::vector<std::string> failures;
};

struct VerifyReport {
  Int p_lo = 2;
  Int p_hi = 2;
  std::vector<PropertyReport> properties;
  std::chrono::milliseconds elapsed{0};

  bool ok() const {
    return std::all_of(properties.begin(), properties.end(), [](const auto& r) { return r.failures.empty(); });
  }
};

/// Worker count for sweeps: FOCAL_SIEVE_THREADS when set to a positive integer, else the hardware count.
inline unsigned sweep_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FOCAL_SIEVE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return hw;
}

/// Runs each property over every prime in [2, p_max]; the report lists properties in
/// request order and failures in ascending p, whatever the thread count.
inline VerifyReport run_verify(Int p_max, const std::vector<Property>& props, unsigned threads = 1) {
  if (p_max < 2) throw std::invalid_argument("p-max must be >= 2");
  const auto start = std::chrono::steady_clock::now();
  std::vector<Int> primes = primes_classic(1, p_max + 1);

  std::vector<std::vector<PropertyOutcome>> per_prime(primes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      const SieveContext ctx(primes[i]);
      per_prime[i].reserve(props.size());
      for (Property prop : props) per_prime[i].push_back(check_property(ctx, prop));
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(primes.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  VerifyReport report;
  report.p_hi = p_max;
  for (std::size_t j = 0; j < props.size(); ++j) {
    PropertyOutcome total;
    for (auto& outcomes : per_prime) total.absorb(std::move(outcomes[j]));
    report.properties.push_back({std::string(to_string(props[j])), total.checked, std::move(total.failures)});
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace focal_sieve
