#pragma once

// Primes in (p, p^2) as the integers whose images avoid every focal line,
// and a textbook Eratosthenes sieve used as the independent oracle.

#include "focal_sieve/focal.hpp"
#include "focal_sieve/integer.hpp"
#include "focal_sieve/plane.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace focal_sieve {

/// One flag per integer of the open interval (lo, hi).
class CrossedSet {
 public:
  CrossedSet() = default;
  CrossedSet(Int lo, Int hi) : lo_(lo), hi_(hi), bits_(hi > lo + 1 ? static_cast<std::size_t>(hi - lo - 1) : 0) {}

  Int lo() const { return lo_; }
  Int hi() const { return hi_; }

  bool in_range(Int n) const { return n > lo_ && n < hi_; }
  bool contains(Int n) const { return in_range(n) && bits_[index(n)]; }

  void insert(Int n) {
    if (!in_range(n)) throw std::out_of_range(std::to_string(n) + " outside crossed-set interval");
    bits_[index(n)] = true;
  }

  /// Set union; both sides must cover the same interval.
  CrossedSet& merge(const CrossedSet& other) {
    if (other.lo_ != lo_ || other.hi_ != hi_) throw std::invalid_argument("crossed-set intervals differ");
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (other.bits_[i]) bits_[i] = true;
    return *this;
  }

  std::size_t size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

  std::vector<Int> members() const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(lo_ + 1 + static_cast<Int>(i));
    return out;
  }

  /// Integers of the interval not in the set, ascending.
  std::vector<Int> complement() const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (!bits_[i]) out.push_back(lo_ + 1 + static_cast<Int>(i));
    return out;
  }

  friend bool operator==(const CrossedSet&, const CrossedSet&) = default;

 private:
  std::size_t index(Int n) const { return static_cast<std::size_t>(n - lo_ - 1); }

  Int lo_ = 0;
  Int hi_ = 0;
  std::vector<bool> bits_;
};

enum class SieveMethod { geometric, classic };

inline std::string_view to_string(SieveMethod m) { return m == SieveMethod::geometric ? "geometric" : "classic"; }

struct SieveResult {
  Int p = 0;
  CrossedSet crossed;
  std::vector<Int> primes;
  SieveMethod method = SieveMethod::geometric;
};

namespace detail {

inline void cross_lines(const SieveContext& ctx, Int a_begin, Int a_end, CrossedSet& crossed) {
  for (Int a = a_begin; a < a_end; ++a)
    for (Int k = 1; k <= ctx.p(); ++k)
      for (Int n : lattrace(ctx, a, k)) crossed.insert(n);
}

}  // namespace detail

/// Lattice hits of every standard focal line plus the multiples of p on x = p.
/// threads <= 1 runs the single-threaded reference path.
inline CrossedSet crossed_geometric(const SieveContext& ctx, unsigned threads = 1) {
  const Int p = ctx.p();
  CrossedSet crossed(p, ctx.p_squared());
  for (Int m = 2; m < p; ++m) crossed.insert(m * p);

  const Int lines = p - 2;  // a in [2, p-1]
  if (threads <= 1 || lines < 2) {
    detail::cross_lines(ctx, 2, p, crossed);
    return crossed;
  }
  const Int workers = std::min<Int>(threads, lines);
  std::vector<CrossedSet> partial(static_cast<std::size_t>(workers), CrossedSet(p, ctx.p_squared()));
  std::vector<std::jthread> pool;
  for (Int w = 0; w < workers; ++w) {
    const Int begin = 2 + lines * w / workers;
    const Int end = 2 + lines * (w + 1) / workers;
    pool.emplace_back([&ctx, &partial, w, begin, end] {
      detail::cross_lines(ctx, begin, end, partial[static_cast<std::size_t>(w)]);
    });
  }
  pool.clear();
  for (const auto& part : partial) crossed.merge(part);
  return crossed;
}

/// Multiples of every a in [2, p-1] and of p itself, marked arithmetically.
/// Equal to crossed_geometric exactly when the lattice-hit characterization holds.
inline CrossedSet crossed_by_multiples(const SieveContext& ctx) {
  const Int p = ctx.p();
  CrossedSet crossed(p, ctx.p_squared());
  for (Int a = 2; a <= p; ++a)
    for (Int n = (p / a + 1) * a; n < ctx.p_squared(); n += a) crossed.insert(n);
  return crossed;
}

inline std::vector<Int> primes_geometric(const SieveContext& ctx) { return crossed_geometric(ctx).complement(); }

/// Primes in the open interval (lo, hi) by Eratosthenes marking.
inline std::vector<Int> primes_classic(Int lo, Int hi) {
  if (lo < 0 || lo >= hi) throw std::invalid_argument("primes_classic requires 0 <= lo < hi");
  std::vector<bool> composite(static_cast<std::size_t>(hi), false);
  std::vector<Int> primes;
  for (Int i = 2; i < hi; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    if (i > lo) primes.push_back(i);
    for (Int m = i * i; m < hi; m += i) composite[static_cast<std::size_t>(m)] = true;
  }
  return primes;
}

inline SieveResult run_sieve(const SieveContext& ctx, SieveMethod method) {
  SieveResult result;
  result.p = ctx.p();
  result.method = method;
  if (method == SieveMethod::geometric) {
    result.crossed = crossed_geometric(ctx);
    result.primes = result.crossed.complement();
    return result;
  }
  result.primes = primes_classic(ctx.p(), ctx.p_squared());
  result.crossed = CrossedSet(ctx.p(), ctx.p_squared());
  std::size_t next = 0;
  for (Int n = ctx.p() + 1; n < ctx.p_squared(); ++n) {
    if (next < result.primes.size() && result.primes[next] == n) {
      ++next;
      continue;
    }
    result.crossed.insert(n);
  }
  return result;
}

}  // namespace focal_sieve
