#include "focal_sieve/plane.hpp"
#include "focal_sieve/serialize.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace focal_sieve;

namespace {
PlanePoint pt(Int x, Int y) { return {Rational(x), Rational(y)}; }
}  // namespace

TEST(Context, AcceptsPrimes) {
  const auto c11 = new_context(11);
  EXPECT_EQ(c11.p(), 11);
  EXPECT_EQ(c11.p_squared(), 121);
  const auto c101 = new_context(101);
  EXPECT_EQ(c101.p_squared(), 10201);
  EXPECT_EQ(new_context(2).p_squared(), 4);
}

TEST(Context, RejectsCompositesNamingFactor) {
  try {
    new_context(12);
    FAIL() << "12 accepted";
  } catch (const NotPrimeError& e) {
    EXPECT_EQ(e.factor(), 2);
    EXPECT_NE(std::string(e.what()).find("factor 2"), std::string::npos);
  }
  try {
    new_context(91);
    FAIL() << "91 accepted";
  } catch (const NotPrimeError& e) {
    EXPECT_EQ(e.factor(), 7);
  }
  EXPECT_THROW(new_context(1), NotPrimeError);
  EXPECT_THROW(new_context(0), NotPrimeError);
  EXPECT_THROW(new_context(-7), NotPrimeError);
}

TEST(Context, PrimalityAgreesWithTrialDivision) {
  for (Int n = -3; n < 2000; ++n) EXPECT_EQ(is_prime(n), oracle::is_prime_trial(n)) << n;
}

TEST(Integer, IsqrtIsExact) {
  for (Int n = 0; n < 20000; ++n) {
    const Int r = isqrt(n);
    EXPECT_LE(r * r, n);
    EXPECT_GT((r + 1) * (r + 1), n);
  }
  EXPECT_EQ(isqrt(kMaxPrime * kMaxPrime), kMaxPrime);
}

TEST(Plane, MapExamples) {
  const auto ctx = new_context(11);
  EXPECT_EQ(map_to_plane(ctx, 1), pt(1, 0));
  EXPECT_EQ(map_to_plane(ctx, 11), pt(11, 0));
  EXPECT_EQ(map_to_plane(ctx, 25), pt(3, -2));
  EXPECT_EQ(map_to_plane(ctx, 22), pt(11, -1));
  EXPECT_EQ(map_to_plane(ctx, 121), pt(11, -10));
  EXPECT_THROW(map_to_plane(ctx, 0), std::out_of_range);
  EXPECT_THROW(map_to_plane(ctx, 122), std::out_of_range);
}

TEST(Plane, UnmapExamples) {
  const auto ctx = new_context(11);
  EXPECT_EQ(unmap(ctx, pt(3, -2)), 25);
  EXPECT_EQ(unmap(ctx, pt(11, 0)), 11);
  EXPECT_THROW(unmap(ctx, pt(0, 0)), std::invalid_argument);
  EXPECT_THROW(unmap(ctx, pt(12, 0)), std::invalid_argument);
  EXPECT_THROW(unmap(ctx, pt(3, 1)), std::invalid_argument);
  EXPECT_THROW(unmap(ctx, pt(3, -11)), std::invalid_argument);
  EXPECT_THROW(unmap(ctx, PlanePoint{rat(1, 2), Rational(0)}), std::invalid_argument);
}

TEST(Plane, BijectionBranchesAndRange) {
  for (Int p : oracle::primes_upto(101)) {
    const auto ctx = new_context(p);
    for (Int n = 1; n <= p * p; ++n) {
      const PlanePoint img = map_to_plane(ctx, n);
      const auto [ox, oy] = oracle::image(p, n);
      ASSERT_EQ(img, pt(ox, oy)) << "p=" << p << " n=" << n;
      ASSERT_EQ(unmap(ctx, img), n);
      ASSERT_EQ(img.x == Rational(p), n % p == 0);
      ASSERT_GE(img.x, Rational(1));
      ASSERT_LE(img.x, Rational(p));
      ASSERT_LE(img.y, Rational(0));
      ASSERT_GE(img.y, Rational(-p + 1));
    }
  }
}

TEST(Plane, PointJson) {
  const auto ctx = new_context(11);
  const nlohmann::json j = map_to_plane(ctx, 25);
  EXPECT_EQ(j.dump(), R"({"x":"3","y":"-2"})");
  EXPECT_EQ(j.get<PlanePoint>(), pt(3, -2));
}
