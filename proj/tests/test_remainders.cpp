#include "focal_sieve/focal.hpp"
#include "focal_sieve/remainders.hpp"
#include "focal_sieve/serialize.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace focal_sieve;

TEST(Remainders, AttainedQuotients) {
  EXPECT_EQ(attained_quotients(new_context(11)), (std::vector<Int>{1, 2, 3, 5}));
  EXPECT_EQ(attained_quotients(new_context(13)), (std::vector<Int>{1, 2, 3, 4, 6}));
  EXPECT_EQ(attained_quotients(new_context(5)), (std::vector<Int>{1, 2}));
  EXPECT_TRUE(attained_quotients(new_context(2)).empty());
}

TEST(Remainders, MinA) {
  const auto ctx = new_context(11);
  EXPECT_EQ(min_a_for_quotient(ctx, 5), 2);
  EXPECT_EQ(min_a_for_quotient(ctx, 3), 3);
  EXPECT_EQ(min_a_for_quotient(ctx, 1), 6);
}

TEST(Remainders, MaxRemainder) {
  EXPECT_EQ(max_remainder_for_quotient(new_context(11), 3), 2);
  EXPECT_EQ(max_remainder_for_quotient(new_context(11), 1), 5);
  EXPECT_EQ(max_remainder_for_quotient(new_context(101), 9), 2);
}

TEST(Remainders, UnattainedQuotientIsAnError) {
  const auto ctx = new_context(11);
  for (Int q : {0, 4, 6, 11, -1}) {
    EXPECT_FALSE(is_attained(ctx, q));
    EXPECT_THROW(min_a_for_quotient(ctx, q), std::invalid_argument) << q;
    EXPECT_THROW(max_remainder_for_quotient(ctx, q), std::invalid_argument) << q;
    EXPECT_THROW(quotient_class(ctx, q), std::invalid_argument) << q;
  }
  EXPECT_THROW(quotient_class(new_context(2), 1), std::invalid_argument);
}

TEST(Remainders, QuotientClassExamples) {
  const auto ctx = new_context(11);
  const auto c2 = quotient_class(ctx, 2);
  EXPECT_EQ(c2.a_min, 4);
  EXPECT_EQ(c2.a_max, 5);
  EXPECT_EQ(c2.remainders, (std::vector<std::pair<Int, Int>>{{4, 3}, {5, 1}}));
  const auto c5 = quotient_class(ctx, 5);
  EXPECT_EQ(c5.remainders, (std::vector<std::pair<Int, Int>>{{2, 1}}));
  const auto c1 = quotient_class(ctx, 1);
  EXPECT_EQ(c1.a_min, 6);
  EXPECT_EQ(c1.a_max, 10);
  EXPECT_EQ(c1.max_rem, 5);
  std::vector<Int> rems;
  for (const auto& [a, r] : c1.remainders) rems.push_back(r);
  EXPECT_EQ(rems, (std::vector<Int>{5, 4, 3, 2, 1}));
}

TEST(Remainders, Json) {
  const auto ctx = new_context(11);
  EXPECT_EQ(quotient_class_json(ctx, quotient_class(ctx, 2)).dump(),
            R"({"aMax":5,"aMin":4,"maxRem":3,"p":11,"q":2,"remainders":[[4,3],[5,1]]})");
}

// Closed forms against the exhaustive scan, with the proof identities as predicates.
TEST(Remainders, ClosedFormsMatchScan) {
  for (Int p : oracle::primes_upto(3000)) {
    const auto ctx = new_context(p);
    const auto classes = oracle::quotient_classes(p);
    std::vector<Int> scanned_qs;
    for (const auto& [q, c] : classes) scanned_qs.push_back(q);
    ASSERT_EQ(attained_quotients(ctx), scanned_qs);
    for (const auto& [q, c] : classes) {
      ASSERT_TRUE(is_attained(ctx, q));
      ASSERT_EQ(max_remainder_for_quotient(ctx, q), c.max_rem) << "p=" << p << " q=" << q;
      const Int a_min = min_a_for_quotient(ctx, q);
      ASSERT_EQ(a_min, c.min_a);
      ASSERT_EQ(p / a_min, q);          // minimizer has quotient q
      ASSERT_GT(p / (a_min - 1), q);    // and nothing smaller does
      const auto cls = quotient_class(ctx, q);
      ASSERT_EQ(cls.a_max, c.max_a);
      std::vector<std::pair<Int, Int>> members(c.members.begin(), c.members.end());
      ASSERT_EQ(cls.remainders, members);
      for (std::size_t i = 1; i < cls.remainders.size(); ++i) {
        ASSERT_EQ(cls.remainders[i].first, cls.remainders[i - 1].first + 1);
        ASSERT_EQ(cls.remainders[i - 1].second - cls.remainders[i].second, q);
      }
    }
    for (Int a = 2; a < p; ++a) {
      const Int q = p / a;
      ASSERT_GT(p / (p / (q + 1)), q) << "p=" << p << " a=" << a;
    }
  }
}

// The slopes of a family of up-order q are the reciprocals of the class remainders.
TEST(Remainders, SlopesOfFamilyAreReciprocalRemainders) {
  for (Int p : oracle::primes_upto(200)) {
    const auto ctx = new_context(p);
    for (Int q : attained_quotients(ctx)) {
      std::set<std::string> slopes, expected;
      for (const auto& line : family_lines(ctx, q, 1)) slopes.insert(line.slope().str());
      for (const auto& [a, r] : quotient_class(ctx, q).remainders) expected.insert(rat(1, r).str());
      ASSERT_EQ(slopes, expected) << "p=" << p << " q=" << q;
    }
  }
}
