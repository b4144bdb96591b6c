#include <gtest/gtest.h>

#include <numeric>

#include "braces/modint.hpp"

using namespace braces;

TEST(Binom, ZeroWhenBelow) {
  EXPECT_EQ(binom(1, 2), 0u);
  EXPECT_EQ(binom(0, 1), 0u);
}

TEST(Binom, SmallValues) {
  EXPECT_EQ(binom(4, 2), 6u);
  EXPECT_EQ(binom(5, 0), 1u);
  EXPECT_EQ(binom(7, 7), 1u);
  EXPECT_EQ(binom(10, 3), 120u);
}

TEST(Binom, PChooseTwoVanishesModOddP) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) EXPECT_EQ(binom(p, 2) % p, 0u) << p;
  EXPECT_EQ(binom(2, 2) % 2, 1u);
}

TEST(Binom, Overflow) { EXPECT_THROW(binom(200, 100), ArithmeticError); }

TEST(TriSum, Values) {
  EXPECT_EQ(tri_sum(0), 0u);
  EXPECT_EQ(tri_sum(1), 0u);
  EXPECT_EQ(tri_sum(3), 3u);
  for (std::uint64_t y = 0; y <= 100; ++y) EXPECT_EQ(tri_sum(y), binom(y, 2)) << y;
}

TEST(Lift, Canonical) {
  EXPECT_EQ(lift(Residue(3, 4)), 3u);
  EXPECT_EQ(lift(Residue(0, 9)), 0u);
  EXPECT_EQ(lift(Residue(-1, 9)), 8u);
  EXPECT_EQ(lift(Residue(20, 9)), 2u);
}

TEST(Lift, BinomialShiftByP) {
  for (int p : {3, 5, 7})
    for (int y = 0; y < p * p; ++y) {
      const auto r = Residue(y, p * p);
      EXPECT_EQ(binom(lift(r) + p, 2) % p, binom(lift(r), 2) % p);
      // p*C(a+p,2) = p*C(a,2) mod p^2
      EXPECT_EQ(p * binom(y + p, 2) % (p * p), p * binom(y, 2) % (p * p));
    }
}

TEST(Residue, RingOpsStayCanonical) {
  for (std::int64_t m : {2, 4, 8, 9, 27, 25}) {
    for (std::int64_t a = -m; a < 2 * m; ++a)
      for (std::int64_t b = 0; b < m; ++b) {
        const Residue x(a, m), y(b, m);
        for (const Residue& r : {x + y, x - y, x * y, -x}) {
          EXPECT_GE(r.value(), 0);
          EXPECT_LT(r.value(), m);
        }
        EXPECT_EQ((x + y).value(), mod(a + b, m));
        EXPECT_EQ((x * y).value(), mod(a * b, m));
      }
  }
}

TEST(Residue, InverseExactlyForUnits) {
  for (std::int64_t m : {3, 9, 27, 4, 8, 25}) {
    for (std::int64_t u = 0; u < m; ++u) {
      const Residue r(u, m);
      if (std::gcd(u, m) == 1) {
        ASSERT_TRUE(r.is_unit());
        EXPECT_EQ((r * r.inverse()).value(), 1);
      } else {
        EXPECT_FALSE(r.is_unit());
        EXPECT_THROW(r.inverse(), ArithmeticError);
      }
    }
  }
}

TEST(Residue, MixedModuliRejected) { EXPECT_THROW(Residue(1, 3) + Residue(1, 9), ArithmeticError); }

TEST(Residue, Pow) {
  EXPECT_EQ(Residue(2, 9).pow(6).value(), 1);
  EXPECT_EQ(Residue(5, 8).pow(0).value(), 1);
  EXPECT_EQ(Residue(3, 27).pow(3).value(), 0);
}

TEST(IsPrime, Small) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(9));
}
