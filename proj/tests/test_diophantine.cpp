#include <gtest/gtest.h>

#include <cmath>

#include "qws/diophantine.hpp"
#include "qws/error.hpp"

using namespace qws;

TEST(Rational, RecoversSmallFractions) {
  for (long long q = 1; q <= 40; ++q)
    for (long long p = -40; p <= 40; ++p) {
      const auto f = rational_approximation(static_cast<double>(p) / q);
      ASSERT_TRUE(f.has_value());
      EXPECT_EQ(f->num * q, p * f->den);
    }
}

TEST(Rational, RejectsIrrationals) {
  EXPECT_FALSE(rational_approximation(std::sqrt(2.0)).has_value());
  EXPECT_FALSE(rational_approximation((1 + std::sqrt(5.0)) / 2).has_value());
  EXPECT_FALSE(rational_approximation(1 / (std::sqrt(5.0) - 1)).has_value());
  EXPECT_FALSE(rational_approximation(M_PI).has_value());
}

TEST(Rational, ToleratesRoundoff) {
  const auto f = rational_approximation(1.0 / 3.0 + 1e-13);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(*f, (Fraction{1, 3}));
}

TEST(Squarefree, Parts) {
  EXPECT_EQ(squarefree_part(1), 1);
  EXPECT_EQ(squarefree_part(8), 2);
  EXPECT_EQ(squarefree_part(45), 5);
  EXPECT_EQ(squarefree_part(30), 30);
  EXPECT_EQ(squarefree_part(999966000289LL), 1);  // 999983^2
  EXPECT_THROW(squarefree_part(0), InvalidArgument);
}

TEST(Integers, NearInteger) {
  EXPECT_EQ(near_integer(2.9999999999), 3);
  EXPECT_FALSE(near_integer(2.5).has_value());
  EXPECT_TRUE(is_perfect_square(144));
  EXPECT_FALSE(is_perfect_square(145));
  EXPECT_FALSE(is_perfect_square(-4));
  EXPECT_EQ(gcd_all({12, -18, 30}), 6);
  EXPECT_EQ(gcd_all({}), 0);
}
