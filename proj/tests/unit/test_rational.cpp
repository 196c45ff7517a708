#include <gtest/gtest.h>

#include <limits>

#include "splitnull/rational.hpp"

using splitnull::Rational;

TEST(Rational, ReducesAndNormalisesSign) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(0, -7), Rational(0));
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(8, 4).str(), "2");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 3);
  const Rational b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  EXPECT_THROW(a / Rational(0), std::domain_error);
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_GT(Rational(2, 3), Rational(3, 5));
}

TEST(Rational, OverflowPromotesAndDemotes) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  const Rational square = big * big;
  EXPECT_EQ(square / big, big);
  EXPECT_EQ((square - square).str(), "0");
  EXPECT_TRUE((square - square).is_zero());
  EXPECT_EQ(square.str(), "85070591730234615847396907784232501249");
  const Rational back = square / big / big;
  EXPECT_EQ(back, Rational(1));
  EXPECT_TRUE(back.is_integer());
}

TEST(Rational, MinInt64IsRepresentable) {
  const Rational m(std::numeric_limits<std::int64_t>::min());
  EXPECT_EQ(m.str(), "-9223372036854775808");
  EXPECT_EQ(m + Rational(1), Rational(std::numeric_limits<std::int64_t>::min() + 1));
  EXPECT_EQ(Rational(std::numeric_limits<std::int64_t>::min(), -2).str(), "4611686018427387904");
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("+4"), Rational(4));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/10").str(), "12345678901234567890123456789");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
}

TEST(Rational, SignAndAbs) {
  EXPECT_EQ(Rational(-2, 3).sign(), -1);
  EXPECT_EQ(Rational(0).sign(), 0);
  EXPECT_EQ(abs(Rational(-2, 3)), Rational(2, 3));
}
