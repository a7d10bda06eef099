#include <gtest/gtest.h>

#include <stdexcept>

#include "xbmat/laurent.hpp"

using namespace xbmat;

namespace {
const LaurentPoly T = LaurentPoly::t();
}

TEST(LaurentPoly, ZeroHasNoTerms) {
  EXPECT_TRUE(LaurentPoly().is_zero());
  EXPECT_TRUE((T - T).is_zero());
  EXPECT_TRUE(LaurentPoly(0).terms().empty());
  EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(LaurentPoly, Printing) {
  EXPECT_EQ((3 * T.pow(2) + 9 * T).to_string(), "3t^2+9t");
  EXPECT_EQ((LaurentPoly::t(-1) + 1).to_string(), "1+t^-1");
  EXPECT_EQ((-T).to_string(), "-t");
  EXPECT_EQ((T - 1).to_string(), "t-1");
  EXPECT_EQ((-2 * T.pow(3) - 5).to_string(), "-2t^3-5");
  EXPECT_EQ(LaurentPoly(-1).to_string(), "-1");
}

TEST(LaurentPoly, Arithmetic) {
  EXPECT_EQ((T + 1).pow(3), T.pow(3) + 3 * T.pow(2) + 3 * T + 1);
  EXPECT_EQ((T + 1) * (T - 1), T.pow(2) - 1);
  EXPECT_EQ(LaurentPoly::t(-2) * T.pow(2), LaurentPoly(1));
  EXPECT_EQ((T + 1).pow(0), LaurentPoly(1));
  const LaurentPoly p = 2 * T.pow(5) - LaurentPoly::t(-3);
  EXPECT_EQ(p.max_exponent(), 5);
  EXPECT_EQ(p.min_exponent(), -3);
  EXPECT_EQ(p.leading_coeff(), 2);
  EXPECT_TRUE(p.has_negative_exponent());
  EXPECT_EQ(p.coeff(4), 0);
}

TEST(LaurentPoly, ArbitraryPrecision) {
  const LaurentPoly big = (T + 1).pow(200);
  Integer c100 = 1;
  for (int k = 0; k < 100; ++k) c100 = c100 * (200 - k) / (k + 1);
  EXPECT_EQ(big.coeff(100), c100);
  EXPECT_GT(big.coeff(100), Integer(1) << 190);
}

TEST(LaurentPoly, Evaluate) {
  const LaurentPoly p = T.pow(2) + 3 * T + LaurentPoly::t(-1);
  EXPECT_EQ(p.evaluate(Rational(2)), Rational(21, 2));
  EXPECT_EQ(p.evaluate(Rational(-1)), Rational(-3));
  EXPECT_THROW(p.evaluate(Rational(0)), std::domain_error);
  EXPECT_EQ((T + 2).evaluate(Rational(0)), Rational(2));
}

TEST(LaurentPoly, ParseRational) {
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("7/2"), Rational(7, 2));
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_EQ(to_string(Rational(-7, 2)), "-7/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
}
