#include <gtest/gtest.h>

#include "cliquemin/errors.hpp"
#include "cliquemin/rational.hpp"

using namespace cliquemin;

TEST(Rational, ParsesReducedFractions) {
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(parse_rational("0.25"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("a/3"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, FloorCeilAndIntegers) {
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(ceil(Rational(7, 2)), 4);
  EXPECT_EQ(floor(Rational(-7, 2)), -4);
  EXPECT_TRUE(is_integer(fraction(8, 4)));
  EXPECT_EQ(fraction(6, -8), Rational(-3, 4));
  EXPECT_EQ(fraction(6, 8) - Rational(3, 4), 0);
  EXPECT_THROW(fraction(1, 0), DomainError);
  EXPECT_FALSE(is_integer(Rational(3, 4)));
}

TEST(Rational, BinomialsAndFactorials) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(pow(Rational(2, 3), 0), Rational(1));
}

TEST(Beta, DerivesP) {
  EXPECT_EQ(Beta(Rational(1, 3)).p(), 2);
  EXPECT_EQ(Beta(Rational(2, 5)).p(), 2);
  EXPECT_EQ(Beta(Rational(1, 4)).p(), 3);
  EXPECT_EQ(Beta(Rational(2, 7)).p(), 3);
  EXPECT_EQ(Beta(Rational(1, 5)).p(), 4);
  EXPECT_EQ(Beta(Rational(1, 2)).p(), 1);
  EXPECT_TRUE(Beta(Rational(9, 32)).in_p3_range());
  EXPECT_FALSE(Beta(Rational(1, 3)).in_p3_range());
}

TEST(Beta, CapsAndMinimumDegree) {
  const Beta b(Rational(1, 4));
  EXPECT_EQ(b.cap(2), Rational(1, 2));
  EXPECT_EQ(b.cap(3), Rational(1, 4));
  EXPECT_EQ(b.cap(4), Rational(0));
  EXPECT_EQ(b.min_degree(8), Rational(6));
}

TEST(Beta, RejectsOutOfRangeAndDecimals) {
  EXPECT_THROW(Beta(Rational(0)), DomainError);
  EXPECT_THROW(Beta(Rational(1)), DomainError);
  EXPECT_THROW(Beta(Rational(3, 2)), DomainError);
  EXPECT_THROW(Beta::parse("0.25"), ParseError);
  EXPECT_EQ(Beta::parse("2/8").value(), Rational(1, 4));
}
