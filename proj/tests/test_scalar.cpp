#include "ncalg/scalar.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using ncalg::Backend;
using ncalg::Scalar;

TEST(Scalar, ParseIntegersAndFractions) {
    EXPECT_EQ(Scalar::parse("7"), Scalar(7));
    EXPECT_EQ(Scalar::parse("-3/4"), Scalar::rational(-3, 4));
    EXPECT_EQ(Scalar::parse("6/8"), Scalar::rational(3, 4));
    EXPECT_TRUE(Scalar::parse("6/8").is_rational());
}

TEST(Scalar, DecimalsAreExact) {
    const Scalar s = Scalar::parse("0.25");
    ASSERT_TRUE(s.is_rational());
    EXPECT_EQ(s, Scalar::rational(1, 4));
    EXPECT_EQ(Scalar::parse("-1.5"), Scalar::rational(-3, 2));
    EXPECT_EQ(Scalar::parse("0.125"), Scalar::rational(1, 8));
    EXPECT_EQ(Scalar::parse("010"), Scalar(10));
    EXPECT_EQ(Scalar::parse("08/09"), Scalar::rational(8, 9));
}

TEST(Scalar, ExponentNotationIsFloat) {
    const Scalar s = Scalar::parse("1e-3");
    EXPECT_TRUE(s.is_float());
    EXPECT_DOUBLE_EQ(s.to_double(), 1e-3);
}

TEST(Scalar, FloatBackendParse) {
    const Scalar s = Scalar::parse("1/3", Backend::Float);
    EXPECT_TRUE(s.is_float());
    EXPECT_NEAR(s.to_double(), 1.0 / 3.0, 1e-16);
}

TEST(Scalar, ParseErrors) {
    EXPECT_THROW(Scalar::parse(""), std::invalid_argument);
    EXPECT_THROW(Scalar::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Scalar::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Scalar::parse("1/2/3"), std::invalid_argument);
}

TEST(Scalar, RationalReduced) {
    const Scalar s = Scalar::rational(10, -4);
    EXPECT_EQ(s.as_rational().get_num(), -5);
    EXPECT_EQ(s.as_rational().get_den(), 2);
}

TEST(Scalar, ExactArithmetic) {
    const Scalar third = Scalar::rational(1, 3);
    EXPECT_EQ(third + third + third, Scalar(1));
    EXPECT_EQ(third * Scalar(3), Scalar(1));
    EXPECT_EQ(Scalar(1) / Scalar(3), third);
    EXPECT_TRUE((third - third).is_zero());
}

TEST(Scalar, MixingWithFloatGivesFloat) {
    const Scalar s = Scalar::rational(1, 2) + Scalar(0.25);
    EXPECT_TRUE(s.is_float());
    EXPECT_DOUBLE_EQ(s.to_double(), 0.75);
}

TEST(Scalar, DivisionByZeroThrows) {
    EXPECT_THROW(Scalar(1) / Scalar(0), std::domain_error);
}

TEST(Scalar, ToleranceComparison) {
    EXPECT_TRUE(approx_equal(Scalar(1.0), Scalar(1.0 + 1e-13), 1e-12));
    EXPECT_FALSE(approx_equal(Scalar(1.0), Scalar(1.0 + 1e-9), 1e-12));
    EXPECT_TRUE(Scalar(1e-14).is_zero(1e-12));
    EXPECT_FALSE(Scalar(1e-14).is_zero());
}

TEST(Scalar, Ordering) {
    EXPECT_LT(Scalar::rational(1, 3), Scalar::rational(1, 2));
    EXPECT_GT(Scalar(0.6), Scalar::rational(1, 2));
    EXPECT_EQ(Scalar(-2).sign(), -1);
    EXPECT_EQ(Scalar(0).sign(), 0);
}

TEST(Scalar, SqrtExactOnPerfectSquares) {
    const Scalar r = sqrt(Scalar::rational(9, 4));
    ASSERT_TRUE(r.is_rational());
    EXPECT_EQ(r, Scalar::rational(3, 2));
    const Scalar two = sqrt(Scalar(2));
    EXPECT_TRUE(two.is_float());
    EXPECT_NEAR(two.to_double(), std::sqrt(2.0), 1e-15);
    EXPECT_THROW(sqrt(Scalar(-1)), std::domain_error);
}

TEST(Scalar, ToString) {
    EXPECT_EQ(Scalar::rational(-3, 4).to_string(), "-3/4");
    EXPECT_EQ(Scalar(5).to_string(), "5");
}

TEST(Scalar, FieldAxiomsOnRandomRationals) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    for (int s = 0; s < 200; ++s) {
        const Scalar a = Scalar::rational(num(rng), den(rng));
        const Scalar b = Scalar::rational(num(rng), den(rng));
        const Scalar c = Scalar::rational(num(rng), den(rng));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) + c, a + (b + c));
        if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    }
}
