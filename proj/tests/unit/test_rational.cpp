#include "dks/rational.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using dks::Integer;
using dks::Rational;

namespace {

Rational frac(std::int64_t p, std::int64_t q) { return Rational(Integer(p), Integer(q)); }

}  // namespace

TEST(Rational, StoresLowestTermsWithPositiveDenominator) {
    const Rational r = frac(6, -8);
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 4);

    const Rational zero = frac(0, -17);
    EXPECT_EQ(zero.numerator(), 0);
    EXPECT_EQ(zero.denominator(), 1);
}

TEST(Rational, ZeroDenominatorThrows) {
    EXPECT_THROW(frac(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(), std::domain_error);
    EXPECT_THROW(Rational().reciprocal(), std::domain_error);
}

TEST(Rational, FloorRoundsTowardNegativeInfinity) {
    EXPECT_EQ(frac(7, 2).floor(), 3);
    EXPECT_EQ(frac(-7, 2).floor(), -4);
    EXPECT_EQ(frac(-6, 3).floor(), -2);
}

TEST(Rational, Ordering) {
    EXPECT_LT(frac(1, 3), frac(1, 2));
    EXPECT_GT(frac(-1, 3), frac(-1, 2));
    EXPECT_EQ(frac(2, 4), frac(1, 2));
}

TEST(Rational, FixedRenderingRoundsHalfToEven) {
    EXPECT_EQ(frac(1, 8).to_fixed(2), "0.12");   // 0.125 -> even
    EXPECT_EQ(frac(3, 8).to_fixed(2), "0.38");   // 0.375 -> even
    EXPECT_EQ(frac(-1, 8).to_fixed(2), "-0.12");
    EXPECT_EQ(frac(5, 2).to_fixed(0), "2");
    EXPECT_EQ(frac(7, 2).to_fixed(0), "4");
    EXPECT_EQ(frac(2, 3).to_fixed(4), "0.6667");
    EXPECT_EQ(Rational(12).to_fixed(3), "12.000");
}

TEST(Rational, SignificantRendering) {
    EXPECT_EQ(frac(1, 3).to_significant(3), "0.333");
    EXPECT_EQ(frac(2, 3).to_significant(12), "0.666666666667");
    EXPECT_EQ(frac(31537789, 1233).to_significant(8), "25578.093");
    EXPECT_EQ(frac(1, 1000).to_significant(2), "0.0010");
    EXPECT_EQ(frac(9999, 10000).to_significant(2), "1.0");
    EXPECT_EQ(Rational(123456).to_significant(2), "120000");
    EXPECT_EQ(Rational().to_significant(5), "0");
    EXPECT_EQ(frac(-1, 8).to_significant(2), "-0.12");
}

TEST(RationalProperty, AdditionIsInvertedBySubtraction) {
    dks::testing::Gen gen(11);
    for (int i = 0; i < 2000; ++i) {
        const Rational x = frac(gen.uniform(-1'000'000, 1'000'000), gen.uniform(1, 1'000'000));
        const Rational y = frac(gen.uniform(-1'000'000, 1'000'000), gen.uniform(1, 1'000'000));
        EXPECT_EQ((x + y) - y, x);
        if (!y.is_zero()) {
            EXPECT_EQ((x / y) * y, x);
        }
    }
}

TEST(RationalProperty, ResultsAreAlwaysReduced) {
    dks::testing::Gen gen(12);
    for (int i = 0; i < 2000; ++i) {
        const Rational x = frac(gen.uniform(-5000, 5000), gen.uniform(1, 5000));
        const Rational y = frac(gen.uniform(-5000, 5000), gen.uniform(1, 5000));
        for (const Rational& r : {x + y, x - y, x * y}) {
            const Integer num = r.numerator() < 0 ? Integer(-r.numerator()) : r.numerator();
            EXPECT_GE(r.denominator(), 1);
            if (num == 0) {
                EXPECT_EQ(r.denominator(), 1);
            } else {
                EXPECT_EQ(boost::multiprecision::gcd(num, r.denominator()), 1);
            }
        }
    }
}
