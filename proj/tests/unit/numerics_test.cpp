#include <gtest/gtest.h>

#include <random>

#include "mop/errors.hpp"
#include "mop/numerics.hpp"

namespace {

using mop::Rational;

TEST(ToDecimal, RoundsCorrectly)
{
    EXPECT_EQ(mop::to_decimal(Rational(29) / 3, 5), "9.6667");
    EXPECT_EQ(mop::to_decimal(Rational(1), 3), "1.00");
    EXPECT_EQ(mop::to_decimal(Rational(656) / 9, 10), "72.88888889");
    EXPECT_EQ(mop::to_decimal(Rational(29) / 3, 20), "9.6666666666666666667");
}

TEST(ToDecimal, NegativeAndSmall)
{
    EXPECT_EQ(mop::to_decimal(Rational(-1) / 8, 2), "-0.13");
    EXPECT_EQ(mop::to_decimal(Rational(1) / 1000, 3), "0.00100");
}

TEST(Render, IntegersAsWritten)
{
    EXPECT_EQ(mop::render(Rational(1), 20), "1");
    EXPECT_EQ(mop::render(Rational(29) / 3, 5), "9.6667");
}

TEST(Rational, ParseForms)
{
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational::parse("-3/6"), Rational(-1) / 2);
    EXPECT_EQ(Rational::parse("-0.125"), Rational(-1) / 8);
    EXPECT_THROW(Rational::parse("1/0"), mop::Error);
    EXPECT_THROW(Rational::parse("abc"), mop::Error);
}

TEST(Rational, DivisionByZeroThrows)
{
    EXPECT_THROW(Rational(1) / Rational(0), mop::DomainError);
}

TEST(SqrtReal, TableAnchors)
{
    EXPECT_EQ(mop::sqrt_real(3, 20).to_string(), "1.7320508075688772935");
    EXPECT_EQ(mop::sqrt_real(Rational(656) / 9, 20).to_string(), "8.5374989832437982487");
    EXPECT_TRUE(mop::sqrt_real(0, 10).value().is_zero());
}

TEST(SqrtReal, NegativeInputThrows)
{
    EXPECT_THROW(mop::sqrt_real(-1, 10), mop::DomainError);
}

TEST(SqrtReal, PerfectSquaresAreExact)
{
    EXPECT_EQ(mop::sqrt_real(Rational(9) / 4, 10).value(), Rational(3) / 2);
}

TEST(SqrtReal, RelativeErrorBound)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational q(mpz_class(static_cast<long>(rng() % 100000) + 1),
                         mpz_class(static_cast<long>(rng() % 997) + 1));
        const int digits = 1 + static_cast<int>(rng() % 30);
        const Rational s = mop::sqrt_real(q, digits).value();
        const Rational rel = mop::abs(s * s - q) / q;
        EXPECT_LE(rel, Rational(1) / mop::pow(Rational(10), static_cast<unsigned>(digits - 1)))
            << q << " at " << digits;
    }
}

TEST(Rational, ReciprocalProductIsOne)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational a(mpz_class(static_cast<long>(rng() % 2001) - 1000), mpz_class(1 + static_cast<long>(rng() % 50)));
        const Rational b(mpz_class(1 + static_cast<long>(rng() % 999)), mpz_class(1 + static_cast<long>(rng() % 77)));
        if (a.is_zero()) {
            continue;
        }
        EXPECT_EQ((a / b) * (b / a), Rational(1));
    }
}

TEST(Real, AdoptsSmallerPrecision)
{
    const mop::Real x(Rational(1) / 3, 10);
    const mop::Real y(Rational(1) / 7, 5);
    EXPECT_EQ((x + y).digits(), 5);
}

TEST(RoundSignificant, TiesAwayFromZero)
{
    EXPECT_EQ(mop::round_significant(Rational(25) / 10, 1), Rational(3));
    EXPECT_EQ(mop::round_significant(Rational(-25) / 10, 1), Rational(-3));
}

} // namespace
