#include <gtest/gtest.h>

#include "mop/errors.hpp"
#include "mop/measures_catalog.hpp"

namespace {

using mop::DiscreteMeasure;
using mop::Rational;

TEST(BesselStepline, LowIndexValues)
{
    const mop::StepLineCoeffs s = mop::bessel_stepline(0, 0, 3);
    EXPECT_EQ(s.beta.at(0), Rational(1));
    EXPECT_EQ(s.beta.at(1), Rational(7));
    EXPECT_EQ(s.gamma.at(1), Rational(3));
    EXPECT_EQ(s.delta.at(2), Rational(8));
    EXPECT_EQ(s.delta.at(3), Rational(216));
    EXPECT_TRUE(s.gamma.at(0).is_zero());
    EXPECT_TRUE(s.delta.at(0).is_zero());
    EXPECT_TRUE(s.delta.at(1).is_zero());
}

TEST(BesselStepline, RationalParameters)
{
    const Rational alpha(1, 2);
    const Rational nu(1, 3);
    const mop::StepLineCoeffs s = mop::bessel_stepline(alpha, nu, 2);
    EXPECT_EQ(s.beta.at(0), (alpha + 1) * (alpha + 2 * nu) - (alpha + 1) * (nu - 1));
    EXPECT_EQ(s.gamma.at(2), 2 * (2 + alpha) * (2 + alpha + nu) * (6 + 2 * alpha + nu));
    EXPECT_THROW(mop::bessel_stepline(0, 0, -1), mop::RangeError);
}

TEST(BesselMoments, Factorials)
{
    const mop::MomentTable m = mop::bessel_moments(0, 0, 4);
    EXPECT_EQ(m.moment(0, 0), Rational(1));
    EXPECT_EQ(m.moment(0, 4), Rational(576));
    EXPECT_EQ(m.moment(1, 2), Rational(12));
    EXPECT_EQ(m.moment(1, 0) / m.moment(0, 0), Rational(1));
}

TEST(Moments, Examples)
{
    EXPECT_EQ(mop::moments(DiscreteMeasure{{0}, {1}}, 3), (std::vector<Rational>{1, 0, 0, 0}));
    EXPECT_EQ(mop::moments(DiscreteMeasure{{-1, 1}, {Rational(1, 2), Rational(1, 2)}}, 4),
              (std::vector<Rational>{1, 0, 1, 0, 1}));
    const std::vector<Rational> m = mop::moments(DiscreteMeasure{{1, 2, 3}, {1, 1, 1}}, 2);
    EXPECT_EQ(m[0], Rational(3));
    EXPECT_EQ(m[1], Rational(6));
    EXPECT_EQ(m[2], Rational(14));
}

TEST(DiscreteMeasure, Validation)
{
    EXPECT_THROW((DiscreteMeasure{{0, 0}, {1, 1}}).validate(), mop::DomainError);
    EXPECT_THROW((DiscreteMeasure{{0, 1}, {1, 0}}).validate(), mop::DomainError);
    EXPECT_THROW((DiscreteMeasure{{0, 1}, {1}}).validate(), mop::DomainError);
    EXPECT_NO_THROW((DiscreteMeasure{{0, 1}, {1, 2}}).validate());
}

TEST(Stieltjes, UniformThreePoints)
{
    const mop::MarginalRecurrence r = mop::stieltjes_recurrence(DiscreteMeasure{{-1, 0, 1}, {1, 1, 1}}, 3);
    EXPECT_EQ(r.b, (std::vector<Rational>{0, 0, 0}));
    EXPECT_EQ(r.a_sq, (std::vector<Rational>{0, Rational(2, 3), Rational(1, 3)}));
    EXPECT_THROW(mop::stieltjes_recurrence(DiscreteMeasure{{0, 1}, {1, 1}}, 3), mop::RangeError);
}

TEST(RandomPair, Deterministic)
{
    EXPECT_EQ(mop::random_pair(1, 12), mop::random_pair(1, 12));
    EXPECT_NE(mop::random_pair(1, 12), mop::random_pair(2, 12));
}

TEST(RandomPair, DistinctFirstRatios)
{
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto [a, b] = mop::random_pair(seed, 6);
        a.validate();
        b.validate();
        const std::vector<Rational> ma = mop::moments(a, 1);
        const std::vector<Rational> mb = mop::moments(b, 1);
        EXPECT_NE(ma[1] / ma[0], mb[1] / mb[0]) << "seed " << seed;
    }
}

TEST(RandomSystem, Shape)
{
    const std::vector<DiscreteMeasure> sys = mop::random_system(3, 4, 7, 2);
    ASSERT_EQ(sys.size(), 4U);
    for (const DiscreteMeasure& m : sys) {
        EXPECT_EQ(m.size(), 7);
        for (const Rational& x : m.support) {
            EXPECT_LE(mop::abs(x), Rational(2));
        }
    }
    EXPECT_THROW(mop::random_system(1, 0, 4), mop::DomainError);
}

TEST(ConvexCombination, MomentsAreLinear)
{
    const auto [a, b] = mop::random_pair(9, 8);
    const Rational lambda(1, 3);
    const DiscreteMeasure mix = mop::convex_combination(a, b, lambda);
    mix.validate();
    const std::vector<Rational> ma = mop::moments(a, 10);
    const std::vector<Rational> mb = mop::moments(b, 10);
    const std::vector<Rational> mm = mop::moments(mix, 10);
    for (std::size_t k = 0; k < mm.size(); ++k) {
        EXPECT_EQ(mm[k], lambda * ma[k] + (1 - lambda) * mb[k]) << "k=" << k;
    }
    // the merged support is sorted, so compare through moments
    const DiscreteMeasure only_a = mop::convex_combination(a, b, 1);
    EXPECT_EQ(only_a.size(), a.size());
    EXPECT_EQ(mop::moments(only_a, 10), ma);
    EXPECT_THROW(mop::convex_combination(a, b, Rational(3, 2)), mop::DomainError);
}

} // namespace
