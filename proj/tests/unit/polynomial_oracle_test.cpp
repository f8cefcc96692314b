#include <gtest/gtest.h>

#include "mop/errors.hpp"
#include "mop/inverse_problem.hpp"
#include "mop/measures_catalog.hpp"
#include "mop/polynomial_oracle.hpp"
#include "test_support.hpp"

namespace {

using mop::DiscreteMeasure;
using mop::MomentTable;
using mop::MultiIndex;
using mop::Poly;
using mop::Rational;

MomentTable uniform_three()
{
    return mop::moment_table({DiscreteMeasure{{-1, 0, 1}, {1, 1, 1}}}, 8);
}

TEST(MopFromMoments, OriginIsOne)
{
    mop::MopOracle oracle = mop::testing::pair_oracle(1, 8, 2);
    EXPECT_EQ(oracle.polynomial(MultiIndex{0, 0}), Poly::constant(1));
}

TEST(MopFromMoments, UniformThreePoints)
{
    EXPECT_EQ(mop::mop_from_moments(uniform_three(), MultiIndex{2}), Poly({Rational(-2, 3), 0, 1}));
    EXPECT_EQ(mop::mop_from_moments(uniform_three(), MultiIndex{1}), Poly::monomial(1));
}

TEST(MopFromMoments, SingularSystem)
{
    const MomentTable point = mop::moment_table({DiscreteMeasure{{0}, {1}}}, 6);
    try {
        (void)mop::mop_from_moments(point, MultiIndex{2});
        FAIL() << "expected NonNormalIndexError";
    } catch (const mop::NonNormalIndexError& e) {
        EXPECT_EQ(e.index(), MultiIndex{2});
    }
}

TEST(MopFromMoments, OrthogonalityHolds)
{
    mop::MopOracle oracle = mop::testing::pair_oracle(3, 10, 3);
    for (int n = 0; n <= 3; ++n) {
        for (int m = 0; n + m <= 5; ++m) {
            const Poly& p = oracle.polynomial(MultiIndex{n, m});
            EXPECT_TRUE(p.is_monic());
            EXPECT_EQ(p.degree(), n + m);
            for (int j = 0; j < 2; ++j) {
                const int nj = j == 0 ? n : m;
                if (nj == 0) {
                    continue;
                }
                for (const Rational& r : mop::orthogonality_residuals(p, oracle.moments(), j, nj - 1)) {
                    EXPECT_TRUE(r.is_zero()) << "(" << n << "," << m << ") measure " << j;
                }
            }
        }
    }
}

TEST(NNOracle, Origin)
{
    mop::MopOracle oracle = mop::testing::pair_oracle(4, 8, 2);
    const auto& mom = oracle.moments();
    const mop::NNCoefficients c = oracle.nn(MultiIndex{0, 0});
    for (int k = 0; k < 2; ++k) {
        EXPECT_TRUE(c.a[static_cast<std::size_t>(k)].is_zero());
        EXPECT_EQ(c.b[static_cast<std::size_t>(k)], mom.moment(k, 1) / mom.moment(k, 0));
    }
}

TEST(NNOracle, AgreesWithInverseSweep)
{
    const auto [mu1, mu2] = mop::random_pair(5, 10);
    const auto grid = mop::nn_from_marginals_r2(mop::stieltjes_recurrence(mu1, 3, 1),
                                                mop::stieltjes_recurrence(mu2, 3, 2), 2);
    const mop::NNCoefficients c = mop::nn_oracle(mop::moment_table({mu1, mu2}, 8), MultiIndex{1, 0});
    EXPECT_EQ(c.a[0], grid.at(1, 0).a);
    EXPECT_EQ(c.a[1], grid.at(1, 0).b);
    EXPECT_EQ(c.b[0], grid.at(1, 0).c);
    EXPECT_EQ(c.b[1], grid.at(1, 0).d);
}

TEST(MarginalOracle, AgreesWithStieltjes)
{
    const auto [mu1, mu2] = mop::random_pair(6, 9);
    EXPECT_EQ(mop::marginal_oracle(mop::moments(mu2, 20), 8, 2), mop::stieltjes_recurrence(mu2, 8, 2));
}

TEST(EvalChain, FirstStepLinePolynomial)
{
    const mop::StepLineCoeffs s = mop::bessel_stepline(0, 0, 3);
    EXPECT_EQ(mop::eval_chain(s, 0), Poly::constant(1));
    EXPECT_EQ(mop::eval_chain(s, 1), Poly::linear(s.beta.at(0)));
}

TEST(EvalChain, BesselStepLineOrthogonality)
{
    const MomentTable mom = mop::bessel_moments(0, 0, 12);
    EXPECT_EQ(mom.moment(0, 3), Rational(36));
    const mop::StepLineCoeffs s = mop::bessel_stepline(0, 0, 6);
    for (int m = 1; m <= 6; ++m) {
        const Poly p = mop::eval_chain(s, m);
        // p_m = P_{ceil(m/2), floor(m/2)}
        const int n1 = (m + 1) / 2;
        const int n2 = m / 2;
        for (const Rational& r : mop::orthogonality_residuals(p, mom, 0, n1 - 1)) {
            EXPECT_TRUE(r.is_zero()) << "m=" << m;
        }
        if (n2 > 0) {
            for (const Rational& r : mop::orthogonality_residuals(p, mom, 1, n2 - 1)) {
                EXPECT_TRUE(r.is_zero()) << "m=" << m;
            }
        }
        EXPECT_EQ(p, mop::mop_from_moments(mom, MultiIndex{n1, n2})) << "m=" << m;
    }
}

TEST(EvalChain, PathIndependence)
{
    mop::MopOracle oracle = mop::testing::pair_oracle(7, 10, 4);
    const mop::NNGridR grid = mop::nn_oracle_grid(oracle.moments(), 4);
    EXPECT_EQ(mop::eval_chain(grid, std::vector<int>{0, 1}), mop::eval_chain(grid, std::vector<int>{1, 0}));
    const Poly direct = oracle.polynomial(MultiIndex{2, 2});
    EXPECT_EQ(mop::eval_chain(grid, std::vector<int>{0, 0, 1, 1}), direct);
    EXPECT_EQ(mop::eval_chain(grid, std::vector<int>{1, 1, 0, 0}), direct);
    EXPECT_EQ(mop::eval_chain(grid, std::vector<int>{0, 1, 0, 1}), direct);
    EXPECT_EQ(mop::eval_chain(grid, MultiIndex{2, 2}), direct);
}

TEST(EvalChain, MissingCoefficients)
{
    const mop::NNGridR grid = mop::nn_oracle_grid(mop::testing::pair_oracle(8, 8, 2).moments(), 2);
    EXPECT_THROW((void)mop::eval_chain(grid, std::vector<int>{0, 0, 0, 0}), mop::RangeError);
    EXPECT_THROW((void)mop::eval_chain(mop::bessel_stepline(0, 0, 2), 5), mop::RangeError);
}

TEST(OrthogonalityResiduals, Examples)
{
    const MomentTable mom = uniform_three();
    EXPECT_EQ(mop::orthogonality_residuals(Poly::constant(1), mom, 0, 0).front(), Rational(3));
    Poly p2 = mop::mop_from_moments(mom, MultiIndex{2});
    EXPECT_TRUE(mop::orthogonality_residuals(p2, mom, 0, 1)[1].is_zero());
    p2 += Poly::constant(Rational(1, 10));
    EXPECT_FALSE(mop::orthogonality_residuals(p2, mom, 0, 1)[0].is_zero());
}

} // namespace
