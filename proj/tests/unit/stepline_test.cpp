#include <gtest/gtest.h>

#include "mop/errors.hpp"
#include "mop/measures_catalog.hpp"
#include "mop/stepline.hpp"
#include "test_support.hpp"

namespace {

using mop::Axis;
using mop::Rational;
using mop::ShiftFamily;
using mop::ShiftVariant;
using mop::StepLineCoeffs;

constexpr int depth = 5;

StepLineCoeffs bessel00() { return mop::bessel_stepline(0, 0, 2 * depth + 1); }

TEST(ShiftE1, BesselFirstLevel)
{
    const mop::ShiftResult s = mop::shift_e1(bessel00(), depth);
    EXPECT_EQ(s.next.level, 1);
    EXPECT_EQ(s.next.first_index(), 1);
    EXPECT_EQ(s.c.at(0), Rational(-8) / 3);
    EXPECT_EQ(s.next.beta.at(1), Rational(29) / 3);
    EXPECT_EQ(s.next.gamma.at(2), Rational(656) / 9);
    EXPECT_EQ(mop::sqrt_real(s.next.gamma.at(2), 20).to_string(), "8.5374989832437982487");
}

TEST(ShiftE1, InitialConditions)
{
    const ShiftFamily f = mop::build_e1_family(bessel00(), depth);
    for (int j = 1; j <= depth; ++j) {
        const StepLineCoeffs& s = f.level(j);
        EXPECT_TRUE(s.gamma.at(j).is_zero());
        EXPECT_TRUE(s.delta.at(j).is_zero());
        EXPECT_TRUE(s.delta.at(j + 1).is_zero());
    }
}

TEST(ShiftE1, GammaPassThrough)
{
    const ShiftFamily f = mop::build_e1_family(mop::testing::random_stepline(3, 2 * depth + 1), depth);
    for (int j = 1; j <= depth; ++j) {
        const StepLineCoeffs& cur = f.level(j);
        const StepLineCoeffs& prev = f.level(j - 1);
        for (int n = 1; 2 * n + j <= cur.last_index(); ++n) {
            EXPECT_EQ(cur.gamma.at(2 * n + j), prev.gamma.at(2 * n + j)) << "j=" << j << " n=" << n;
        }
    }
}

TEST(ShiftE1, VanishingGammaIsInitError)
{
    StepLineCoeffs s = bessel00();
    s.gamma.set(1, 0);
    EXPECT_THROW(mop::shift_e1(s, depth), mop::InitError);
}

TEST(ShiftE2, FirstLevelBeta)
{
    const Rational c00(5, 2);
    const StepLineCoeffs level0 = bessel00();
    const mop::ShiftResult s = mop::shift_e2(level0, c00, depth);
    EXPECT_EQ(s.c.at(0), c00);
    EXPECT_EQ(s.next.beta.at(0), level0.beta.at(0) + c00);
}

TEST(ShiftE2, GammaPassThrough)
{
    const ShiftFamily f = mop::build_e2_family(mop::testing::random_stepline(5, 2 * depth + 1), Rational(1, 3), depth);
    for (int k = 0; k < depth; ++k) {
        const StepLineCoeffs& cur = f.level(k + 1);
        const StepLineCoeffs& prev = f.level(k);
        for (int n = 1; 2 * n + k <= cur.last_index(); ++n) {
            EXPECT_EQ(cur.gamma.at(2 * n + k), prev.gamma.at(2 * n + k)) << "k=" << k << " n=" << n;
        }
    }
}

TEST(ShiftE2, SeedRequiredAtLevelZero)
{
    EXPECT_THROW(mop::shift_e2(bessel00(), std::nullopt, depth), mop::Error);
}

TEST(ShiftE2, InconsistentSeedIsRejected)
{
    const mop::ShiftResult first = mop::shift_e2(bessel00(), Rational(2), depth);
    const Rational forced = first.next.delta.at(2) / first.next.gamma.at(1);
    const mop::ShiftResult ok = mop::shift_e2(first.next, forced, depth);
    EXPECT_EQ(ok.c.at(0), forced);
    EXPECT_EQ(mop::shift_e2(first.next, std::nullopt, depth).c.at(0), forced);
    EXPECT_THROW(mop::shift_e2(first.next, forced + 1, depth), mop::SeedMismatch);
}

void expect_same_level(const StepLineCoeffs& got, const StepLineCoeffs& want)
{
    for (int i = got.first_index(); i <= got.last_index(); ++i) {
        EXPECT_EQ(got.beta.at(i), want.beta.at(i)) << "level " << got.level << " beta " << i;
        EXPECT_EQ(got.gamma.at(i), want.gamma.at(i)) << "level " << got.level << " gamma " << i;
        EXPECT_EQ(got.delta.at(i), want.delta.at(i)) << "level " << got.level << " delta " << i;
    }
}

TEST(ShiftE1, MatchesOracleLevels)
{
    constexpr int n = 4;
    mop::MopOracle oracle = mop::testing::pair_oracle(1, 12, n);
    const ShiftFamily f = mop::build_e1_family(mop::testing::oracle_stepline(oracle, 2 * n + 1), n);
    for (int j = 1; j <= n; ++j) {
        const StepLineCoeffs& got = f.level(j);
        expect_same_level(got, mop::testing::oracle_shift_level(oracle, Axis::e1, j, got.last_index()));
        const mop::CSequence& c = f.c(j);
        for (int m = 0; m <= n - j; ++m) {
            const mop::Poly lhs = oracle.polynomial(mop::MultiIndex{m + j + 1, m})
                                  - oracle.polynomial(mop::MultiIndex{m + j, m + 1});
            EXPECT_EQ(lhs, c.at(m) * oracle.polynomial(mop::MultiIndex{m + j, m})) << "j=" << j << " m=" << m;
        }
    }
}

TEST(ShiftE2, MatchesOracleLevels)
{
    constexpr int n = 4;
    mop::MopOracle oracle = mop::testing::pair_oracle(2, 12, n);
    const auto& m = oracle.moments();
    const StepLineCoeffs level0 = mop::testing::oracle_stepline(oracle, 2 * n + 1);
    const Rational c00 = mop::seed_c00(m.moment(1, 0), m.moment(1, 1), level0.beta.at(0));
    const ShiftFamily f = mop::build_e2_family(level0, c00, n);
    for (int k = 1; k <= n + 1; ++k) {
        const StepLineCoeffs& got = f.level(k);
        expect_same_level(got, mop::testing::oracle_shift_level(oracle, Axis::e2, k, got.last_index()));
    }
    for (int k = 0; k <= n; ++k) {
        const mop::CSequence& c = f.c(k);
        for (int i = 0; i <= n - k; ++i) {
            const mop::Poly lhs = oracle.polynomial(mop::MultiIndex{i + 1, i + k})
                                  - oracle.polynomial(mop::MultiIndex{i, i + k + 1});
            EXPECT_EQ(lhs, c.at(i) * oracle.polynomial(mop::MultiIndex{i, i + k})) << "k=" << k << " i=" << i;
        }
    }
}

TEST(SeedC00, Examples)
{
    EXPECT_EQ(mop::seed_c00(1, 1, 1), Rational(0));
    EXPECT_EQ(mop::seed_c00(2, 6, 1), Rational(2));
    const Rational beta0(7, 3);
    EXPECT_EQ(mop::seed_c00(3, 3, beta0), Rational(1) - beta0);
    EXPECT_THROW(mop::seed_c00(0, 1, 1), mop::DomainError);
}

TEST(RiccatiClosedForm, EmptySumAtZero)
{
    const StepLineCoeffs level0 = bessel00();
    EXPECT_EQ(mop::riccati_closed_form(Axis::e1, 1, level0, Rational(7, 5), 0), Rational(7, 5));
    EXPECT_EQ(mop::riccati_closed_form(Axis::e2, 0, level0, Rational(-2), 0), Rational(-2));
}

TEST(RiccatiClosedForm, BesselFirstShift)
{
    const mop::ShiftResult s = mop::shift_e1(bessel00(), depth);
    const Rational d1 = mop::riccati_closed_form(Axis::e1, 1, bessel00(), Rational(1) / s.c.at(0), 1);
    EXPECT_EQ(d1, Rational(1) / s.c.at(1));
}

TEST(RiccatiClosedForm, AgreesWithRecursionOnRandomData)
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const StepLineCoeffs level0 = mop::testing::random_stepline(seed, 2 * depth + 1);
        const ShiftFamily e1 = mop::build_e1_family(level0, depth);
        const ShiftFamily e2 = mop::build_e2_family(level0, Rational(1, 2), depth);
        for (int j = 1; j <= depth; ++j) {
            const mop::CSequence& c = e1.c(j);
            for (int n = 0; n <= depth - j; ++n) {
                EXPECT_EQ(mop::riccati_closed_form(Axis::e1, j, e1.level(j - 1), Rational(1) / c.at(0), n),
                          Rational(1) / c.at(n))
                    << "seed " << seed << " j=" << j << " n=" << n;
            }
        }
        for (int k = 0; k <= depth; ++k) {
            const mop::CSequence& c = e2.c(k);
            for (int n = 0; n <= depth - k; ++n) {
                EXPECT_EQ(mop::riccati_closed_form(Axis::e2, k, e2.level(k), Rational(1) / c.at(0), n),
                          Rational(1) / c.at(n))
                    << "seed " << seed << " k=" << k << " n=" << n;
            }
        }
    }
}

TEST(ShiftFamily, VariantsAgree)
{
    const StepLineCoeffs level0 = mop::testing::random_stepline(17, 2 * depth + 1);
    const ShiftFamily a = mop::build_e1_family(level0, depth, ShiftVariant::remark);
    const ShiftFamily b = mop::build_e1_family(level0, depth, ShiftVariant::original);
    for (int j = 0; j <= depth; ++j) {
        for (int i = a.level(j).first_index(); i <= a.level(j).last_index(); ++i) {
            EXPECT_EQ(a.level(j).beta.at(i), b.level(j).beta.at(i));
            EXPECT_EQ(a.level(j).gamma.at(i), b.level(j).gamma.at(i));
            EXPECT_EQ(a.level(j).delta.at(i), b.level(j).delta.at(i));
        }
    }
}

TEST(ShiftFamily, LevelRanges)
{
    const ShiftFamily e1 = mop::build_e1_family(bessel00(), depth);
    EXPECT_EQ(e1.levels(), depth + 1);
    for (int j = 1; j <= depth; ++j) {
        EXPECT_EQ(e1.level(j).first_index(), j);
        EXPECT_EQ(e1.level(j).last_index(), 2 * depth - j + 1);
    }
    const ShiftFamily e2 = mop::build_e2_family(bessel00(), Rational(1), depth);
    EXPECT_EQ(e2.levels(), depth + 2);
}

TEST(StepLineCoeffs, LevelZeroRejectsNonzeroBoundary)
{
    EXPECT_THROW(StepLineCoeffs::level_zero({1, 2}, {1, 3}, {0, 0}), mop::Error);
    EXPECT_THROW(StepLineCoeffs::level_zero({1, 2}, {0, 3}, {0, 1}), mop::Error);
}

TEST(IndexedSeq, RangeChecks)
{
    mop::IndexedSeq s("beta", 2, 4);
    s.set(3, 5);
    EXPECT_EQ(s.at(3), Rational(5));
    EXPECT_FALSE(s.has(2));
    EXPECT_THROW((void)s.at(2), mop::RangeError);
    EXPECT_THROW((void)s.at(5), mop::RangeError);
    EXPECT_THROW(s.set(1, 0), mop::RangeError);
}

} // namespace
