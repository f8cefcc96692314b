#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "cli.hpp"
#include "mop/inverse_problem.hpp"
#include "mop/io.hpp"
#include "mop/measures_catalog.hpp"

namespace {

namespace fs = std::filesystem;
using mopcoef::Command;
using mopcoef::JobConfig;
using mop::Rational;

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path()
               / ("mopcoef_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    int run(const JobConfig& config)
    {
        out_.str("");
        err_.str("");
        return mopcoef::run(config, out_, err_);
    }

    std::vector<std::string> lines() const
    {
        std::vector<std::string> out;
        std::istringstream in(out_.str());
        for (std::string line; std::getline(in, line);) {
            out.push_back(line);
        }
        return out;
    }

    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

std::vector<std::string> words(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;) {
        out.push_back(w);
    }
    return out;
}

TEST_F(CliTest, BesselTable)
{
    JobConfig c;
    c.command = Command::bessel;
    c.rows = 10;
    c.digits = 20;
    ASSERT_EQ(run(c), mopcoef::exit_ok) << err_.str();
    const std::vector<std::string> table = lines();
    ASSERT_EQ(table.size(), 12U);
    EXPECT_EQ(words(table[0]), (std::vector<std::string>{"n", "a_n", "b_n"}));
    EXPECT_EQ(words(table[1]), (std::vector<std::string>{"0", "--", "1"}));
    EXPECT_EQ(words(table[2]), (std::vector<std::string>{"1", "1.7320508075688772935", "9.6666666666666666667"}));
    EXPECT_EQ(words(table[11]), (std::vector<std::string>{"10", "240.49992974325090503", "531.57864673346522330"}));
}

TEST_F(CliTest, BesselForwardInverseChain)
{
    constexpr int rows = 6;
    JobConfig b;
    b.command = Command::bessel;
    b.rows = rows;
    b.output_dir = dir_ / "bessel";
    ASSERT_EQ(run(b), mopcoef::exit_ok) << err_.str();

    JobConfig f;
    f.command = Command::forward;
    f.inputs = {dir_ / "bessel" / "bessel_stepline.json"};
    f.mu2_moments = std::pair<Rational, Rational>(1, 2);
    f.output_dir = dir_ / "forward";
    ASSERT_EQ(run(f), mopcoef::exit_ok) << err_.str();
    const mop::MarginalRecurrence mu1 = mop::io::load_marginal(dir_ / "forward" / "marginal_mu1.json");
    EXPECT_EQ(mu1, mop::io::load_marginal(dir_ / "bessel" / "bessel_mu1.json"));

    JobConfig i;
    i.command = Command::inverse;
    i.inputs = {dir_ / "forward" / "marginal_mu1.json", dir_ / "forward" / "marginal_mu2.json"};
    i.output_dir = dir_ / "inverse";
    ASSERT_EQ(run(i), mopcoef::exit_ok) << err_.str();

    EXPECT_EQ(mop::io::load_nn_grid(dir_ / "inverse" / "nn_grid.json"),
              mop::io::load_nn_grid(dir_ / "forward" / "nn_grid.json"));
    const mop::StepLineCoeffs back = mop::io::load_stepline(dir_ / "inverse" / "stepline.json");
    const mop::StepLineCoeffs want = mop::bessel_stepline(0, 0, back.last_index());
    for (int n = 0; n <= back.last_index(); ++n) {
        EXPECT_EQ(back.beta.at(n), want.beta.at(n)) << n;
        EXPECT_EQ(back.gamma.at(n), want.gamma.at(n)) << n;
        EXPECT_EQ(back.delta.at(n), want.delta.at(n)) << n;
    }
}

TEST_F(CliTest, CsvOutputsReingest)
{
    const auto [mu1, mu2] = mop::random_pair(3, 10);
    mop::io::save_marginal(dir_ / "m1.csv", mop::stieltjes_recurrence(mu1, 6, 1));
    mop::io::save_marginal(dir_ / "m2.csv", mop::stieltjes_recurrence(mu2, 6, 2));
    JobConfig i;
    i.command = Command::inverse;
    i.format = mop::io::Format::csv;
    i.inputs = {dir_ / "m1.csv", dir_ / "m2.csv"};
    i.output_dir = dir_ / "inv";
    ASSERT_EQ(run(i), mopcoef::exit_ok) << err_.str();
    EXPECT_TRUE(fs::exists(dir_ / "inv" / "nn_grid.csv"));

    JobConfig f;
    f.command = Command::forward;
    f.format = mop::io::Format::csv;
    f.inputs = {dir_ / "inv" / "stepline.csv"};
    const auto m = mop::moments(mu2, 1);
    f.mu2_moments = std::pair<Rational, Rational>(m[0], m[1]);
    f.max_len = 2;
    f.output_dir = dir_ / "fwd";
    ASSERT_EQ(run(f), mopcoef::exit_ok) << err_.str();
    const mop::MarginalRecurrence back = mop::io::load_marginal(dir_ / "fwd" / "marginal_mu2.csv");
    const mop::MarginalRecurrence want = mop::stieltjes_recurrence(mu2, 3, 2);
    EXPECT_EQ(back.b, want.b);
    EXPECT_EQ(back.a_sq, want.a_sq);
}

TEST_F(CliTest, RoundtripReportsZero)
{
    JobConfig c;
    c.command = Command::roundtrip;
    c.seed = 7;
    ASSERT_EQ(run(c), mopcoef::exit_ok) << err_.str();
    EXPECT_NE(out_.str().find("discrepancy: 0\n"), std::string::npos);
}

TEST_F(CliTest, IdenticalMarginalsAreSingular)
{
    const auto [mu1, mu2] = mop::random_pair(2, 8);
    mop::io::save_marginal(dir_ / "m.json", mop::stieltjes_recurrence(mu1, 5, 1));
    JobConfig c;
    c.command = Command::inverse;
    c.inputs = {dir_ / "m.json", dir_ / "m.json"};
    c.output_dir = dir_;
    EXPECT_EQ(run(c), mopcoef::exit_normality);
    EXPECT_NE(err_.str().find("(0,0)"), std::string::npos) << err_.str();
}

TEST_F(CliTest, MalformedCsvCitesLine)
{
    std::ofstream(dir_ / "bad.csv") << "n,beta,gamma,delta\n0,1,0,0\n1,7,three,0\n";
    JobConfig c;
    c.command = Command::forward;
    c.inputs = {dir_ / "bad.csv"};
    c.c00 = Rational(1);
    c.output_dir = dir_;
    EXPECT_EQ(run(c), mopcoef::exit_parse);
    EXPECT_NE(err_.str().find("line 3"), std::string::npos) << err_.str();
}

TEST_F(CliTest, ForwardNeedsExactlyOneFreeParameter)
{
    mop::io::save_stepline(dir_ / "s.json", mop::bessel_stepline(0, 0, 5));
    JobConfig c;
    c.command = Command::forward;
    c.inputs = {dir_ / "s.json"};
    c.output_dir = dir_;
    EXPECT_EQ(run(c), mopcoef::exit_parse);
    c.c00 = Rational(1);
    c.mu2_moments = std::pair<Rational, Rational>(1, 2);
    EXPECT_EQ(run(c), mopcoef::exit_parse);
    c.mu2_moments.reset();
    EXPECT_EQ(run(c), mopcoef::exit_ok) << err_.str();
}

TEST_F(CliTest, ForwardBeyondDataIsRangeError)
{
    mop::io::save_stepline(dir_ / "s.json", mop::bessel_stepline(0, 0, 5));
    JobConfig c;
    c.command = Command::forward;
    c.inputs = {dir_ / "s.json"};
    c.c00 = Rational(1);
    c.max_len = 7;
    c.output_dir = dir_;
    EXPECT_EQ(run(c), mopcoef::exit_range);
}

TEST_F(CliTest, NormalityFailureIsReported)
{
    // delta_3 chosen so that the first e1 shift hits a zero denominator
    const mop::StepLineCoeffs base = mop::bessel_stepline(0, 0, 9);
    std::vector<Rational> beta;
    std::vector<Rational> gamma;
    std::vector<Rational> delta;
    for (int n = 0; n <= 9; ++n) {
        beta.push_back(base.beta.at(n));
        gamma.push_back(base.gamma.at(n));
        delta.push_back(base.delta.at(n));
    }
    delta[3] = -delta[2] * gamma[3] / gamma[1];
    mop::io::save_stepline(dir_ / "s.json", mop::StepLineCoeffs::level_zero(beta, gamma, delta));
    JobConfig c;
    c.command = Command::forward;
    c.inputs = {dir_ / "s.json"};
    c.c00 = Rational(1);
    c.output_dir = dir_;
    EXPECT_EQ(run(c), mopcoef::exit_normality);
    EXPECT_NE(err_.str().find("index 3"), std::string::npos) << err_.str();
}

TEST_F(CliTest, VerifyReportIsOrdered)
{
    JobConfig c;
    c.command = Command::verify;
    c.r = 3;
    c.seeds = 4;
    c.seed = 10;
    c.support = 8;
    c.max_len = 3;
    c.threads = 3;
    ASSERT_EQ(run(c), mopcoef::exit_ok) << out_.str() << err_.str();
    const std::vector<std::string> report = lines();
    ASSERT_EQ(report.size(), 5U);
    for (int k = 0; k < 4; ++k) {
        EXPECT_NE(report[static_cast<std::size_t>(k)].find("seed " + std::to_string(10 + k) + ":"), std::string::npos);
    }
}

TEST(CliConfig, PrecisionFromEnvironment)
{
    ::setenv("MOPCOEF_DIGITS", "12", 1);
    EXPECT_EQ(mopcoef::default_precision(), 12);
    ::unsetenv("MOPCOEF_DIGITS");
    EXPECT_EQ(mopcoef::default_precision(), mop::default_digits);
}

TEST(CliConfig, RejectsZeroPrecision)
{
    JobConfig c;
    c.digits = 0;
    EXPECT_THROW(mopcoef::validate(c), std::invalid_argument);
}

} // namespace
