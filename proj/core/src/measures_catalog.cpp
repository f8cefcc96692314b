#include "mop/measures_catalog.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "mop/errors.hpp"

namespace mop {

void DiscreteMeasure::validate() const
{
    if (support.empty() || support.size() != weights.size()) {
        throw DomainError("discrete measure: support and weights must be nonempty and of equal length");
    }
    std::set<Rational> seen;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (!seen.insert(support[i]).second) {
            throw DomainError("discrete measure: repeated support point " + support[i].to_string());
        }
        if (weights[i].sign() <= 0) {
            throw DomainError("discrete measure: weight " + std::to_string(i) + " is not positive");
        }
    }
}

Rational DiscreteMeasure::mass() const
{
    Rational total = 0;
    for (const Rational& w : weights) {
        total += w;
    }
    return total;
}

StepLineCoeffs bessel_stepline(const Rational& alpha, const Rational& nu, int max_index)
{
    if (max_index < 0) {
        throw RangeError("bessel_stepline: negative index bound");
    }
    const auto size = static_cast<std::size_t>(max_index + 1);
    std::vector<Rational> beta(size);
    std::vector<Rational> gamma(size);
    std::vector<Rational> delta(size);
    for (int i = 0; i <= max_index; ++i) {
        const Rational n(i);
        const auto s = static_cast<std::size_t>(i);
        beta[s] = (n + alpha + 1) * (3 * n + alpha + 2 * nu) - (alpha + 1) * (nu - 1);
        gamma[s] = n * (n + alpha) * (n + alpha + nu) * (3 * n + 2 * alpha + nu);
        delta[s] = n * (n - 1) * (n + alpha) * (n + alpha - 1) * (n + alpha + nu) * (n + alpha + nu - 1);
    }
    return StepLineCoeffs::level_zero(beta, gamma, delta);
}

namespace {

mpz_class factorial(int k)
{
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

} // namespace

MomentTable bessel_moments(int alpha, int nu, int max_degree)
{
    if (alpha < 0 || nu < 0 || max_degree < 0) {
        throw DomainError("bessel_moments: integer alpha, nu >= 0 and max_degree >= 0 required");
    }
    std::vector<Rational> first;
    std::vector<Rational> second;
    for (int k = 0; k <= max_degree; ++k) {
        first.emplace_back(mpz_class(factorial(k + alpha + nu) * factorial(k + alpha)));
        second.emplace_back(mpz_class(factorial(k + alpha + nu + 1) * factorial(k + alpha)));
    }
    return MomentTable({std::move(first), std::move(second)});
}

std::vector<Rational> moments(const DiscreteMeasure& measure, int max_degree)
{
    std::vector<Rational> out(static_cast<std::size_t>(std::max(max_degree + 1, 0)));
    for (std::size_t i = 0; i < measure.support.size(); ++i) {
        Rational term = measure.weights[i];
        for (Rational& m : out) {
            m += term;
            term *= measure.support[i];
        }
    }
    return out;
}

MomentTable moment_table(const std::vector<DiscreteMeasure>& measures, int max_degree)
{
    std::vector<std::vector<Rational>> per;
    per.reserve(measures.size());
    for (const DiscreteMeasure& m : measures) {
        per.push_back(moments(m, max_degree));
    }
    return MomentTable(std::move(per));
}

MarginalRecurrence stieltjes_recurrence(const DiscreteMeasure& measure, int count, int measure_id)
{
    measure.validate();
    if (count > measure.size()) {
        throw RangeError("stieltjes_recurrence: " + std::to_string(count) + " coefficients need at least "
                         + std::to_string(count) + " support points, measure has "
                         + std::to_string(measure.size()));
    }
    const std::size_t size = measure.support.size();
    std::vector<Rational> prev(size);
    std::vector<Rational> cur(size, Rational(1));
    Rational prev_norm = 0;

    MarginalRecurrence out;
    out.measure_id = measure_id;
    for (int n = 0; n < count; ++n) {
        Rational norm = 0;
        Rational moment = 0;
        for (std::size_t i = 0; i < size; ++i) {
            const Rational wp2 = measure.weights[i] * cur[i] * cur[i];
            norm += wp2;
            moment += wp2 * measure.support[i];
        }
        const Rational b = moment / norm;
        const Rational a_sq = n == 0 ? Rational(0) : norm / prev_norm;
        out.b.push_back(b);
        out.a_sq.push_back(a_sq);
        for (std::size_t i = 0; i < size; ++i) {
            Rational next = (measure.support[i] - b) * cur[i] - a_sq * prev[i];
            prev[i] = std::move(cur[i]);
            cur[i] = std::move(next);
        }
        prev_norm = norm;
    }
    return out;
}

namespace {

/// Uniform integer in [lo, hi] from raw engine output, so sequences agree across standard libraries.
long draw(std::mt19937_64& rng, long lo, long hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
}

DiscreteMeasure random_measure(std::mt19937_64& rng, int size, int spread)
{
    constexpr long max_den = 5;
    DiscreteMeasure m;
    std::set<Rational> seen;
    while (static_cast<int>(m.support.size()) < size) {
        const long den = draw(rng, 1, max_den);
        const Rational x(mpz_class(draw(rng, -spread * den, spread * den)), mpz_class(den));
        if (seen.insert(x).second) {
            m.support.push_back(x);
        }
    }
    for (int i = 0; i < size; ++i) {
        m.weights.emplace_back(mpz_class(draw(rng, 1, 9)), mpz_class(draw(rng, 1, 4)));
    }
    return m;
}

Rational first_ratio(const DiscreteMeasure& m)
{
    Rational m1 = 0;
    for (std::size_t i = 0; i < m.support.size(); ++i) {
        m1 += m.weights[i] * m.support[i];
    }
    return m1 / m.mass();
}

} // namespace

std::vector<DiscreteMeasure> random_system(std::uint64_t seed, int r, int size, int spread)
{
    if (r < 1 || size < 2 || spread < 1) {
        throw DomainError("random_system: r >= 1, size >= 2 and spread >= 1 required");
    }
    std::mt19937_64 rng(seed);
    std::vector<DiscreteMeasure> out;
    std::set<Rational> b0;
    while (static_cast<int>(out.size()) < r) {
        DiscreteMeasure m = random_measure(rng, size, spread);
        if (b0.insert(first_ratio(m)).second) {
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::pair<DiscreteMeasure, DiscreteMeasure> random_pair(std::uint64_t seed, int size, int spread)
{
    std::vector<DiscreteMeasure> two = random_system(seed, 2, size, spread);
    return {std::move(two[0]), std::move(two[1])};
}

DiscreteMeasure convex_combination(const DiscreteMeasure& a, const DiscreteMeasure& b, const Rational& lambda)
{
    if (lambda.sign() < 0 || lambda > Rational(1)) {
        throw DomainError("convex_combination: lambda must lie in [0, 1]");
    }
    std::map<Rational, Rational> merged;
    const Rational mu = Rational(1) - lambda;
    for (std::size_t i = 0; i < a.support.size(); ++i) {
        merged[a.support[i]] += lambda * a.weights[i];
    }
    for (std::size_t i = 0; i < b.support.size(); ++i) {
        merged[b.support[i]] += mu * b.weights[i];
    }
    DiscreteMeasure out;
    for (const auto& [x, w] : merged) {
        if (!w.is_zero()) {
            out.support.push_back(x);
            out.weights.push_back(w);
        }
    }
    return out;
}

} // namespace mop
