#include "mop/nearest_neighbor.hpp"

#include <string>

#include "mop/errors.hpp"

namespace mop {

NNGrid::NNGrid(int max_len)
    : max_len_(max_len)
    , entries_(max_len >= 0 ? static_cast<std::size_t>((max_len + 1) * (max_len + 2) / 2) : 0)
{
    if (max_len < 0) {
        throw RangeError("NNGrid: negative max_len");
    }
}

std::size_t NNGrid::offset(int n, int m) const
{
    if (!contains(n, m)) {
        throw RangeError("NNGrid: (" + std::to_string(n) + "," + std::to_string(m) + ") outside n + m <= "
                         + std::to_string(max_len_));
    }
    const int diag = n + m;
    return static_cast<std::size_t>(diag * (diag + 1) / 2 + m);
}

const NNEntry& NNGrid::at(int n, int m) const
{
    return entries_[offset(n, m)];
}

NNEntry& NNGrid::at(int n, int m)
{
    return entries_[offset(n, m)];
}

bool MarginalRecurrence::is_positive() const
{
    for (std::size_t n = 1; n < a_sq.size(); ++n) {
        if (a_sq[n].sign() <= 0) {
            return false;
        }
    }
    return true;
}

FreeParameter::FreeParameter(bool from_moments, Rational first, Rational second)
    : from_moments_(from_moments)
    , first_(std::move(first))
    , second_(std::move(second))
{
}

FreeParameter FreeParameter::raw_seed(Rational c00)
{
    return FreeParameter(false, std::move(c00), Rational(0));
}

FreeParameter FreeParameter::exact_mu2(Rational m0, Rational m1)
{
    if (m0.is_zero()) {
        throw DomainError("exact_mu2: mu_2 has zero total mass");
    }
    return FreeParameter(true, std::move(m0), std::move(m1));
}

Rational FreeParameter::resolve(const Rational& beta0) const
{
    return from_moments_ ? seed_c00(first_, second_, beta0) : first_;
}

namespace {

const Rational& divisor(const CSequence& c, int index, int n, int m)
{
    const Rational& value = c.at(index);
    if (value.is_zero()) {
        const std::string sup = c.axis == Axis::e1 ? "^(" + std::to_string(c.level) + ",0)"
                                                   : "^(0," + std::to_string(c.level) + ")";
        throw NormalityError(c.axis, c.level, index, n + m,
                             "c_" + std::to_string(index) + sup + " (grid entry (" + std::to_string(n) + ","
                                 + std::to_string(m) + "))");
    }
    return value;
}

} // namespace

NNGrid nn_from_families(const ShiftFamily& e1, const ShiftFamily& e2, int max_len)
{
    if (e1.axis() != Axis::e1 || e2.axis() != Axis::e2) {
        throw std::invalid_argument("nn_from_families: families passed on the wrong axes");
    }
    NNGrid grid(max_len);
    for (int len = 0; len <= max_len; ++len) {
        for (int m = 0; m <= len; ++m) {
            const int n = len - m;
            NNEntry& entry = grid.at(n, m);
            if (m < n) {
                const int j = n - m;
                const StepLineCoeffs& level = e1.level(j);
                const StepLineCoeffs& below = e1.level(j - 1);
                const CSequence& c = e1.c(j);
                const Rational& c_m = divisor(c, m, n, m);
                entry.c = level.beta.at(2 * m + j);
                entry.d = entry.c + c_m;
                entry.a = -below.delta.at(2 * m + j + 1) / c_m;
                entry.b = m == 0 ? Rational(0) : level.gamma.at(2 * m + j) - entry.a;
            } else {
                const int k = m - n;
                const StepLineCoeffs& level = e2.level(k);
                const CSequence& c = e2.c(k);
                entry.c = level.beta.at(2 * n + k);
                entry.d = entry.c + c.at(n);
                entry.a = n == 0 ? Rational(0) : -level.delta.at(2 * n + k) / divisor(c, n - 1, n, m);
                entry.b = level.gamma.at(2 * n + k) - entry.a;
            }
        }
    }
    return grid;
}

NNGrid nn_from_shifts(const StepLineCoeffs& level0, const Rational& c00_seed, int max_len)
{
    const ShiftFamily e1 = build_e1_family(level0, max_len);
    const ShiftFamily e2 = build_e2_family(level0, c00_seed, max_len);
    return nn_from_families(e1, e2, max_len);
}

NNGrid nn_from_shifts(const StepLineCoeffs& level0, const FreeParameter& seed, int max_len)
{
    return nn_from_shifts(level0, seed.resolve(level0.beta.at(0)), max_len);
}

MarginalRecurrence marginal_mu1(const ShiftFamily& e1, int count)
{
    if (e1.axis() != Axis::e1) {
        throw std::invalid_argument("marginal_mu1: expected an e1 shift family");
    }
    MarginalRecurrence out;
    out.measure_id = 1;
    for (int j = 0; j < count; ++j) {
        out.b.push_back(e1.level(j).beta.at(j));
        out.a_sq.push_back(j == 0 ? Rational(0) : e1.level(j - 1).gamma.at(j));
    }
    return out;
}

MarginalRecurrence marginal_mu2(const ShiftFamily& e2, int count)
{
    if (e2.axis() != Axis::e2) {
        throw std::invalid_argument("marginal_mu2: expected an e2 shift family");
    }
    MarginalRecurrence out;
    out.measure_id = 2;
    for (int k = 0; k < count; ++k) {
        const StepLineCoeffs& level = e2.level(k);
        out.b.push_back(level.beta.at(k) + e2.c(k).at(0));
        out.a_sq.push_back(level.gamma.at(k));
    }
    return out;
}

ForwardResult forward_pipeline(const StepLineCoeffs& level0, const FreeParameter& seed, int depth,
                               ShiftVariant variant)
{
    const Rational c00 = seed.resolve(level0.beta.at(0));
    const ShiftFamily e1 = build_e1_family(level0, depth, variant);
    const ShiftFamily e2 = build_e2_family(level0, c00, depth, variant);
    return ForwardResult{nn_from_families(e1, e2, depth), marginal_mu1(e1, depth + 1), marginal_mu2(e2, depth + 1)};
}

} // namespace mop
