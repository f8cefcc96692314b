#include "mop/stepline.hpp"

#include <stdexcept>
#include <string>

#include "mop/errors.hpp"

namespace mop {

namespace {

std::string superscript(Axis axis, int level)
{
    return axis == Axis::e1 ? "^(" + std::to_string(level) + ",0)" : "^(0," + std::to_string(level) + ")";
}

std::string sub(const std::string& name, int index, Axis axis, int level)
{
    return name + "_" + std::to_string(index) + superscript(axis, level);
}

StepLineCoeffs make_level(Axis axis, int level, int lo, int hi)
{
    StepLineCoeffs out;
    out.axis = axis;
    out.level = level;
    out.beta = IndexedSeq("beta" + superscript(axis, level), lo, hi);
    out.gamma = IndexedSeq("gamma" + superscript(axis, level), lo, hi);
    out.delta = IndexedSeq("delta" + superscript(axis, level), lo, hi);
    return out;
}

void require_level(const StepLineCoeffs& prev, Axis axis, const char* op)
{
    if (prev.level != 0 && prev.axis != axis) {
        throw std::invalid_argument(std::string(op) + ": input level belongs to axis " + to_string(prev.axis));
    }
}

} // namespace

StepLineCoeffs StepLineCoeffs::level_zero(const std::vector<Rational>& beta, const std::vector<Rational>& gamma,
                                          const std::vector<Rational>& delta)
{
    if (beta.size() != gamma.size() || beta.size() != delta.size() || beta.empty()) {
        throw std::invalid_argument("step-line columns must be non-empty and of equal length");
    }
    const int hi = static_cast<int>(beta.size()) - 1;
    StepLineCoeffs out = make_level(Axis::e1, 0, 0, hi);
    for (int n = 0; n <= hi; ++n) {
        const auto i = static_cast<std::size_t>(n);
        if ((n == 0 && !gamma[i].is_zero()) || (n <= 1 && !delta[i].is_zero())) {
            throw DomainError("step-line gamma_0, delta_0, delta_1 must be zero (coefficients of p_{-1}, p_{-2})");
        }
        out.beta.set(n, beta[i]);
        out.gamma.set(n, gamma[i]);
        out.delta.set(n, delta[i]);
    }
    return out;
}

int StepLineCoeffs::last_index() const
{
    return std::min(beta.hi(), std::min(gamma.hi(), delta.hi()));
}

ShiftResult shift_e1(const StepLineCoeffs& prev, int depth, ShiftVariant variant)
{
    require_level(prev, Axis::e1, "shift_e1");
    const int j = prev.level + 1;
    if (depth < j) {
        throw RangeError("shift_e1: depth " + std::to_string(depth) + " too small for level " + std::to_string(j));
    }

    ShiftResult out{make_level(Axis::e1, j, j, 2 * depth - j + 1), {}};
    out.c = CSequence{Axis::e1, j, IndexedSeq("c" + superscript(Axis::e1, j), 0, depth - j)};
    StepLineCoeffs& next = out.next;
    IndexedSeq& c = out.c.values;

    next.gamma.set(j, 0);
    next.delta.set(j, 0);
    next.delta.set(j + 1, 0);

    const Rational& g0 = prev.gamma.at(j);
    if (g0.is_zero()) {
        throw InitError(Axis::e1, j, "shift_e1: " + sub("gamma", j, Axis::e1, j - 1) + " = 0, cannot start level "
                                         + std::to_string(j));
    }
    c.set(0, -prev.delta.at(j + 1) / g0);
    const Rational& c0 = c.at(0);
    next.beta.set(j, prev.beta.at(j) - c0);
    next.beta.set(j + 1, prev.beta.at(j + 1) + c0);
    next.gamma.set(j + 1, prev.gamma.at(j + 1) + c0 * (prev.beta.at(j) - next.beta.at(j + 1)));

    for (int n = 1; n <= depth - j; ++n) {
        const int i = 2 * n + j;
        const Rational& c_prev = c.at(n - 1);
        const Rational& d_i = prev.delta.at(i);
        const Rational& d_i1 = prev.delta.at(i + 1);
        const Rational& g_i = prev.gamma.at(i);

        Rational denominator = d_i - c_prev * g_i;
        if (denominator.is_zero()) {
            throw NormalityError(Axis::e1, j, n, i,
                                 sub("delta", i, Axis::e1, j) + " = " + sub("delta", i, Axis::e1, j - 1) + " - c_"
                                     + std::to_string(n - 1) + superscript(Axis::e1, j) + " "
                                     + sub("gamma", i, Axis::e1, j - 1));
        }

        if (variant == ShiftVariant::original) {
            c.set(n, c_prev * d_i1 / denominator);
            next.delta.set(i + 1, d_i1 + c.at(n) * g_i);
        } else {
            next.delta.set(i + 1, d_i1 * d_i / denominator);
            c.set(n, c_prev * d_i1 / denominator);
        }
        next.delta.set(i, std::move(denominator));

        const Rational& c_n = c.at(n);
        next.beta.set(i, prev.beta.at(i) - c_n);
        next.gamma.set(i, g_i);
        next.beta.set(i + 1, prev.beta.at(i + 1) + c_n);
        next.gamma.set(i + 1, prev.gamma.at(i + 1) + c_n * (prev.beta.at(i) - next.beta.at(i + 1)));
    }
    return out;
}

ShiftResult shift_e2(const StepLineCoeffs& prev, const std::optional<Rational>& c0_seed, int depth,
                     ShiftVariant variant)
{
    require_level(prev, Axis::e2, "shift_e2");
    const int k = prev.level;
    if (depth < k) {
        throw RangeError("shift_e2: depth " + std::to_string(depth) + " too small for level " + std::to_string(k));
    }

    Rational c0;
    if (k == 0) {
        if (!c0_seed) {
            throw SeedMismatch("shift_e2: c_0^(0,0) is a free parameter and must be supplied");
        }
        c0 = *c0_seed;
    } else {
        const Rational& g = prev.gamma.at(k);
        if (g.is_zero()) {
            throw InitError(Axis::e2, k, "shift_e2: " + sub("gamma", k, Axis::e2, k) + " = 0, cannot seed c_0"
                                             + superscript(Axis::e2, k));
        }
        c0 = prev.delta.at(k + 1) / g;
        if (c0_seed && *c0_seed != c0) {
            throw SeedMismatch("shift_e2: supplied c_0" + superscript(Axis::e2, k) + " = " + c0_seed->to_string()
                               + " but the data force " + c0.to_string());
        }
    }

    ShiftResult out{make_level(Axis::e2, k + 1, k, 2 * depth - k + 1), {}};
    out.c = CSequence{Axis::e2, k, IndexedSeq("c" + superscript(Axis::e2, k), 0, depth - k)};
    StepLineCoeffs& next = out.next;
    IndexedSeq& c = out.c.values;

    next.gamma.set(k, 0);
    next.delta.set(k, 0);
    next.delta.set(k + 1, 0);

    c.set(0, c0);
    next.beta.set(k, prev.beta.at(k) + c0);
    next.beta.set(k + 1, prev.beta.at(k + 1) - c0);
    next.gamma.set(k + 1, prev.gamma.at(k + 1) - c0 * (prev.beta.at(k) - next.beta.at(k + 1)));

    for (int n = 1; n <= depth - k; ++n) {
        const int i = 2 * n + k;
        const Rational& c_prev = c.at(n - 1);
        const Rational& d_i = prev.delta.at(i);
        const Rational& d_i1 = prev.delta.at(i + 1);
        const Rational& g_i = prev.gamma.at(i);

        Rational denominator = d_i + c_prev * g_i;
        if (denominator.is_zero()) {
            throw NormalityError(Axis::e2, k + 1, n, i,
                                 sub("delta", i, Axis::e2, k + 1) + " = " + sub("delta", i, Axis::e2, k) + " + c_"
                                     + std::to_string(n - 1) + superscript(Axis::e2, k) + " "
                                     + sub("gamma", i, Axis::e2, k));
        }

        if (variant == ShiftVariant::original) {
            c.set(n, c_prev * d_i1 / denominator);
            next.delta.set(i + 1, d_i1 - c.at(n) * g_i);
        } else {
            next.delta.set(i + 1, d_i1 * d_i / denominator);
            c.set(n, c_prev * d_i1 / denominator);
        }
        next.delta.set(i, std::move(denominator));

        const Rational& c_n = c.at(n);
        next.beta.set(i, prev.beta.at(i) + c_n);
        next.gamma.set(i, g_i);
        next.beta.set(i + 1, prev.beta.at(i + 1) - c_n);
        next.gamma.set(i + 1, prev.gamma.at(i + 1) - c_n * (prev.beta.at(i) - next.beta.at(i + 1)));
    }
    return out;
}

Rational seed_c00(const Rational& m0_mu2, const Rational& m1_mu2, const Rational& beta0)
{
    if (m0_mu2.is_zero()) {
        throw DomainError("seed_c00: mu_2 has zero total mass");
    }
    return m1_mu2 / m0_mu2 - beta0;
}

Rational riccati_closed_form(Axis axis, int level, const StepLineCoeffs& prev, const Rational& d0, int n)
{
    if (n < 0) {
        throw RangeError("riccati_closed_form: negative n");
    }
    // Axis e1 reads level j-1 data and the sum enters with a minus sign; axis e2
    // reads level k data with a plus sign.
    const int offset = level;
    const Rational sign = axis == Axis::e1 ? Rational(-1) : Rational(1);

    auto delta = [&](int index) -> const Rational& {
        const Rational& value = prev.delta.at(index);
        if (value.is_zero()) {
            throw NormalityError(axis, level, (index - offset) / 2, index,
                                 prev.delta.label() + "[" + std::to_string(index) + "]");
        }
        return value;
    };

    Rational sum = 0;
    Rational ratio = 1; // prod_{k=1}^{i} delta_{2k+o+1} / delta_{2k+o}
    for (int i = 1; i <= n; ++i) {
        ratio *= delta(2 * i + offset + 1) / delta(2 * i + offset);
        sum += prev.gamma.at(2 * i + offset) / delta(2 * i + offset + 1) * ratio;
    }
    // prod_{k=1}^{n} delta_{2k+o} / delta_{2k+o+1} is the reciprocal of the final ratio.
    return (sign * sum + d0) / ratio;
}

ShiftFamily::ShiftFamily(Axis axis, int depth)
    : axis_(axis)
    , depth_(depth)
{
}

const StepLineCoeffs& ShiftFamily::level(int index) const
{
    if (index < 0 || index >= static_cast<int>(levels_.size())) {
        throw RangeError("shift family on axis " + to_string(axis_) + " has no level " + std::to_string(index));
    }
    return levels_[static_cast<std::size_t>(index)];
}

const CSequence& ShiftFamily::c(int level) const
{
    for (const CSequence& seq : c_) {
        if (seq.level == level) {
            return seq;
        }
    }
    throw RangeError("shift family on axis " + to_string(axis_) + " has no c-sequence for level "
                     + std::to_string(level));
}

void ShiftFamily::push_level(StepLineCoeffs coeffs)
{
    levels_.push_back(std::move(coeffs));
}

void ShiftFamily::push_c(CSequence c)
{
    c_.push_back(std::move(c));
}

ShiftFamily build_e1_family(const StepLineCoeffs& level0, int depth, ShiftVariant variant)
{
    if (level0.level != 0) {
        throw std::invalid_argument("build_e1_family: expected level 0 input");
    }
    ShiftFamily family(Axis::e1, depth);
    family.push_level(level0);
    for (int j = 1; j <= depth; ++j) {
        ShiftResult step = shift_e1(family.level(j - 1), depth, variant);
        family.push_level(std::move(step.next));
        family.push_c(std::move(step.c));
    }
    return family;
}

ShiftFamily build_e2_family(const StepLineCoeffs& level0, const Rational& c00, int depth, ShiftVariant variant)
{
    if (level0.level != 0) {
        throw std::invalid_argument("build_e2_family: expected level 0 input");
    }
    ShiftFamily family(Axis::e2, depth);
    StepLineCoeffs base = level0;
    base.axis = Axis::e2;
    family.push_level(std::move(base));
    for (int k = 0; k <= depth; ++k) {
        std::optional<Rational> seed;
        if (k == 0) {
            seed = c00;
        }
        ShiftResult step = shift_e2(family.level(k), seed, depth, variant);
        family.push_level(std::move(step.next));
        family.push_c(std::move(step.c));
    }
    return family;
}

} // namespace mop
