#include "mop/inverse_problem.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "mop/errors.hpp"

namespace mop {

// ---------------------------------------------------------------------------
// NNGridR

NNGridR::NNGridR(int r, int max_len)
    : r_(r)
    , max_len_(max_len)
{
    if (r < 1 || max_len < 0) {
        throw std::invalid_argument("NNGridR: r >= 1 and max_len >= 0 required");
    }
}

NNGridR NNGridR::from_r2(const NNGrid& grid)
{
    NNGridR out(2, grid.max_len());
    for (int len = 0; len <= grid.max_len(); ++len) {
        for (int m = 0; m <= len; ++m) {
            const int n = len - m;
            const NNEntry& e = grid.at(n, m);
            out.set(MultiIndex{n, m}, Entry{{e.a, e.b}, {e.c, e.d}});
        }
    }
    return out;
}

NNGrid NNGridR::to_r2() const
{
    if (r_ != 2) {
        throw std::invalid_argument("NNGridR::to_r2: grid has r = " + std::to_string(r_));
    }
    NNGrid out(max_len_);
    for (int len = 0; len <= max_len_; ++len) {
        for (int m = 0; m <= len; ++m) {
            const int n = len - m;
            const Entry& e = at(MultiIndex{n, m});
            out.at(n, m) = NNEntry{e.a[0], e.a[1], e.b[0], e.b[1]};
        }
    }
    return out;
}

bool NNGridR::contains(const MultiIndex& index) const
{
    return index.r() == r_ && index.valid() && index.length() <= max_len_ && entries_.contains(index);
}

const NNGridR::Entry& NNGridR::at(const MultiIndex& index) const
{
    if (!contains(index)) {
        throw RangeError("NNGridR: no entry at " + index.to_string());
    }
    return entries_.at(index);
}

void NNGridR::set(const MultiIndex& index, Entry entry)
{
    if (index.r() != r_ || !index.valid() || index.length() > max_len_) {
        throw RangeError("NNGridR: cannot store " + index.to_string());
    }
    if (static_cast<int>(entry.a.size()) != r_ || static_cast<int>(entry.b.size()) != r_) {
        throw std::invalid_argument("NNGridR: entry vectors must have length r");
    }
    entries_[index] = std::move(entry);
}

const Rational& NNGridR::a(const MultiIndex& index, int j) const
{
    return at(index).a.at(static_cast<std::size_t>(j));
}

const Rational& NNGridR::b(const MultiIndex& index, int k) const
{
    return at(index).b.at(static_cast<std::size_t>(k));
}

std::vector<MultiIndex> NNGridR::indices() const
{
    std::vector<MultiIndex> out;
    for (int len = 0; len <= max_len_; ++len) {
        for (MultiIndex& index : multi_indices_of_length(r_, len)) {
            if (entries_.contains(index)) {
                out.push_back(std::move(index));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// r = 2 sweep

namespace {

void require_coverage(const MarginalRecurrence& mu, int max_len, const char* who)
{
    if (mu.size() <= max_len || static_cast<int>(mu.a_sq.size()) <= max_len) {
        throw RangeError(std::string(who) + ": marginal recurrence of measure " + std::to_string(mu.measure_id)
                         + " covers indices 0.." + std::to_string(mu.size() - 1) + ", need 0.."
                         + std::to_string(max_len));
    }
}

} // namespace

NNGrid nn_from_marginals_r2(const MarginalRecurrence& mu1, const MarginalRecurrence& mu2, int max_len)
{
    require_coverage(mu1, max_len, "nn_from_marginals_r2");
    require_coverage(mu2, max_len, "nn_from_marginals_r2");

    NNGrid g(max_len);
    for (int n = 0; n <= max_len; ++n) {
        const auto i = static_cast<std::size_t>(n);
        g.at(n, 0).c = mu1.b[i];
        g.at(n, 0).a = n == 0 ? Rational(0) : mu1.a_sq[i];
        g.at(n, 0).b = 0;
        g.at(0, n).d = mu2.b[i];
        g.at(0, n).a = 0;
        g.at(0, n).b = n == 0 ? Rational(0) : mu2.a_sq[i];
    }

    // c_{n,m} - d_{n,m}, required nonzero wherever it divides.
    auto kappa = [&g](int n, int m) {
        Rational value = g.at(n, m).c - g.at(n, m).d;
        if (value.is_zero()) {
            throw SingularSweepError(MultiIndex{n, m}, 0, 1);
        }
        return value;
    };

    for (int len = 1; len <= max_len; ++len) {
        for (int k = 1; k <= len - 1; ++k) {
            const Rational below = kappa(k - 1, len - k - 1);
            const NNEntry& left = g.at(k, len - k - 1);
            const NNEntry& down = g.at(k - 1, len - k);
            Rational a = left.a * (left.c - left.d) / below;
            Rational b = down.b * (down.c - down.d) / below;
            g.at(k, len - k).a = std::move(a);
            g.at(k, len - k).b = std::move(b);
        }
        for (int k = 1; k <= len; ++k) {
            const int n = len - k;
            const NNEntry& up = g.at(n + 1, k - 1);
            const NNEntry& right = g.at(n, k);
            const Rational shift = (up.a + up.b - right.a - right.b) / kappa(n, k - 1);
            g.at(n, k).c = g.at(n, k - 1).c + shift;
        }
        for (int k = 1; k <= len; ++k) {
            const int m = len - k;
            g.at(k, m).d = g.at(k - 1, m + 1).c - g.at(k - 1, m).c + g.at(k - 1, m).d;
        }
    }
    return g;
}

StepLineCoeffs stepline_from_nn(const NNGrid& grid, int max_index)
{
    if (max_index < 0 || max_index > grid.max_len()) {
        throw RangeError("stepline_from_nn: step index " + std::to_string(max_index)
                         + " needs grid entries up to length " + std::to_string(max_index) + ", grid has "
                         + std::to_string(grid.max_len()));
    }
    std::vector<Rational> beta(static_cast<std::size_t>(max_index + 1));
    std::vector<Rational> gamma(beta.size());
    std::vector<Rational> delta(beta.size());
    for (int i = 0; i <= max_index; ++i) {
        const auto s = static_cast<std::size_t>(i);
        if (i % 2 == 0) {
            const int n = i / 2;
            const NNEntry& e = grid.at(n, n);
            beta[s] = e.c;
            if (n >= 1) {
                const NNEntry& prev = grid.at(n - 1, n - 1);
                gamma[s] = e.a + e.b;
                delta[s] = e.a * (prev.c - prev.d);
            }
        } else {
            const int n = (i - 1) / 2;
            const NNEntry& e = grid.at(n + 1, n);
            beta[s] = e.d;
            gamma[s] = e.a + e.b;
            if (n >= 1) {
                const NNEntry& prev = grid.at(n, n - 1);
                delta[s] = e.b * (prev.d - prev.c);
            }
        }
    }
    return StepLineCoeffs::level_zero(beta, gamma, delta);
}

// ---------------------------------------------------------------------------
// General r sweep

namespace {

struct SweepContext {
    const NNGridR& grid;
    std::span<const MarginalRecurrence> marginals;
};

/// j != i with m_j >= 1 per the choice policy; nullopt when m lies on axis i.
std::optional<int> pick_direction(const MultiIndex& m, int i, DirectionChoice choice)
{
    std::optional<int> found;
    for (int j = 0; j < m.r(); ++j) {
        if (j == i || m[j] < 1) {
            continue;
        }
        if (!found || choice == DirectionChoice::largest) {
            found = j;
        }
        if (choice == DirectionChoice::smallest) {
            break;
        }
    }
    return found;
}

Rational difference_or_throw(const NNGridR& grid, const MultiIndex& n, int i, int j)
{
    Rational value = grid.b(n, j) - grid.b(n, i);
    if (value.is_zero()) {
        throw SingularSweepError(n, i, j);
    }
    return value;
}

/// a_{n+e_j,i} = a_{n,i} (b_{n,j} - b_{n,i}) / (b_{n-e_i,j} - b_{n-e_i,i}), n = m - e_j.
Rational a_update(const NNGridR& grid, const MultiIndex& m, int i, int j)
{
    const MultiIndex n = m.minus(j);
    const MultiIndex lower = n.minus(i);
    const Rational divisor = difference_or_throw(grid, lower, i, j);
    return grid.a(n, i) * (grid.b(n, j) - grid.b(n, i)) / divisor;
}

Rational a_sum(const std::vector<Rational>& a)
{
    Rational s = 0;
    for (const Rational& v : a) {
        s += v;
    }
    return s;
}

} // namespace

NNGridR nn_from_marginals_general_r(std::span<const MarginalRecurrence> marginals, int max_len,
                                    const GeneralSweepOptions& options)
{
    const int r = static_cast<int>(marginals.size());
    if (r < 2) {
        throw std::invalid_argument("nn_from_marginals_general_r: need r >= 2 marginal recurrences");
    }
    for (const MarginalRecurrence& mu : marginals) {
        require_coverage(mu, max_len, "nn_from_marginals_general_r");
    }
    const DirectionChoice other = options.choice == DirectionChoice::smallest ? DirectionChoice::largest
                                                                              : DirectionChoice::smallest;

    NNGridR grid(r, max_len);
    {
        NNGridR::Entry origin{std::vector<Rational>(static_cast<std::size_t>(r)),
                              std::vector<Rational>(static_cast<std::size_t>(r))};
        for (int i = 0; i < r; ++i) {
            origin.b[static_cast<std::size_t>(i)] = marginals[static_cast<std::size_t>(i)].b[0];
        }
        grid.set(MultiIndex::zero(r), std::move(origin));
    }

    for (int len = 1; len <= max_len; ++len) {
        const std::vector<MultiIndex> level = multi_indices_of_length(r, len);
        const auto L = static_cast<std::size_t>(len);

        // a-values first: the b-update reads the a-sums of two indices of this length.
        std::vector<NNGridR::Entry> pending;
        pending.reserve(level.size());
        for (const MultiIndex& m : level) {
            NNGridR::Entry entry{std::vector<Rational>(static_cast<std::size_t>(r)),
                                 std::vector<Rational>(static_cast<std::size_t>(r))};
            for (int i = 0; i < r; ++i) {
                const auto si = static_cast<std::size_t>(i);
                if (m[i] == 0) {
                    continue;
                }
                const std::optional<int> j = pick_direction(m, i, options.choice);
                if (!j) {
                    entry.a[si] = marginals[si].a_sq[L];
                    continue;
                }
                entry.a[si] = a_update(grid, m, i, *j);
                if (options.cross_check) {
                    const std::optional<int> alt = pick_direction(m, i, other);
                    if (alt && *alt != *j && a_update(grid, m, i, *alt) != entry.a[si]) {
                        throw InternalError("a-update at " + m.to_string() + " depends on the chosen direction");
                    }
                }
            }
            pending.push_back(std::move(entry));
        }
        for (std::size_t idx = 0; idx < level.size(); ++idx) {
            grid.set(level[idx], pending[idx]);
        }

        for (std::size_t idx = 0; idx < level.size(); ++idx) {
            const MultiIndex& m = level[idx];
            NNGridR::Entry entry = grid.at(m);
            auto b_update = [&](int i, int j) {
                const MultiIndex n = m.minus(j);
                const Rational divisor = difference_or_throw(grid, n, i, j);
                return grid.b(n, i) + (a_sum(grid.at(m).a) - a_sum(grid.at(n.plus(i)).a)) / divisor;
            };
            for (int i = 0; i < r; ++i) {
                const auto si = static_cast<std::size_t>(i);
                const std::optional<int> j = pick_direction(m, i, options.choice);
                if (!j) {
                    entry.b[si] = marginals[si].b[L];
                    continue;
                }
                entry.b[si] = b_update(i, *j);
                if (options.cross_check) {
                    const std::optional<int> alt = pick_direction(m, i, other);
                    if (alt && *alt != *j && b_update(i, *alt) != entry.b[si]) {
                        throw InternalError("b-update at " + m.to_string() + " depends on the chosen direction");
                    }
                }
            }
            pending[idx] = std::move(entry);
        }
        for (std::size_t idx = 0; idx < level.size(); ++idx) {
            grid.set(level[idx], std::move(pending[idx]));
        }
    }
    return grid;
}

// ---------------------------------------------------------------------------
// Transfer matrices

PolyMatrix transfer_matrix(const NNGridR& grid, const MultiIndex& index, int k)
{
    const int r = grid.r();
    PolyMatrix R(r + 1, r + 1);
    R(0, 0) = Poly::linear(grid.b(index, k));
    for (int l = 0; l < r; ++l) {
        R(0, l + 1) = Poly::constant(-grid.a(index, l));
        if (l == k) {
            R(l + 1, 0) = Poly::constant(Rational(1));
        } else if (index[l] >= 1) {
            // P_{n+e_k-e_l} = P_n + (b_{n-e_l,l} - b_{n-e_l,k}) P_{n-e_l}
            const MultiIndex lower = index.minus(l);
            R(l + 1, 0) = Poly::constant(Rational(1));
            R(l + 1, l + 1) = Poly::constant(grid.b(lower, l) - grid.b(lower, k));
        }
    }
    return R;
}

CompatibilityResult compatibility_check(const NNGridR& grid, const MultiIndex& index, int i, int j)
{
    const PolyMatrix via_j = transfer_matrix(grid, index.plus(j), i) * transfer_matrix(grid, index, j);
    const PolyMatrix via_i = transfer_matrix(grid, index.plus(i), j) * transfer_matrix(grid, index, i);
    CompatibilityResult out;
    out.residual = via_j - via_i;
    out.ok = out.residual.is_zero();
    return out;
}

// ---------------------------------------------------------------------------
// Partial-difference residuals

std::vector<PdViolation> pd_residuals_r2(const NNGrid& g)
{
    std::vector<PdViolation> out;
    auto record = [&out](const char* eq, int n, int m, Rational residual) {
        if (!residual.is_zero()) {
            out.push_back(PdViolation{eq, MultiIndex{n, m}, 0, 1, std::move(residual)});
        }
    };
    for (int len = 0; len + 1 <= g.max_len(); ++len) {
        for (int m = 0; m <= len; ++m) {
            const int n = len - m;
            const NNEntry& here = g.at(n, m);
            const NNEntry& right = g.at(n + 1, m);
            const NNEntry& up = g.at(n, m + 1);
            record("cd", n, m, (right.d - here.d) - (up.c - here.c));
            record("a+b", n, m, (right.a + right.b - up.a - up.b) - (right.d * here.c - here.d * up.c));
            if (n >= 1) {
                const NNEntry& west = g.at(n - 1, m);
                record("acd", n, m, up.a * (west.c - west.d) - here.a * (here.c - here.d));
            }
            if (m >= 1) {
                const NNEntry& south = g.at(n, m - 1);
                record("bcd", n, m, right.b * (south.c - south.d) - here.b * (here.c - here.d));
            }
        }
    }
    return out;
}

std::vector<PdViolation> pd_residuals(const NNGridR& grid)
{
    std::vector<PdViolation> out;
    const int r = grid.r();
    auto record = [&out](const char* eq, const MultiIndex& n, int i, int j, Rational residual) {
        if (!residual.is_zero()) {
            out.push_back(PdViolation{eq, n, i, j, std::move(residual)});
        }
    };
    for (int len = 0; len + 1 <= grid.max_len(); ++len) {
        for (const MultiIndex& n : multi_indices_of_length(r, len)) {
            for (int i = 0; i < r; ++i) {
                for (int j = 0; j < r; ++j) {
                    if (i == j) {
                        continue;
                    }
                    const MultiIndex ni = n.plus(i);
                    const MultiIndex nj = n.plus(j);
                    record("PD1", n, i, j, (grid.b(ni, j) - grid.b(n, j)) - (grid.b(nj, i) - grid.b(n, i)));
                    record("PD2", n, i, j,
                           (a_sum(grid.at(nj).a) - a_sum(grid.at(ni).a))
                               - (grid.b(nj, i) * grid.b(n, j) - grid.b(n, i) * grid.b(ni, j)));
                    if (n[i] >= 1) {
                        const MultiIndex lower = n.minus(i);
                        record("PD3", n, i, j,
                               grid.a(nj, i) * (grid.b(lower, j) - grid.b(lower, i))
                                   - grid.a(n, i) * (grid.b(n, j) - grid.b(n, i)));
                    }
                }
            }
        }
    }
    return out;
}

} // namespace mop
