#include "mop/polynomial_oracle.hpp"

#include <functional>
#include <stdexcept>

#include "mop/errors.hpp"
#include "mop/exact_linear.hpp"

namespace mop {

MomentTable::MomentTable(std::vector<std::vector<Rational>> per_measure)
    : moments_(std::move(per_measure))
{
}

int MomentTable::max_degree(int measure) const
{
    return static_cast<int>(of(measure).size()) - 1;
}

const Rational& MomentTable::moment(int measure, int k) const
{
    const std::vector<Rational>& m = of(measure);
    if (k < 0 || k >= static_cast<int>(m.size())) {
        throw RangeError("moment m_" + std::to_string(k) + " of measure " + std::to_string(measure + 1)
                         + " not available (have 0.." + std::to_string(static_cast<int>(m.size()) - 1) + ")");
    }
    return m[static_cast<std::size_t>(k)];
}

const std::vector<Rational>& MomentTable::of(int measure) const
{
    if (measure < 0 || measure >= r()) {
        throw RangeError("no measure " + std::to_string(measure + 1) + " in moment table of r = " + std::to_string(r()));
    }
    return moments_[static_cast<std::size_t>(measure)];
}

Poly mop_from_moments(const MomentTable& moments, const MultiIndex& index)
{
    if (index.r() != moments.r() || !index.valid()) {
        throw std::invalid_argument("mop_from_moments: index " + index.to_string() + " does not fit r = "
                                    + std::to_string(moments.r()));
    }
    const int len = index.length();
    if (len == 0) {
        return Poly::monomial(0);
    }
    RationalMatrix a;
    std::vector<Rational> rhs;
    a.reserve(static_cast<std::size_t>(len));
    for (int j = 0; j < index.r(); ++j) {
        for (int k = 0; k < index[j]; ++k) {
            std::vector<Rational> row(static_cast<std::size_t>(len));
            for (int i = 0; i < len; ++i) {
                row[static_cast<std::size_t>(i)] = moments.moment(j, i + k);
            }
            a.push_back(std::move(row));
            rhs.push_back(-moments.moment(j, len + k));
        }
    }
    std::optional<std::vector<Rational>> c = solve_exact(a, rhs);
    if (!c) {
        throw NonNormalIndexError(index);
    }
    c->push_back(Rational(1));
    return Poly(std::move(*c));
}

MopOracle::MopOracle(MomentTable moments)
    : moments_(std::move(moments))
{
}

const Poly& MopOracle::polynomial(const MultiIndex& index)
{
    auto it = cache_.find(index);
    if (it == cache_.end()) {
        it = cache_.emplace(index, mop_from_moments(moments_, index)).first;
    }
    return it->second;
}

NNCoefficients MopOracle::nn(const MultiIndex& index)
{
    const int r = index.r();
    const int len = index.length();
    const Poly& p = polynomial(index);

    std::vector<int> lower_dirs;
    for (int j = 0; j < r; ++j) {
        if (index[j] >= 1) {
            lower_dirs.push_back(j);
        }
    }
    RationalMatrix basis(static_cast<std::size_t>(len), std::vector<Rational>(lower_dirs.size()));
    for (std::size_t col = 0; col < lower_dirs.size(); ++col) {
        const Poly& q = polynomial(index.minus(lower_dirs[col]));
        for (int deg = 0; deg < len; ++deg) {
            basis[static_cast<std::size_t>(deg)][col] = q.coeff(deg);
        }
    }

    NNCoefficients out{std::vector<Rational>(static_cast<std::size_t>(r)),
                       std::vector<Rational>(static_cast<std::size_t>(r))};
    for (int k = 0; k < r; ++k) {
        const Poly rest = p.times_x() - polynomial(index.plus(k));
        const Rational bk = rest.coeff(len);
        const Poly remainder = rest - bk * p;
        out.b[static_cast<std::size_t>(k)] = bk;

        std::vector<Rational> a(static_cast<std::size_t>(r));
        if (len == 0) {
            if (!remainder.is_zero()) {
                throw InternalError("nn oracle: P_" + index.plus(k).to_string() + " is not x - b at the origin");
            }
        } else {
            std::vector<Rational> rhs(static_cast<std::size_t>(len));
            for (int deg = 0; deg < len; ++deg) {
                rhs[static_cast<std::size_t>(deg)] = remainder.coeff(deg);
            }
            std::optional<std::vector<Rational>> x = solve_exact(basis, rhs);
            if (!x) {
                throw InternalError("nn oracle: x P_n - P_{n+e_k} not in span of lower neighbours at "
                                    + index.to_string());
            }
            for (std::size_t col = 0; col < lower_dirs.size(); ++col) {
                a[static_cast<std::size_t>(lower_dirs[col])] = (*x)[col];
            }
        }
        if (k == 0) {
            out.a = std::move(a);
        } else if (a != out.a) {
            throw InternalError("nn oracle: a-coefficients at " + index.to_string() + " differ between directions");
        }
    }
    return out;
}

NNCoefficients nn_oracle(const MomentTable& moments, const MultiIndex& index)
{
    MopOracle oracle(moments);
    return oracle.nn(index);
}

NNGridR nn_oracle_grid(const MomentTable& moments, int max_len)
{
    MopOracle oracle(moments);
    NNGridR grid(moments.r(), max_len);
    for (int len = 0; len <= max_len; ++len) {
        for (const MultiIndex& index : multi_indices_of_length(moments.r(), len)) {
            NNCoefficients nn = oracle.nn(index);
            grid.set(index, NNGridR::Entry{std::move(nn.a), std::move(nn.b)});
        }
    }
    return grid;
}

MarginalRecurrence marginal_oracle(const std::vector<Rational>& moments, int count, int measure_id)
{
    MopOracle oracle(MomentTable({moments}));
    MarginalRecurrence out;
    out.measure_id = measure_id;
    for (int n = 0; n < count; ++n) {
        const NNCoefficients nn = oracle.nn(MultiIndex{n});
        out.b.push_back(nn.b[0]);
        out.a_sq.push_back(nn.a[0]);
    }
    return out;
}

Poly eval_chain(const NNGridR& grid, const std::vector<int>& path)
{
    const int r = grid.r();
    std::unordered_map<MultiIndex, int, MultiIndexHash> arrival;
    MultiIndex cursor = MultiIndex::zero(r);
    for (const int k : path) {
        if (k < 0 || k >= r) {
            throw std::invalid_argument("eval_chain: direction " + std::to_string(k) + " out of range");
        }
        cursor = cursor.plus(k);
        arrival.emplace(cursor, k);
    }

    std::unordered_map<MultiIndex, Poly, MultiIndexHash> memo;
    std::function<const Poly&(const MultiIndex&)> get = [&](const MultiIndex& m) -> const Poly& {
        if (auto it = memo.find(m); it != memo.end()) {
            return it->second;
        }
        Poly value = Poly::monomial(0);
        if (m.length() > 0) {
            int k = -1;
            if (auto it = arrival.find(m); it != arrival.end()) {
                k = it->second;
            } else {
                for (int j = 0; j < r && k < 0; ++j) {
                    if (m[j] >= 1) {
                        k = j;
                    }
                }
            }
            const MultiIndex n = m.minus(k);
            value = Poly::linear(grid.b(n, k)) * get(n);
            for (int j = 0; j < r; ++j) {
                if (n[j] >= 1) {
                    value -= grid.a(n, j) * get(n.minus(j));
                }
            }
        }
        return memo.emplace(m, std::move(value)).first->second;
    };
    return get(cursor);
}

Poly eval_chain(const NNGridR& grid, const MultiIndex& target)
{
    std::vector<int> path;
    for (int k = 0; k < target.r(); ++k) {
        path.insert(path.end(), static_cast<std::size_t>(target[k]), k);
    }
    return eval_chain(grid, path);
}

Poly eval_chain(const StepLineCoeffs& stepline, int step_index)
{
    if (stepline.first_index() != 0) {
        throw std::invalid_argument("eval_chain: step-line polynomials need level 0 data");
    }
    if (step_index < 0 || step_index > stepline.last_index() + 1) {
        throw RangeError("eval_chain: p_" + std::to_string(step_index) + " needs coefficients up to index "
                         + std::to_string(step_index - 1));
    }
    Poly older;
    Poly old;
    Poly current = Poly::monomial(0);
    for (int n = 0; n < step_index; ++n) {
        Poly next = Poly::linear(stepline.beta.at(n)) * current - stepline.gamma.at(n) * old
                    - stepline.delta.at(n) * older;
        older = std::move(old);
        old = std::move(current);
        current = std::move(next);
    }
    return current;
}

std::vector<Rational> orthogonality_residuals(const Poly& p, const MomentTable& moments, int measure, int upto)
{
    std::vector<Rational> out;
    for (int k = 0; k <= upto; ++k) {
        Rational acc = 0;
        for (int i = 0; i <= p.degree(); ++i) {
            acc += p.coeff(i) * moments.moment(measure, i + k);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

} // namespace mop
