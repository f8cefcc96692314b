#include "mop/exact_linear.hpp"

#include <stdexcept>
#include <utility>

namespace mop {

std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& a, const std::vector<Rational>& rhs)
{
    const std::size_t rows = a.size();
    if (rhs.size() != rows) {
        throw std::invalid_argument("solve_exact: rhs length does not match row count");
    }
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    if (rows < cols) {
        throw std::invalid_argument("solve_exact: underdetermined system");
    }

    // Integer augmented matrix [A | rhs], one row scaled by the lcm of its denominators.
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) {
            throw std::invalid_argument("solve_exact: ragged matrix");
        }
        mpz_class scale = rhs[i].denominator();
        for (const Rational& q : a[i]) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get().get_den_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m[i][j] = a[i][j].numerator() * (scale / a[i][j].denominator());
        }
        m[i][cols] = rhs[i].numerator() * (scale / rhs[i].denominator());
    }

    mpz_class previous_pivot = 1;
    for (std::size_t k = 0; k < cols; ++k) {
        std::size_t pivot = k;
        while (pivot < rows && sgn(m[pivot][k]) == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            return std::nullopt;
        }
        std::swap(m[k], m[pivot]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j <= cols; ++j) {
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous_pivot.get_mpz_t());
            }
            m[i][k] = 0;
        }
        previous_pivot = m[k][k];
    }

    for (std::size_t i = cols; i < rows; ++i) {
        if (sgn(m[i][cols]) != 0) {
            return std::nullopt;
        }
    }

    std::vector<Rational> x(cols);
    for (std::size_t kk = cols; kk-- > 0;) {
        Rational acc(m[kk][cols]);
        for (std::size_t j = kk + 1; j < cols; ++j) {
            acc -= Rational(m[kk][j]) * x[j];
        }
        x[kk] = acc / Rational(m[kk][kk]);
    }
    return x;
}

} // namespace mop
