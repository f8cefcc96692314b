#ifndef MOP_POLYNOMIAL_HPP
#define MOP_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "mop/numerics.hpp"

namespace mop {

/// Dense univariate polynomial over the rationals, ascending coefficients.
/// Trailing zero coefficients are stripped; the zero polynomial has degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);

    static Poly constant(const Rational& value);
    /// x - root
    static Poly linear(const Rational& root);
    static Poly monomial(int degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }

    /// Coefficient of x^i; zero beyond the degree.
    Rational coeff(int i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& x) const;
    Poly times_x() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& scalar);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(Poly lhs, const Rational& scalar) { return lhs *= scalar; }
    friend Poly operator*(const Rational& scalar, Poly rhs) { return rhs *= scalar; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Matrix with polynomial entries, row-major.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Poly& operator()(int row, int col) const;
    Poly& operator()(int row, int col);

    bool is_zero() const;

    friend PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs);
    friend PolyMatrix operator-(const PolyMatrix& lhs, const PolyMatrix& rhs);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    int rows_;
    int cols_;
    std::vector<Poly> entries_;
};

} // namespace mop

#endif // MOP_POLYNOMIAL_HPP
