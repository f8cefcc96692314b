#include "mop/polynomial.hpp"

#include <stdexcept>

namespace mop {

Poly::Poly(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients))
{
    trim();
}

Poly Poly::constant(const Rational& value)
{
    return Poly(std::vector<Rational>{value});
}

Poly Poly::linear(const Rational& root)
{
    return Poly(std::vector<Rational>{-root, Rational(1)});
}

Poly Poly::monomial(int degree)
{
    std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
    c.back() = 1;
    return Poly(std::move(c));
}

Rational Poly::coeff(int i) const
{
    if (i < 0 || i > degree()) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::evaluate(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly Poly::times_x() const
{
    if (is_zero()) {
        return *this;
    }
    std::vector<Rational> c;
    c.reserve(coeffs_.size() + 1);
    c.emplace_back(0);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(c));
}

Poly& Poly::operator+=(const Poly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& scalar)
{
    for (Rational& c : coeffs_) {
        c *= scalar;
    }
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) {
        return Poly();
    }
    std::vector<Rational> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Poly(std::move(c));
}

std::string Poly::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += c.sign() < 0 ? " - " : " + ";
        } else if (c.sign() < 0) {
            out += "-";
        }
        const Rational magnitude = abs(c);
        if (i == 0 || magnitude != Rational(1)) {
            out += magnitude.to_string();
            if (i > 0) {
                out += "*";
            }
        }
        if (i >= 1) {
            out += "x";
        }
        if (i >= 2) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

PolyMatrix::PolyMatrix(int rows, int cols)
    : rows_(rows)
    , cols_(cols)
    , entries_(static_cast<std::size_t>(rows * cols))
{
}

const Poly& PolyMatrix::operator()(int row, int col) const
{
    return entries_.at(static_cast<std::size_t>(row * cols_ + col));
}

Poly& PolyMatrix::operator()(int row, int col)
{
    return entries_.at(static_cast<std::size_t>(row * cols_ + col));
}

bool PolyMatrix::is_zero() const
{
    for (const Poly& p : entries_) {
        if (!p.is_zero()) {
            return false;
        }
    }
    return true;
}

PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs)
{
    if (lhs.cols_ != rhs.rows_) {
        throw std::invalid_argument("PolyMatrix: dimension mismatch in product");
    }
    PolyMatrix out(lhs.rows_, rhs.cols_);
    for (int i = 0; i < lhs.rows_; ++i) {
        for (int j = 0; j < rhs.cols_; ++j) {
            Poly acc;
            for (int k = 0; k < lhs.cols_; ++k) {
                acc += lhs(i, k) * rhs(k, j);
            }
            out(i, j) = std::move(acc);
        }
    }
    return out;
}

PolyMatrix operator-(const PolyMatrix& lhs, const PolyMatrix& rhs)
{
    if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
        throw std::invalid_argument("PolyMatrix: dimension mismatch in difference");
    }
    PolyMatrix out(lhs.rows_, lhs.cols_);
    for (std::size_t i = 0; i < lhs.entries_.size(); ++i) {
        out.entries_[i] = lhs.entries_[i] - rhs.entries_[i];
    }
    return out;
}

} // namespace mop
