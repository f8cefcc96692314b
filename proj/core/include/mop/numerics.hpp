#ifndef MOP_NUMERICS_HPP
#define MOP_NUMERICS_HPP

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mop {

/// Exact rational number with arbitrary-size numerator and denominator.
///
/// Every recursion in the library runs over this field. Division by zero
/// throws DomainError instead of trapping inside GMP.
class Rational {
public:
    Rational() = default;
    Rational(int value) : value_(value) {}                       // NOLINT(implicit)
    Rational(long value) : value_(value) {}                      // NOLINT(implicit)
    Rational(long long value);                                   // NOLINT(implicit)
    Rational(const mpz_class& num, const mpz_class& den = 1);
    explicit Rational(const mpq_class& value);

    /// Parses "p", "p/q", "-p/q" and plain decimals such as "-0.125".
    static Rational parse(std::string_view text);

    const mpq_class& get() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    /// "p/q", or "p" for integers.
    std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
    {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);

/// Raises to a nonnegative integer power.
Rational pow(const Rational& base, unsigned exponent);

/// Nearest value with `digits` significant decimal digits; ties round away from zero.
Rational round_significant(const Rational& q, int digits);

/// Correctly rounded decimal rendering with `digits` significant digits,
/// positional notation, trailing zeros kept ("1.00" for (1, 3)).
std::string to_decimal(const Rational& q, int digits);

/// Table rendering: integers as written, other values as to_decimal.
std::string render(const Rational& q, int digits);

/// Working precision used when none is requested explicitly.
inline constexpr int default_digits = 25;

/// Real number carried at a declared precision (significant decimal digits).
///
/// Stored as the exact decimal it rounds to, so rendering at or below the tag
/// is exact. Binary operations adopt the smaller precision of their operands.
class Real {
public:
    Real(const Rational& value, int digits);

    const Rational& value() const { return value_; }
    int digits() const { return digits_; }

    std::string to_string() const { return to_decimal(value_, digits_); }

    friend Real operator+(const Real& lhs, const Real& rhs);
    friend Real operator-(const Real& lhs, const Real& rhs);
    friend Real operator*(const Real& lhs, const Real& rhs);
    friend Real operator/(const Real& lhs, const Real& rhs);

    friend bool operator==(const Real&, const Real&) = default;

private:
    Rational value_;
    int digits_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

std::string to_decimal(const Real& x, int digits);

/// Square root correctly rounded to `digits` significant digits.
/// Throws DomainError for negative input.
Real sqrt_real(const Rational& q, int digits);

} // namespace mop

#endif // MOP_NUMERICS_HPP
