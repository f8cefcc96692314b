#include "mop/numerics.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "mop/errors.hpp"

namespace mop {

namespace {

mpz_class pow10(unsigned exponent)
{
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

/// q * 10^shift, exact, for any sign of shift.
mpq_class scale10(const mpq_class& q, long shift)
{
    mpq_class result(q);
    if (shift > 0) {
        result *= mpq_class(pow10(static_cast<unsigned>(shift)));
    } else if (shift < 0) {
        result /= mpq_class(pow10(static_cast<unsigned>(-shift)));
    }
    result.canonicalize();
    return result;
}

/// e with 10^e <= q < 10^(e+1), for q > 0.
long floor_log10(const mpq_class& q)
{
    long e = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 10))
             - static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 10));
    // sizeinbase can overshoot by one in each operand; settle by comparison.
    while (cmp(scale10(mpq_class(1), e), q) > 0) {
        --e;
    }
    while (cmp(scale10(mpq_class(1), e + 1), q) <= 0) {
        ++e;
    }
    return e;
}

/// floor(q + 1/2) for q >= 0.
mpz_class round_half_up(const mpq_class& q)
{
    mpz_class twice_num = 2 * q.get_num() + q.get_den();
    mpz_class twice_den = 2 * q.get_den();
    mpz_class result;
    mpz_fdiv_q(result.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
    return result;
}

long floor_div2(long value)
{
    return value >= 0 ? value / 2 : -((-value + 1) / 2);
}

bool all_digits(std::string_view text)
{
    if (text.empty()) {
        return false;
    }
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (!all_digits(text)) {
        throw ParseError(0, "not a rational number: '" + std::string(whole) + "'");
    }
    mpz_class value(std::string(text), 10);
    return negative ? mpz_class(-value) : value;
}

} // namespace

Rational::Rational(long long value)
    : value_(mpz_class(std::to_string(value), 10))
{
}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (sgn(den) == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value)
    : value_(value)
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ParseError(0, "empty rational");
    }

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(text.substr(0, slash), whole);
        const mpz_class den = parse_integer(text.substr(slash + 1), whole);
        if (sgn(den) == 0) {
            throw ParseError(0, "zero denominator in '" + std::string(whole) + "'");
        }
        return Rational(num, den);
    }

    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        const mpz_class exp_value = parse_integer(text.substr(e + 1), whole);
        if (!exp_value.fits_slong_p()) {
            throw ParseError(0, "exponent out of range in '" + std::string(whole) + "'");
        }
        exponent = exp_value.get_si();
        text = text.substr(0, e);
    }

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::string digits;
    long fraction_digits = 0;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view int_part = text.substr(0, dot);
        const std::string_view frac_part = text.substr(dot + 1);
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))
            || (int_part.empty() && frac_part.empty())) {
            throw ParseError(0, "not a rational number: '" + std::string(whole) + "'");
        }
        digits = std::string(int_part) + std::string(frac_part);
        fraction_digits = static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(text)) {
            throw ParseError(0, "not a rational number: '" + std::string(whole) + "'");
        }
        digits = std::string(text);
    }
    mpq_class value{mpz_class(digits, 10)};
    value = scale10(value, exponent - fraction_digits);
    if (negative) {
        value = -value;
    }
    return Rational(value);
}

std::string Rational::to_string() const
{
    if (value_.get_den() == 1) {
        return value_.get_num().get_str(10);
    }
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.to_string();
}

Rational abs(const Rational& q)
{
    return q.sign() < 0 ? -q : q;
}

Rational pow(const Rational& base, unsigned exponent)
{
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.get().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get().get_den_mpz_t(), exponent);
    return Rational(num, den);
}

Rational round_significant(const Rational& q, int digits)
{
    if (digits < 1) {
        throw DomainError("significant digits must be >= 1");
    }
    if (q.is_zero()) {
        return q;
    }
    const mpq_class magnitude = abs(q).get();
    const long shift = digits - 1 - floor_log10(magnitude);
    const mpz_class rounded = round_half_up(scale10(magnitude, shift));
    Rational result(scale10(mpq_class(rounded), -shift));
    return q.sign() < 0 ? -result : result;
}

std::string to_decimal(const Rational& q, int digits)
{
    if (digits < 1) {
        throw DomainError("significant digits must be >= 1");
    }
    if (q.is_zero()) {
        return "0";
    }
    const Rational rounded = round_significant(q, digits);
    const mpq_class magnitude = abs(rounded).get();
    const long exponent = floor_log10(magnitude);
    const mpq_class scaled = scale10(magnitude, digits - 1 - exponent);
    const std::string mantissa = scaled.get_num().get_str(10);

    std::string out = rounded.sign() < 0 ? "-" : "";
    const long width = static_cast<long>(mantissa.size());
    if (exponent >= width - 1) {
        out += mantissa;
        out.append(static_cast<std::size_t>(exponent - width + 1), '0');
    } else if (exponent < 0) {
        out += "0.";
        out.append(static_cast<std::size_t>(-exponent - 1), '0');
        out += mantissa;
    } else {
        const auto split = static_cast<std::size_t>(exponent + 1);
        out += mantissa.substr(0, split);
        out += ".";
        out += mantissa.substr(split);
    }
    return out;
}

Real::Real(const Rational& value, int digits)
    : value_(round_significant(value, digits))
    , digits_(digits)
{
}

Real operator+(const Real& lhs, const Real& rhs)
{
    return Real(lhs.value_ + rhs.value_, std::min(lhs.digits_, rhs.digits_));
}

Real operator-(const Real& lhs, const Real& rhs)
{
    return Real(lhs.value_ - rhs.value_, std::min(lhs.digits_, rhs.digits_));
}

Real operator*(const Real& lhs, const Real& rhs)
{
    return Real(lhs.value_ * rhs.value_, std::min(lhs.digits_, rhs.digits_));
}

Real operator/(const Real& lhs, const Real& rhs)
{
    return Real(lhs.value_ / rhs.value_, std::min(lhs.digits_, rhs.digits_));
}

std::ostream& operator<<(std::ostream& os, const Real& x)
{
    return os << x.to_string();
}

std::string to_decimal(const Real& x, int digits)
{
    return to_decimal(x.value(), digits);
}

Real sqrt_real(const Rational& q, int digits)
{
    if (digits < 1) {
        throw DomainError("significant digits must be >= 1");
    }
    if (q.sign() < 0) {
        throw DomainError("square root of negative number " + q.to_string());
    }
    if (q.is_zero()) {
        return Real(q, digits);
    }
    // sqrt(q) * 10^shift lies in [10^(digits-1), 10^digits).
    const long exponent = floor_div2(floor_log10(q.get()));
    const long shift = digits - 1 - exponent;
    const mpq_class radicand = scale10(q.get(), 2 * shift);

    mpz_class floor_radicand;
    mpz_fdiv_q(floor_radicand.get_mpz_t(), radicand.get_num_mpz_t(), radicand.get_den_mpz_t());
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), floor_radicand.get_mpz_t());

    // Round up when radicand >= (root + 1/2)^2, i.e. 4 * radicand >= (2 root + 1)^2.
    const mpz_class odd = 2 * root + 1;
    if (cmp(mpq_class(4) * radicand, mpq_class(odd * odd)) >= 0) {
        root += 1;
    }
    return Real(Rational(scale10(mpq_class(root), -shift)), digits);
}

std::string render(const Rational& q, int digits)
{
    return q.denominator() == 1 ? q.to_string() : to_decimal(q, digits);
}

} // namespace mop
