#ifndef MOP_ERRORS_HPP
#define MOP_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "mop/common.hpp"

namespace mop {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (negative sqrt, zero mass, division by zero).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Access to an index that a table does not cover.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Shift cannot start: gamma_j at the previous level vanishes.
class InitError : public Error {
public:
    InitError(Axis axis, int level, std::string what);
    Axis axis() const { return axis_; }
    int level() const { return level_; }

private:
    Axis axis_;
    int level_;
};

/// A Riccati denominator vanished while building shift level `level`.
class NormalityError : public Error {
public:
    NormalityError(Axis axis, int level, int n, int index, std::string denominator);
    Axis axis() const { return axis_; }
    int level() const { return level_; }
    /// Position in the c-sequence recursion.
    int n() const { return n_; }
    /// Step-line index of the vanishing delta.
    int index() const { return index_; }
    const std::string& denominator() const { return denominator_; }

private:
    Axis axis_;
    int level_;
    int n_;
    int index_;
    std::string denominator_;
};

/// Caller-provided c_0 seed disagrees with the value forced by the data.
class SeedMismatch : public Error {
public:
    using Error::Error;
};

/// Zero divisor b_{n,i} - b_{n,j} (c_{n,m} - d_{n,m} for r=2) in the inverse sweep.
class SingularSweepError : public Error {
public:
    SingularSweepError(MultiIndex index, int i, int j);
    const MultiIndex& index() const { return index_; }
    int i() const { return i_; }
    int j() const { return j_; }

private:
    MultiIndex index_;
    int i_;
    int j_;
};

/// Moment system for a multi-index is singular.
class NonNormalIndexError : public Error {
public:
    explicit NonNormalIndexError(MultiIndex index);
    const MultiIndex& index() const { return index_; }

private:
    MultiIndex index_;
};

class InternalError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; line is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

} // namespace mop

#endif // MOP_ERRORS_HPP
