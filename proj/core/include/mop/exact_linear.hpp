#ifndef MOP_EXACT_LINEAR_HPP
#define MOP_EXACT_LINEAR_HPP

#include <optional>
#include <vector>

#include "mop/numerics.hpp"

namespace mop {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = rhs exactly for A with rows >= cols.
///
/// Each row is cleared of denominators, then eliminated with fraction-free
/// (Bareiss) integer steps. Returns nullopt when A has a nontrivial kernel or
/// when the rows beyond the rank are inconsistent with rhs.
std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& a, const std::vector<Rational>& rhs);

} // namespace mop

#endif // MOP_EXACT_LINEAR_HPP
