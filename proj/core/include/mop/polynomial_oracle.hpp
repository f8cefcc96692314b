#ifndef MOP_POLYNOMIAL_ORACLE_HPP
#define MOP_POLYNOMIAL_ORACLE_HPP

#include <unordered_map>
#include <vector>

#include "mop/common.hpp"
#include "mop/inverse_problem.hpp"
#include "mop/nearest_neighbor.hpp"
#include "mop/numerics.hpp"
#include "mop/polynomial.hpp"
#include "mop/stepline.hpp"

namespace mop {

/// Power moments m_k(mu_i), k = 0..K_i, of r measures.
class MomentTable {
public:
    MomentTable() = default;
    explicit MomentTable(std::vector<std::vector<Rational>> per_measure);

    int r() const { return static_cast<int>(moments_.size()); }
    /// Highest moment degree available for measure i (0-based).
    int max_degree(int measure) const;
    const Rational& moment(int measure, int k) const;
    const std::vector<Rational>& of(int measure) const;

private:
    std::vector<std::vector<Rational>> moments_;
};

/// Type II polynomial P_n by solving the |n| x |n| orthogonality system
///   sum_i c_i m_{i+k}(mu_j) = -m_{|n|+k}(mu_j),  0 <= k < n_j.
/// Throws NonNormalIndexError when the system is singular.
Poly mop_from_moments(const MomentTable& moments, const MultiIndex& index);

/// Nearest-neighbor coefficients at one multi-index: a_{n,j} and b_{n,k}, j,k = 1..r (0-based vectors).
struct NNCoefficients {
    std::vector<Rational> a;
    std::vector<Rational> b;
};

/// Brute-force source of type II polynomials and their recurrence coefficients,
/// memoised per multi-index.
class MopOracle {
public:
    explicit MopOracle(MomentTable moments);

    const MomentTable& moments() const { return moments_; }
    int r() const { return moments_.r(); }

    const Poly& polynomial(const MultiIndex& index);

    /// Expands x P_n - P_{n+e_k} over {P_n, P_{n-e_1}, ..., P_{n-e_r}} for every
    /// k and checks that the a-part is shared across k (InternalError otherwise).
    NNCoefficients nn(const MultiIndex& index);

private:
    MomentTable moments_;
    std::unordered_map<MultiIndex, Poly, MultiIndexHash> cache_;
};

NNCoefficients nn_oracle(const MomentTable& moments, const MultiIndex& index);

/// Oracle table over |n| <= max_len.
NNGridR nn_oracle_grid(const MomentTable& moments, int max_len);

/// Ordinary recurrence b_n, a_n^2 (n = 0..count-1) of one measure from its moments.
MarginalRecurrence marginal_oracle(const std::vector<Rational>& moments, int count, int measure_id = 1);

/// P_target built by iterating the nearest-neighbor recurrence along `path`
/// (a sequence of 0-based directions from the origin). Lower neighbours off
/// the path are generated with the smallest admissible direction.
Poly eval_chain(const NNGridR& grid, const std::vector<int>& path);

/// eval_chain along the path that raises direction 0 first, then 1, ...
Poly eval_chain(const NNGridR& grid, const MultiIndex& target);

/// Step-line polynomial p_m from the four-term recurrence (level 0 data).
Poly eval_chain(const StepLineCoeffs& stepline, int step_index);

/// residual_k = sum_i coeff_i(p) m_{i+k}(mu_measure), k = 0..upto.
std::vector<Rational> orthogonality_residuals(const Poly& p, const MomentTable& moments, int measure, int upto);

} // namespace mop

#endif // MOP_POLYNOMIAL_ORACLE_HPP
