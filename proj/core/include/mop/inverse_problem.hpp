#ifndef MOP_INVERSE_PROBLEM_HPP
#define MOP_INVERSE_PROBLEM_HPP

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mop/common.hpp"
#include "mop/nearest_neighbor.hpp"
#include "mop/numerics.hpp"
#include "mop/polynomial.hpp"
#include "mop/stepline.hpp"

namespace mop {

/// Nearest-neighbor coefficients for general r, stored per multi-index:
///
///   x P_n = P_{n+e_k} + b_{n,k} P_n + sum_j a_{n,j} P_{n-e_j},  k = 1..r.
///
/// Directions are 0-based in this API (direction 0 is e_1).
class NNGridR {
public:
    struct Entry {
        std::vector<Rational> a;
        std::vector<Rational> b;

        friend bool operator==(const Entry&, const Entry&) = default;
    };

    NNGridR(int r, int max_len);

    /// r = 2 view: c = b_{.,1}, d = b_{.,2}, a = a_{.,1}, b = a_{.,2}.
    static NNGridR from_r2(const NNGrid& grid);
    NNGrid to_r2() const;

    int r() const { return r_; }
    int max_len() const { return max_len_; }

    bool contains(const MultiIndex& index) const;
    const Entry& at(const MultiIndex& index) const;
    void set(const MultiIndex& index, Entry entry);

    const Rational& a(const MultiIndex& index, int j) const;
    const Rational& b(const MultiIndex& index, int k) const;

    /// Multi-indices stored, by increasing length.
    std::vector<MultiIndex> indices() const;

    friend bool operator==(const NNGridR&, const NNGridR&) = default;

private:
    int r_;
    int max_len_;
    std::unordered_map<MultiIndex, Entry, MultiIndexHash> entries_;
};

/// Nearest-neighbor table over n + m <= max_len from the two marginal
/// recurrences (indices 0..max_len each), by the anti-diagonal sweep: interior
/// a and b, then c, then d, with the axes fixed by the marginal data.
/// Throws SingularSweepError at (n, m) when c_{n,m} = d_{n,m} is needed as a divisor.
NNGrid nn_from_marginals_r2(const MarginalRecurrence& mu1, const MarginalRecurrence& mu2, int max_len);

/// Step-line coefficients at indices 0..max_index from a nearest-neighbor table.
/// Needs entries up to length max_index.
StepLineCoeffs stepline_from_nn(const NNGrid& grid, int max_index);

enum class DirectionChoice { smallest, largest };

struct GeneralSweepOptions {
    /// Which j != i (with m_j >= 1) feeds the a- and b-updates.
    DirectionChoice choice = DirectionChoice::smallest;
    /// Recompute with the other choice where one exists and require agreement.
    bool cross_check = false;
};

/// General-r inverse sweep by induction on |n|.
NNGridR nn_from_marginals_general_r(std::span<const MarginalRecurrence> marginals, int max_len,
                                    const GeneralSweepOptions& options = {});

/// (r+1) x (r+1) transfer matrix R_k(n) with Y_{n+e_k} = R_k(n) Y_n,
/// Y_n = (P_n, P_{n-e_1}, ..., P_{n-e_r}). Components with a negative index are
/// zero polynomials, so the row for P_{n+e_k-e_l} vanishes when l != k and n_l = 0.
PolyMatrix transfer_matrix(const NNGridR& grid, const MultiIndex& index, int k);

struct CompatibilityResult {
    bool ok = false;
    /// R_i(n+e_j) R_j(n) - R_j(n+e_i) R_i(n)
    PolyMatrix residual{0, 0};
};

/// Compares both ways of reaching n + e_i + e_j as polynomial matrix identities.
CompatibilityResult compatibility_check(const NNGridR& grid, const MultiIndex& index, int i, int j);

/// One failed partial-difference identity.
struct PdViolation {
    std::string equation;
    MultiIndex index;
    int i = 0;
    int j = 0;
    Rational residual;
};

/// Residuals of the r = 2 partial-difference equations over every (n, m) where
/// all terms are in the grid. The ratio identities are checked cross-multiplied.
/// Empty result means every identity holds exactly.
std::vector<PdViolation> pd_residuals_r2(const NNGrid& grid);

/// Same for general r: the b-difference, a-sum determinant and a-ratio identities
/// for every ordered pair i != j.
std::vector<PdViolation> pd_residuals(const NNGridR& grid);

} // namespace mop

#endif // MOP_INVERSE_PROBLEM_HPP
