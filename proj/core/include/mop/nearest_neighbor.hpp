#ifndef MOP_NEAREST_NEIGHBOR_HPP
#define MOP_NEAREST_NEIGHBOR_HPP

#include <vector>

#include "mop/numerics.hpp"
#include "mop/stepline.hpp"

namespace mop {

/// Nearest-neighbor coefficients at (n, m) for r = 2:
///
///   x P_{n,m} = P_{n+1,m} + c P_{n,m} + a P_{n-1,m} + b P_{n,m-1}
///   x P_{n,m} = P_{n,m+1} + d P_{n,m} + a P_{n-1,m} + b P_{n,m-1}
struct NNEntry {
    Rational a;
    Rational b;
    Rational c;
    Rational d;

    friend bool operator==(const NNEntry&, const NNEntry&) = default;
};

/// Triangular table of NNEntry over n + m <= max_len.
class NNGrid {
public:
    explicit NNGrid(int max_len);

    int max_len() const { return max_len_; }
    bool contains(int n, int m) const { return n >= 0 && m >= 0 && n + m <= max_len_; }

    const NNEntry& at(int n, int m) const;
    NNEntry& at(int n, int m);

    friend bool operator==(const NNGrid&, const NNGrid&) = default;

private:
    std::size_t offset(int n, int m) const;

    int max_len_;
    std::vector<NNEntry> entries_;
};

/// Three-term recurrence x P_n = P_{n+1} + b_n P_n + a_n^2 P_{n-1} of one measure.
/// Both vectors are indexed 0..size-1 and a_sq[0] = 0.
struct MarginalRecurrence {
    int measure_id = 1;
    std::vector<Rational> b;
    std::vector<Rational> a_sq;

    int size() const { return static_cast<int>(b.size()); }
    /// a_n^2 > 0 for n >= 1.
    bool is_positive() const;

    friend bool operator==(const MarginalRecurrence&, const MarginalRecurrence&) = default;
};

/// The one degree of freedom left by step-line data, c_0^{(0,0)} = d_{0,0} - beta_0.
class FreeParameter {
public:
    static FreeParameter raw_seed(Rational c00);
    /// d_{0,0} = m_1(mu_2) / m_0(mu_2), which selects mu_2 itself.
    static FreeParameter exact_mu2(Rational m0, Rational m1);

    Rational resolve(const Rational& beta0) const;

private:
    FreeParameter(bool from_moments, Rational first, Rational second);

    bool from_moments_;
    Rational first_;
    Rational second_;
};

/// Nearest-neighbor table over n + m <= max_len from cached shift families.
/// `e1` and `e2` must both be built with depth >= max_len.
NNGrid nn_from_families(const ShiftFamily& e1, const ShiftFamily& e2, int max_len);

/// Builds both shift families from the step-line and fills the table.
NNGrid nn_from_shifts(const StepLineCoeffs& level0, const Rational& c00_seed, int max_len);
NNGrid nn_from_shifts(const StepLineCoeffs& level0, const FreeParameter& seed, int max_len);

/// b_j(mu_1) = beta_j^{(j,0)}, a_j^2(mu_1) = gamma_j^{(j-1,0)}, j = 0..count-1.
MarginalRecurrence marginal_mu1(const ShiftFamily& e1, int count);

/// b_k(mu_2) = beta_k^{(0,k)} + c_0^{(0,k)}, a_k^2(mu_2) = gamma_k^{(0,k)}, k = 0..count-1.
MarginalRecurrence marginal_mu2(const ShiftFamily& e2, int count);

struct ForwardResult {
    NNGrid grid;
    MarginalRecurrence mu1;
    MarginalRecurrence mu2;
};

/// Step-line plus free parameter to the grid over n + m <= depth and both
/// marginal recurrences with indices 0..depth.
ForwardResult forward_pipeline(const StepLineCoeffs& level0, const FreeParameter& seed, int depth,
                               ShiftVariant variant = ShiftVariant::remark);

} // namespace mop

#endif // MOP_NEAREST_NEIGHBOR_HPP
