#ifndef MOP_STEPLINE_HPP
#define MOP_STEPLINE_HPP

#include <optional>
#include <vector>

#include "mop/common.hpp"
#include "mop/indexed_sequence.hpp"
#include "mop/numerics.hpp"

namespace mop {

/// Four-term recurrence data of a (shifted) step-line, r = 2:
///
///   x p_n = p_{n+1} + beta_n p_n + gamma_n p_{n-1} + delta_n p_{n-2}.
///
/// Level 0 is the unshifted step-line and is shared by both axes. On axis e1
/// level j covers indices j.., with gamma_j = delta_j = delta_{j+1} = 0.
/// On axis e2 level k+1 covers indices k.., with gamma_k = delta_k = delta_{k+1} = 0.
struct StepLineCoeffs {
    Axis axis = Axis::e1;
    int level = 0;
    IndexedSeq beta;
    IndexedSeq gamma;
    IndexedSeq delta;

    /// Unshifted step-line from dense columns indexed 0..size-1.
    ///
    /// gamma_0, delta_0 and delta_1 multiply p_{-1}, p_{-2} and must be zero.
    static StepLineCoeffs level_zero(const std::vector<Rational>& beta, const std::vector<Rational>& gamma,
                                     const std::vector<Rational>& delta);

    int first_index() const { return beta.lo(); }
    /// Largest index for which beta, gamma and delta are all available.
    int last_index() const;
};

/// Auxiliary sequence c_n^{(j,0)} (axis e1) or c_n^{(0,k)} (axis e2), n = 0..
struct CSequence {
    Axis axis = Axis::e1;
    int level = 0;
    IndexedSeq values;

    const Rational& at(int n) const { return values.at(n); }
};

/// Update order inside one shift level.
enum class ShiftVariant {
    /// delta_{i+1} at the new level from the product identity, then c_n.
    remark,
    /// c_n from the Riccati recursion first, then beta, gamma, delta.
    original,
};

struct ShiftResult {
    StepLineCoeffs next;
    CSequence c;
};

/// Level j on axis e1 from level j-1 (j >= 1). Produces indices j..2*depth-j+1
/// together with c_n^{(j,0)} for n = 0..depth-j. Requires depth >= j and the
/// previous level up to index 2*depth-j+1.
ShiftResult shift_e1(const StepLineCoeffs& prev, int depth, ShiftVariant variant = ShiftVariant::remark);

/// Level k+1 on axis e2 from level k. Produces indices k..2*depth-k+1 and
/// c_n^{(0,k)} for n = 0..depth-k.
///
/// At k = 0 the seed c_0^{(0,0)} is a free parameter and must be supplied.
/// For k >= 1 the data force c_0^{(0,k)} = delta_{k+1}/gamma_k; a supplied
/// seed is checked against it (SeedMismatch).
ShiftResult shift_e2(const StepLineCoeffs& prev, const std::optional<Rational>& c0_seed, int depth,
                     ShiftVariant variant = ShiftVariant::remark);

/// c_0^{(0,0)} = m_1(mu_2)/m_0(mu_2) - beta_0.
Rational seed_c00(const Rational& m0_mu2, const Rational& m1_mu2, const Rational& beta0);

/// d_n = 1/c_n by the explicit sum-product solution of the linearised Riccati
/// equation. `prev` is level-1 data for axis e1 and level data for axis e2
/// (the coefficients the Riccati recursion at `level` reads).
Rational riccati_closed_form(Axis axis, int level, const StepLineCoeffs& prev, const Rational& d0, int n);

/// Shift levels along one axis, built in order from level 0.
///
/// Axis e1: levels 0..depth, c-sequences for levels 1..depth.
/// Axis e2: levels 0..depth+1, c-sequences for levels 0..depth.
class ShiftFamily {
public:
    ShiftFamily(Axis axis, int depth);

    Axis axis() const { return axis_; }
    int depth() const { return depth_; }

    const StepLineCoeffs& level(int index) const;
    const CSequence& c(int level) const;
    int levels() const { return static_cast<int>(levels_.size()); }

    void push_level(StepLineCoeffs coeffs);
    void push_c(CSequence c);

private:
    Axis axis_;
    int depth_;
    std::vector<StepLineCoeffs> levels_;
    std::vector<CSequence> c_;
};

ShiftFamily build_e1_family(const StepLineCoeffs& level0, int depth, ShiftVariant variant = ShiftVariant::remark);
ShiftFamily build_e2_family(const StepLineCoeffs& level0, const Rational& c00, int depth,
                            ShiftVariant variant = ShiftVariant::remark);

} // namespace mop

#endif // MOP_STEPLINE_HPP
