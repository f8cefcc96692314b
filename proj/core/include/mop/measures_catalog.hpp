#ifndef MOP_MEASURES_CATALOG_HPP
#define MOP_MEASURES_CATALOG_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mop/nearest_neighbor.hpp"
#include "mop/numerics.hpp"
#include "mop/polynomial_oracle.hpp"
#include "mop/stepline.hpp"

namespace mop {

/// Finitely supported positive measure sum_i w_i delta_{x_i}.
struct DiscreteMeasure {
    std::vector<Rational> support;
    std::vector<Rational> weights;

    /// Throws DomainError unless points are distinct and weights positive.
    void validate() const;
    int size() const { return static_cast<int>(support.size()); }
    Rational mass() const;

    friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;
};

/// Step-line coefficients (level 0, indices 0..max_index) of the multiple
/// orthogonal polynomials for the weights x^alpha rho_nu, x^alpha rho_{nu+1},
/// rho_nu(x) = 2 x^{nu/2} K_nu(2 sqrt x) on [0, inf):
///
///   beta_n  = (n+a+1)(3n+a+2v) - (a+1)(v-1)
///   gamma_n = n(n+a)(n+a+v)(3n+2a+v)
///   delta_n = n(n-1)(n+a)(n+a-1)(n+a+v)(n+a+v-1)
StepLineCoeffs bessel_stepline(const Rational& alpha, const Rational& nu, int max_index);

/// Moments 0..max_degree of the two weights above for integer alpha, nu >= 0,
/// both divided by 2:
///   m_k(mu_1) = (k+a+v)! (k+a)!,  m_k(mu_2) = (k+a+v+1)! (k+a)!.
MomentTable bessel_moments(int alpha, int nu, int max_degree);

/// m_k = sum_i w_i x_i^k, k = 0..max_degree.
std::vector<Rational> moments(const DiscreteMeasure& measure, int max_degree);

MomentTable moment_table(const std::vector<DiscreteMeasure>& measures, int max_degree);

/// Three-term recurrence of the measure by the discrete Stieltjes procedure,
/// indices 0..count-1. Needs count <= support size.
MarginalRecurrence stieltjes_recurrence(const DiscreteMeasure& measure, int count, int measure_id = 1);

/// Reproducible random measure system: `size` distinct points p/q with
/// |p/q| <= spread, positive rational weights, pairwise distinct b_0.
std::vector<DiscreteMeasure> random_system(std::uint64_t seed, int r, int size, int spread = 4);

std::pair<DiscreteMeasure, DiscreteMeasure> random_pair(std::uint64_t seed, int size, int spread = 4);

/// lambda * a + (1 - lambda) * b on the union of supports; 0 <= lambda <= 1.
DiscreteMeasure convex_combination(const DiscreteMeasure& a, const DiscreteMeasure& b, const Rational& lambda);

} // namespace mop

#endif // MOP_MEASURES_CATALOG_HPP
