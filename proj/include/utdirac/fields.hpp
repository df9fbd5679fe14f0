// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>

#include "utdirac/errors.hpp"
#include "utdirac/grid.hpp"

namespace utdirac {

/// Static Poisson potential Phi(x) = int source(x') / (4 pi |x - x'|) d3x'
/// by direct kernel summation over nonzero source cells (midpoint rule).
/// The self-cell uses the equivalent-sphere regularization of 1/r.
/// Grids above 64 sites per axis are refused (O(N^2) cost guard).
GridField greens_poisson(const GridField& source);

/// Nonlinear interaction potentials: PhiI(x) = (psi^dag psi)(x) * Phi_p(x)
/// and AI_k(x) = (psibar psi)(x) * A_p,k(x), where Phi_p / A_p,k are the
/// Poisson potentials of the charge density and current components.
/// psi is a 4-component field on a 3D grid; rho_p is scalar; current_p has
/// 3 components (may be null for a pure electrostatic source).
struct InteractionPotentials {
    GridField phi; ///< scalar
    GridField a;   ///< 3 components
};
InteractionPotentials interaction_potentials(const GridField& psi_e, const GridField& rho_p,
                                             const GridField* current_p = nullptr,
                                             double e_p = 1.0);

/// Convolution potential V(x) = e * sum_x' J^mu(x') A_mu(x - x') cellvol with
/// the Minkowski contraction (both fields given in contravariant components,
/// 4 components each, same grid). Displacements falling outside the grid are
/// refused (no wraparound).
GridField convolution_potential(const GridField& J, const GridField& A, double e = 1.0);

/// Max-norm of gamma^mu (i d_mu - e A^T_mu) psi - m psi over interior sites
/// of a (1+1) spacetime grid (axis 0 = t, axis 1 = z; gamma^0 and gamma^3
/// act along the grid axes). A_T carries covariant components A^T_mu and may
/// be null for a free field. Central differences, boundary layer excluded.
double equation_residual(const GridField& psi, const GridField* a_t, double e, double mass);

/// Gauge-function family over odd powers of the scalar density s:
/// f = sum_n C_n s^n, alpha = e (sum_{n != -1} (n/(n+1)) C_n s^{n+1}
///                               - C_{-1} log|s|).
struct GaugeCoefficients {
    std::map<int, double> terms; ///< odd n -> C_n

    void validate() const {
        for (const auto& [n, c] : terms)
            if (n % 2 == 0) throw DomainError("GaugeCoefficients: exponents must be odd");
    }
};

GridField gauge_f(const GridField& s, const GaugeCoefficients& c);
GridField gauge_alpha(const GridField& s, const GaugeCoefficients& c, double e);

/// Max-norm of d_mu alpha - e s d_mu f via central differences (interior
/// sites); an analytic identity, so it converges to 0 at O(h^2).
double gauge_constraint_residual(const GridField& s, const GaugeCoefficients& c, double e);

/// Measured max-norm of the discrete d'Alembertian of psibar psi on a (1+1)
/// grid. Reports the value; no zero assertion (superpositions give a finite
/// cross term).
double dalembert_density_residual(const GridField& psi);

/// Scalar density psibar psi (real part) of a 4-component field.
GridField scalar_density(const GridField& psi);

/// Multiply every component of a field by a scalar (1-component) field.
GridField scale_by_density(const GridField& a, const GridField& s);

/// Local gauge transformation psi' = psi e^{-i alpha(s)}, A'_mu = A_mu + d_mu f(s).
struct GaugePair {
    GridField psi;
    GridField a;
};
GaugePair gauge_transform(const GridField& psi, const GridField& a, const GridField& s,
                          const GaugeCoefficients& c, double e);

/// Fluctuation mass squared mu^2(x) = -2 eps_rho(x) kap^rho(x)
/// = -2 (eps0 kap0 - eps.kap) pointwise; both fields have 4 components.
GridField fluctuation_mass_sq(const GridField& eps, const GridField& kap);

} // namespace utdirac
