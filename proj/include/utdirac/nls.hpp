// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "utdirac/errors.hpp"
#include "utdirac/grid.hpp"

namespace utdirac {

enum class NlsMode {
    Cubic,    ///< N = g |psi|^2
    Choquard, ///< N = g |psi|^2 * (1D Poisson self-potential of |psi|^2)
};

/// State of the 1D periodic nonlinear Schroedinger evolution
/// i d_t psi = -(1/2m) d_xx psi + N[psi] psi.
struct NlsState {
    GridField psi;
    double g = -1.0;
    double mass = 1.0;
    NlsMode mode = NlsMode::Cubic;
    double dt = 1e-3;
    double t = 0.0;
};

/// Strang split-step evolution for a duration T (rounded to whole steps).
/// The spectral kinetic half-steps assume periodic boundaries. Throws when
/// the nonlinear phase per step exceeds the stability guard
/// dt * max|N| < 0.1, and (Choquard) when the grid has an even site count.
NlsState evolve(const NlsState& state, double T);

struct NlsInvariants {
    double norm = 0.0;   ///< int |psi|^2 dx
    double energy = 0.0; ///< int (1/2m)|psi_x|^2 + (g/2)|psi|^4 [* Phi in Choquard mode]
};

NlsInvariants conserved_quantities(const NlsState& state);

/// 1D self-potential: solution of Phi'' = -rho on the line,
/// Phi(x) = -(1/2) int |x - x'| rho(x') dx'. Requires an odd site count so
/// the kernel is centered.
Eigen::ArrayXd poisson_line(const Eigen::ArrayXd& rho, double dx);

/// Expectation values of the four nonrelativistic Hamiltonian terms for a
/// normalized two-component field on a 3D grid:
///   kinetic    (1/2m) int |grad psi|^2
///   electric   e int Phi |psi|^2
///   zeeman     -(e/2m) <(l + 2s).B>   (uniform B, A = B x r / 2)
///   spin_orbit -(e/2m^2) <(1/r^2)(r . grad Phi)(s.l)>   (reversed sign)
struct HamiltonianTerms {
    double kinetic = 0.0;
    double electric = 0.0;
    double zeeman = 0.0;
    double spin_orbit = 0.0;
};

HamiltonianTerms hamiltonian_terms(const GridField& psi, const GridField& phi,
                                   const Eigen::Vector3d& B, double e = 1.0, double mass = 1.0);

} // namespace utdirac
