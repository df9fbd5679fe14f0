// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "utdirac/errors.hpp"
#include "utdirac/spectrum.hpp"

namespace utdirac {

enum class Coupling {
    Scalar, ///< Coulomb term added to the mass slot (beta-free)
    Vector, ///< conventional minimal coupling, Coulomb in the energy slot
};

/// Radial bound-state problem for the coupled (G, F) system on a log grid.
/// Radii are in 1/m units with m = mass (1 by convention).
struct RadialProblem {
    Coupling coupling = Coupling::Scalar;
    double Z = 1.0;
    int kappa = -1;
    int n_r = 0;
    double alpha = kAlphaDefault;
    double mass = 1.0;
    double r_min = 0.0;   ///< 0 = auto: 1e-6 / (Z m)
    double r_max = 0.0;   ///< 0 = auto: 40 / lambda_est
    int n_points = 4000;  ///< log-grid samples
    double e_tol = 1e-12; ///< bisection tolerance in E (mass units)
    int max_iter = 200;

    double zalpha() const { return Z * alpha; }
};

struct BoundState {
    double energy = 0.0; ///< in (-m, m)
    Eigen::ArrayXd r, G, F;
    int node_count = 0;
    bool converged = false;
    double residual = 0.0; ///< matching defect at convergence
};

/// Shooting/bisection eigen-solver: integrates outward with the indicial
/// series seed r^gamma (1 + c1 r) and inward with the exp(-lambda r) tail,
/// matching at the outer classical turning point. Finds the positive-branch
/// state with n_r radial nodes of G.
BoundState solve_bound(const RadialProblem& problem);

struct ScanPoint {
    double energy = 0.0;
    double defect = 0.0;
    int node_count = 0;
    bool sign_change = false; ///< defect changed sign since the previous sample
};

/// Matching-defect samples over [e_lo, e_hi] for bracket discovery.
std::vector<ScanPoint> eigen_scan(const RadialProblem& problem, double e_lo, double e_hi,
                                  int steps);

} // namespace utdirac
