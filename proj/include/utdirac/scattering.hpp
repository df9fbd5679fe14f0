// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "utdirac/algebra.hpp"
#include "utdirac/errors.hpp"
#include "utdirac/fourvector.hpp"

namespace utdirac {

/// Free positive-energy spinor u(p, s), normalized so ubar u = 1.
/// s = 0 (up) or 1 (down) labels the rest-frame spin projection.
struct PlaneWaveSpinor {
    FourVector p;   ///< on-shell four-momentum
    Spinor4 u;      ///< column spinor
    double mass = 1.0;
};

PlaneWaveSpinor spinor_u(const FourVector& p, int s, double mass);

/// Dirac adjoint row: ubar = u^dagger gamma^0.
Eigen::RowVector4cd bar(const Spinor4& u);

/// Spin sum projector sum_s u(p,s) ubar(p,s) = (gamma.p + m) / (2m).
Matrix4c spin_sum_projector(const FourVector& p, double mass);

/// Spin-averaged |ubar(pf) gamma^0 u(pi)|^2, summed over final and averaged
/// over initial spins, by explicit spinor construction.
double sigma1_brute(const FourVector& pi, const FourVector& pf, double mass);

/// Same quantity in closed form: (1/2) (1 + pi.pf / m^2).
double sigma1_closed(const FourVector& pi, const FourVector& pf, double mass);

/// Elastic electron scattering kinematics off a target of mass M, in the lab
/// frame, with the beam energy E and scattering angle theta. The derived
/// members use the standard high-energy (massless-beam) relations.
struct ScatterKinematics {
    double E = 0.0;     ///< beam energy
    double theta = 0.0; ///< lab scattering angle (radians)
    double M = 0.0;     ///< target mass
    double m = 0.0;     ///< beam mass

    double e_final() const;    ///< E' = E / (1 + (2E/M) sin^2(theta/2))
    double q_squared() const;  ///< q^2 = -4 E' E sin^2(theta/2)
    double p_magnitude() const { return std::sqrt(std::max(E * E - m * m, 0.0)); }
};

/// Exact on-shell two-body elastic kinematics (beam mass kept), solved
/// numerically for the final beam energy at the given lab angle.
struct ElasticEvent {
    FourVector pi, pf; ///< beam before / after
    FourVector Pi, Pf; ///< target before / after
    double q2 = 0.0;   ///< (pf - pi)^2, spacelike negative
};

ElasticEvent elastic_event(const ScatterKinematics& kin);

/// Target-side spin factor: spin-averaged |ubar(Pf) Gamma u(Pi)|^2 for the
/// pointlike vector vertex, contracted with the beam tensor. Brute-force
/// route builds all spinors; closed route evaluates the exact invariant
/// contraction; the high-energy route uses the massless-beam closed form
/// (E'E/m^2) cos^2(theta/2) [1 - (q^2 / 2M^2) tan^2(theta/2)].
double sigma2_brute(const ElasticEvent& ev, double m, double M);
double sigma2_closed(const ElasticEvent& ev, double m, double M);
double sigma2_high_energy(const ScatterKinematics& kin);

/// Coulomb differential cross section off a static charge Z,
/// dsigma/dOmega = Z^2 alpha^2 m^2 / (p^4 sin^4(theta/2)) * [1 + (p^2/m^2) sin^2(theta/2)],
/// i.e. 16 (Z alpha m / q^2)^2 sigma1 with the constant prefactor dropped.
/// Throws ForwardDivergence below theta_min.
double dcs_coulomb(double E, double theta, double Z, double alpha, double mass,
                   double theta_min = 1e-6);

/// Rutherford form in the same normalization: Z^2 alpha^2 m^2 / (p^4 sin^4(theta/2)).
/// dcs_coulomb / rutherford = 1 + (p^2/m^2) sin^2(theta/2) identically.
double rutherford(double E, double theta, double Z, double alpha, double mass);

/// Fourier transform of the Coulomb potential: -Z alpha / |q|^2.
double fourier_potential_coulomb(double q_mag, double Z, double alpha);

/// Brute-force sigma2 at the given lab kinematics (exact on-shell event).
double sigma2(const ScatterKinematics& kin);

enum class EpMode { ExactSigma1, HighESigma1 };

/// Electron-proton (pointlike) elastic cross section, assembled as
/// (alpha^2 m^4 E'/(q^4 E^3)) * Sigma1 * Sigma2 in the same constant-free
/// normalization as dcs_coulomb. In the high-energy mode it reduces to
/// (alpha^2/E^2) cot^2(theta/2) [1 - (q^2/2M^2) tan^2(theta/2)] / [1 + (2E/M) sin^2(theta/2)].
double dcs_ep(const ScatterKinematics& kin, double alpha,
              EpMode mode = EpMode::HighESigma1, double theta_min = 1e-6);

/// Conventional Mott-with-recoil benchmark:
/// (alpha^2 cos^2(theta/2) / (4 E^2 sin^4(theta/2))) (E'/E) [1 - (q^2/2M^2) tan^2(theta/2)].
double dcs_ep_conventional(const ScatterKinematics& kin, double alpha,
                           double theta_min = 1e-6);

} // namespace utdirac
