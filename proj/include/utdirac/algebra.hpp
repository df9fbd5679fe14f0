// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <functional>

#include "utdirac/fourvector.hpp"
#include "utdirac/grid.hpp"

namespace utdirac {

using Matrix4c = Eigen::Matrix4cd;
using Spinor4 = Eigen::Vector4cd;

/// Pauli matrix sigma_i, i in {1,2,3}.
Eigen::Matrix2cd pauli(int i);

/// Dirac gamma matrix in the standard (Bjorken-Drell) representation.
/// gamma(0) = diag(1,1,-1,-1); spatial ones are off-diagonal Pauli blocks.
Matrix4c gamma(int mu);

/// 4x4 analogues of the Pauli matrices built from 2x2 identity blocks.
Matrix4c rho(int i);

/// Unitary U = (1/sqrt2) [[I, iI],[iI, I]] with U rho2 U^-1 = -rho3.
Matrix4c diagonalizer_u();

enum class DiscreteOp {
    SpaceInversion,     ///< S_s = gamma^0
    TimeInversionSpinor,///< T_s = gamma^1 gamma^2 gamma^3
    ParticleConjMatrix, ///< O_s = i gamma^0 gamma^1 gamma^3
};

Matrix4c discrete_operator(DiscreteOp kind);

/// Spinor representation of a restricted Lorentz transformation a:
/// L = exp(-(i/2) w_{mu nu} S^{mu nu}) with w from the principal matrix log
/// of a, satisfying the standard intertwining L^-1 gamma^mu L = a^mu_nu gamma^nu.
/// Throws DomainError for non-Lorentz or non-restricted input.
Matrix4c spinor_lorentz(const Eigen::Matrix4d& a);

/// Same exponential map from explicit antisymmetric generator coefficients
/// w_{mu nu} (both indices down). Covers curves the principal log cannot
/// reach, e.g. a full 2*pi rotation giving L = -I.
Matrix4c spinor_lorentz_from_generator(const Eigen::Matrix4d& omega_lower);

/// The Lorentz matrix generated by w_{mu nu}: a = exp(g^{-1} w).
Eigen::Matrix4d lorentz_from_generator(const Eigen::Matrix4d& omega_lower);

/// Constant-potential energy operator rho1 sigma.(p - e aI) + rho3 (m + e phiI)
/// as an explicit 4x4 matrix. Its spectrum is symmetric under negation.
Matrix4c energy_operator_matrix(const Eigen::Vector3d& p, double phi_i,
                                const Eigen::Vector3d& a_i, double e = 1.0, double mass = 1.0);

using ScalarFieldFn = std::function<Complex(const FourVector&)>;
/// grad[nu] = d f / d x^nu (derivative w.r.t. the contravariant coordinate).
using GradientFn = std::function<std::array<Complex, 4>(const FourVector&)>;

/// Scalar coefficient of [gamma.X, gamma.i d] applied to a test field,
/// expanded term by term via the product rule and projected on the identity
/// by trace; equals -4i for any point and polynomial test field.
Complex common_commutator_check(const FourVector& x, const ScalarFieldFn& f,
                                const GradientFn& grad_f);

/// Default test field f = 1.
Complex common_commutator_check(const FourVector& x);

/// Coordinate time inversion Psi'(t,x) = Psi(-t,x) on a time-symmetric 1+1 grid.
GridField time_reverse(const GridField& field);

/// Time-parity projector (1 +- T)/2; idempotent, the two projections sum to
/// the original samples exactly.
GridField time_parity_project(const GridField& field, int parity);

/// Particle conjugation in common space: i gamma^0 gamma^1 gamma^3 Psi^*.
GridField particle_conjugate(const GridField& psi);

} // namespace utdirac
