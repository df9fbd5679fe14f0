// SPDX-License-Identifier: Apache-2.0
#include "utdirac/algebra.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace utdirac {

namespace {
const Complex kI{0.0, 1.0};

Eigen::Matrix4d minkowski_metric() {
    Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
    g.diagonal() << 1.0, -1.0, -1.0, -1.0;
    return g;
}
} // namespace

Eigen::Matrix2cd pauli(int i) {
    Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
    switch (i) {
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, -kI, kI, 0; break;
        case 3: s << 1, 0, 0, -1; break;
        default: throw DomainError("pauli: index must be 1..3");
    }
    return s;
}

Matrix4c gamma(int mu) {
    Matrix4c g = Matrix4c::Zero();
    if (mu == 0) {
        g.diagonal() << 1, 1, -1, -1;
    } else if (mu >= 1 && mu <= 3) {
        const Eigen::Matrix2cd s = pauli(mu);
        g.block<2, 2>(0, 2) = s;
        g.block<2, 2>(2, 0) = -s;
    } else {
        throw DomainError("gamma: index must be 0..3");
    }
    return g;
}

Matrix4c rho(int i) {
    Matrix4c r = Matrix4c::Zero();
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    switch (i) {
        case 1:
            r.block<2, 2>(0, 2) = id;
            r.block<2, 2>(2, 0) = id;
            break;
        case 2:
            r.block<2, 2>(0, 2) = -kI * id;
            r.block<2, 2>(2, 0) = kI * id;
            break;
        case 3:
            r.block<2, 2>(0, 0) = id;
            r.block<2, 2>(2, 2) = -id;
            break;
        default: throw DomainError("rho: index must be 1..3");
    }
    return r;
}

Matrix4c diagonalizer_u() {
    Matrix4c u = Matrix4c::Zero();
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    u.block<2, 2>(0, 0) = id;
    u.block<2, 2>(0, 2) = kI * id;
    u.block<2, 2>(2, 0) = kI * id;
    u.block<2, 2>(2, 2) = id;
    return u / std::sqrt(2.0);
}

Matrix4c discrete_operator(DiscreteOp kind) {
    switch (kind) {
        case DiscreteOp::SpaceInversion: return gamma(0);
        case DiscreteOp::TimeInversionSpinor: return gamma(1) * gamma(2) * gamma(3);
        case DiscreteOp::ParticleConjMatrix: return kI * gamma(0) * gamma(1) * gamma(3);
    }
    throw DomainError("discrete_operator: unknown kind");
}

Matrix4c spinor_lorentz_from_generator(const Eigen::Matrix4d& omega_lower) {
    Matrix4c exponent = Matrix4c::Zero();
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            if (omega_lower(mu, nu) == 0.0) continue;
            // S^{mu nu} = (i/4) [gamma^mu, gamma^nu]
            const Matrix4c s = (kI / 4.0) * (gamma(mu) * gamma(nu) - gamma(nu) * gamma(mu));
            exponent += (-kI / 2.0) * omega_lower(mu, nu) * s;
        }
    }
    return exponent.exp();
}

Eigen::Matrix4d lorentz_from_generator(const Eigen::Matrix4d& omega_lower) {
    const Eigen::Matrix4d g = minkowski_metric();
    Eigen::Matrix4d w = g * omega_lower; // raise the first index
    return w.exp();
}

Matrix4c spinor_lorentz(const Eigen::Matrix4d& a) {
    const Eigen::Matrix4d g = minkowski_metric();
    if ((a * g * a.transpose() - g).cwiseAbs().maxCoeff() > 1e-12) {
        throw DomainError("spinor_lorentz: input does not preserve the metric");
    }
    if (a.determinant() < 0.0 || a(0, 0) < 1.0 - 1e-12) {
        throw DomainError("spinor_lorentz: input is not in the restricted subgroup");
    }
    // principal log of a^mu_nu, then lower the first index: w_{mu nu} = g_{mu rho} W^rho_nu
    const Eigen::Matrix4d w_mixed = a.log();
    const Eigen::Matrix4d omega_lower = g * w_mixed;
    return spinor_lorentz_from_generator(omega_lower);
}

Matrix4c energy_operator_matrix(const Eigen::Vector3d& p, double phi_i,
                                const Eigen::Vector3d& a_i, double e, double mass) {
    const Eigen::Vector3d v = p - e * a_i;
    Eigen::Matrix2cd sv = Eigen::Matrix2cd::Zero();
    for (int i = 1; i <= 3; ++i) sv += v[i - 1] * pauli(i);
    Matrix4c h = Matrix4c::Zero();
    h.block<2, 2>(0, 2) = sv;
    h.block<2, 2>(2, 0) = sv;
    const double w = mass + e * phi_i;
    h.block<2, 2>(0, 0) = w * Eigen::Matrix2cd::Identity();
    h.block<2, 2>(2, 2) = -w * Eigen::Matrix2cd::Identity();
    return h;
}

Complex common_commutator_check(const FourVector& x, const ScalarFieldFn& f,
                                const GradientFn& grad_f) {
    const Complex fx = f(x);
    if (std::abs(fx) < 1e-300) throw DomainError("commutator check: test field vanishes at x");
    const std::array<Complex, 4> df = grad_f(x);
    Matrix4c m = Matrix4c::Zero();
    for (int mu = 0; mu < 4; ++mu) {
        const double x_lower = metric_diag(mu) * x[mu];
        for (int nu = 0; nu < 4; ++nu) {
            const Matrix4c gmgn = gamma(mu) * gamma(nu);
            const Matrix4c gngm = gamma(nu) * gamma(mu);
            // Omega P f: gamma^mu gamma^nu X_mu i df/dx^nu
            m += gmgn * (x_lower * kI * df[nu]);
            // P Omega f: gamma^nu gamma^mu i (g_{mu nu} f + X_mu df/dx^nu)
            const double g_mn = (mu == nu) ? metric_diag(mu) : 0.0;
            m -= gngm * (kI * (g_mn * fx + x_lower * df[nu]));
        }
    }
    return m.trace() / (4.0 * fx);
}

Complex common_commutator_check(const FourVector& x) {
    return common_commutator_check(
        x, [](const FourVector&) { return Complex{1.0, 0.0}; },
        [](const FourVector&) { return std::array<Complex, 4>{}; });
}

namespace {
void require_time_symmetric(const GridField& f) {
    if (!f.time_symmetric()) {
        throw DomainError("grid is not time-symmetric (odd t count, t in [-T, T])");
    }
}
} // namespace

GridField time_reverse(const GridField& field) {
    require_time_symmetric(field);
    GridField out = field.like_zero();
    const Eigen::Index nt = field.shape()[0];
    const Eigen::Index nx = field.shape()[1];
    for (Eigen::Index it = 0; it < nt; ++it) {
        for (Eigen::Index ix = 0; ix < nx; ++ix) {
            out.values().col(out.site(it, ix)) = field.values().col(field.site(nt - 1 - it, ix));
        }
    }
    return out;
}

GridField time_parity_project(const GridField& field, int parity) {
    if (parity != 1 && parity != -1) throw DomainError("parity must be +1 or -1");
    GridField rev = time_reverse(field);
    GridField out = field.like_zero();
    out.values() = 0.5 * (field.values() + static_cast<double>(parity) * rev.values());
    return out;
}

GridField particle_conjugate(const GridField& psi) {
    if (psi.components() != 4) throw DomainError("particle_conjugate expects a 4-spinor field");
    const Matrix4c o = discrete_operator(DiscreteOp::ParticleConjMatrix);
    GridField out = psi.like_zero();
    for (Eigen::Index s = 0; s < psi.size(); ++s) {
        out.values().col(s) = o * psi.values().col(s).conjugate();
    }
    return out;
}

} // namespace utdirac
