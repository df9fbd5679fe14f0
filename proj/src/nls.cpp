// SPDX-License-Identifier: Apache-2.0
#include "utdirac/nls.hpp"

#include <cmath>
#include <numbers>
#include <unsupported/Eigen/FFT>

#include "utdirac/algebra.hpp"

namespace utdirac {
namespace {

void require_line(const GridField& f, const char* what) {
    if (f.kind() != GridKind::Line || f.components() != 1)
        throw DomainError(std::string(what) + ": expected a scalar 1D field");
}

Eigen::ArrayXd wavenumbers(Eigen::Index n, double dx) {
    Eigen::ArrayXd k(n);
    const double dk = 2.0 * std::numbers::pi / (n * dx);
    for (Eigen::Index j = 0; j < n; ++j) k[j] = dk * (j <= n / 2 ? j : j - n);
    return k;
}

Eigen::ArrayXd nonlinear_term(const NlsState& st, const Eigen::VectorXcd& psi) {
    const Eigen::ArrayXd rho = psi.array().abs2();
    if (st.mode == NlsMode::Cubic) return st.g * rho;
    return st.g * rho * poisson_line(rho, st.psi.spacing()[0]);
}

} // namespace

Eigen::ArrayXd poisson_line(const Eigen::ArrayXd& rho, double dx) {
    const Eigen::Index n = rho.size();
    if (n % 2 == 0) throw DomainError("poisson_line: odd site count required");
    Eigen::ArrayXd phi(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double acc = 0.0;
        for (Eigen::Index j = 0; j < n; ++j)
            acc += std::abs(static_cast<double>(i - j)) * dx * rho[j];
        phi[i] = -0.5 * acc * dx;
    }
    return phi;
}

NlsState evolve(const NlsState& state, double T) {
    require_line(state.psi, "evolve");
    if (state.dt <= 0.0 || T < 0.0) throw DomainError("evolve: need dt > 0, T >= 0");
    const Eigen::Index n = state.psi.size();
    const double dx = state.psi.spacing()[0];
    const long steps = std::lround(T / state.dt);

    NlsState st = state;
    Eigen::VectorXcd psi = st.psi.values().row(0).transpose();
    const Eigen::ArrayXd k = wavenumbers(n, dx);
    const Eigen::ArrayXcd half_kin =
        (-Complex(0.0, 1.0) * (st.dt / 2.0) * k.square() / (2.0 * st.mass)).exp();

    Eigen::FFT<double> fft;
    Eigen::VectorXcd spec(n);
    auto kinetic_half = [&]() {
        fft.fwd(spec, psi);
        spec.array() *= half_kin;
        fft.inv(psi, spec);
    };

    for (long s = 0; s < steps; ++s) {
        kinetic_half();
        const Eigen::ArrayXd N = nonlinear_term(st, psi);
        if (st.dt * N.abs().maxCoeff() >= 0.1)
            throw DomainError("evolve: stability guard dt*max|N| < 0.1 violated");
        psi.array() *= (-Complex(0.0, 1.0) * st.dt * N).exp();
        kinetic_half();
        st.t += st.dt;
    }
    st.psi.values().row(0) = psi.transpose();
    return st;
}

NlsInvariants conserved_quantities(const NlsState& state) {
    require_line(state.psi, "conserved_quantities");
    const Eigen::Index n = state.psi.size();
    const double dx = state.psi.spacing()[0];
    const Eigen::VectorXcd psi = state.psi.values().row(0).transpose();
    const Eigen::ArrayXd rho = psi.array().abs2();

    NlsInvariants out;
    out.norm = rho.sum() * dx;

    // Spectral kinetic energy by Parseval: int |psi_x|^2 = sum k^2 |psi_k|^2 dx / n.
    Eigen::FFT<double> fft;
    Eigen::VectorXcd spec(n);
    Eigen::VectorXcd in = psi;
    fft.fwd(spec, in);
    const Eigen::ArrayXd k = wavenumbers(n, dx);
    const double kinetic =
        (k.square() * spec.array().abs2()).sum() * dx / static_cast<double>(n) /
        (2.0 * state.mass);

    double interaction;
    if (state.mode == NlsMode::Cubic)
        interaction = 0.5 * state.g * rho.square().sum() * dx;
    else
        interaction = 0.5 * state.g * (rho.square() * poisson_line(rho, dx)).sum() * dx;
    out.energy = kinetic + interaction;
    return out;
}

HamiltonianTerms hamiltonian_terms(const GridField& psi, const GridField& phi,
                                   const Eigen::Vector3d& B, double e, double mass) {
    if (psi.kind() != GridKind::Space3 || psi.components() != 2)
        throw DomainError("hamiltonian_terms: two-component 3D field required");
    if (phi.components() != 1 || phi.shape() != psi.shape())
        throw DomainError("hamiltonian_terms: scalar potential on the same grid required");
    const auto& sh = psi.shape();
    const double hx = psi.spacing()[0], hy = psi.spacing()[1], hz = psi.spacing()[2];
    const double dV = hx * hy * hz;

    double norm = 0.0;
    for (Eigen::Index s = 0; s < psi.size(); ++s)
        norm += (std::norm(psi.at(s, 0)) + std::norm(psi.at(s, 1))) * dV;
    if (std::abs(norm - 1.0) > 1e-2)
        throw DomainError("hamiltonian_terms: field is not box-normalized");

    const Eigen::Matrix2cd sB =
        0.5 * (B.x() * pauli(1) + B.y() * pauli(2) + B.z() * pauli(3));
    const Complex I(0.0, 1.0);

    HamiltonianTerms out;
    const double h[3] = {hx, hy, hz};
    for (Eigen::Index i = 1; i + 1 < sh[0]; ++i)
        for (Eigen::Index j = 1; j + 1 < sh[1]; ++j)
            for (Eigen::Index kk = 1; kk + 1 < sh[2]; ++kk) {
                const Eigen::Index s = psi.site(i, j, kk);
                const Eigen::Vector2cd u(psi.at(s, 0), psi.at(s, 1));
                const double r[3] = {psi.coord(0, i), psi.coord(1, j), psi.coord(2, kk)};

                Eigen::Vector2cd grad[3];
                const Eigen::Index up[3] = {psi.site(i + 1, j, kk), psi.site(i, j + 1, kk),
                                            psi.site(i, j, kk + 1)};
                const Eigen::Index dn[3] = {psi.site(i - 1, j, kk), psi.site(i, j - 1, kk),
                                            psi.site(i, j, kk - 1)};
                for (int a = 0; a < 3; ++a)
                    grad[a] = Eigen::Vector2cd(psi.at(up[a], 0) - psi.at(dn[a], 0),
                                               psi.at(up[a], 1) - psi.at(dn[a], 1)) /
                              (2.0 * h[a]);

                for (int a = 0; a < 3; ++a) out.kinetic += grad[a].squaredNorm() * dV;

                out.electric += e * phi.at(s).real() * u.squaredNorm() * dV;

                // l_k psi = -i (r x grad)_k psi
                Eigen::Vector2cd l[3];
                l[0] = -I * (r[1] * grad[2] - r[2] * grad[1]);
                l[1] = -I * (r[2] * grad[0] - r[0] * grad[2]);
                l[2] = -I * (r[0] * grad[1] - r[1] * grad[0]);

                Eigen::Vector2cd lB = B.x() * l[0] + B.y() * l[1] + B.z() * l[2];
                out.zeeman += (-e / (2.0 * mass)) *
                              ((u.adjoint() * (lB + 2.0 * (sB * u))).value().real()) * dV;

                const double r2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
                if (r2 > 1e-12) {
                    double rdphi = 0.0; // r . grad Phi
                    for (int a = 0; a < 3; ++a)
                        rdphi += r[a] * (phi.at(up[a]).real() - phi.at(dn[a]).real()) /
                                 (2.0 * h[a]);
                    // (s.l) psi = (1/2) sigma_k l_k psi
                    Eigen::Vector2cd sl = 0.5 * (pauli(1) * l[0] + pauli(2) * l[1] +
                                                 pauli(3) * l[2]);
                    out.spin_orbit += (-e / (2.0 * mass * mass)) * (rdphi / r2) *
                                      (u.adjoint() * sl).value().real() * dV;
                }
            }
    out.kinetic /= (2.0 * mass);
    return out;
}

} // namespace utdirac
