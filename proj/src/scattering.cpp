// SPDX-License-Identifier: Apache-2.0
#include "utdirac/scattering.hpp"

#include <cmath>

namespace utdirac {
namespace {

constexpr double kOnShellTol = 1e-9;

void require_on_shell(const FourVector& p, double mass, const char* what) {
    const double s = minkowski_square(p);
    if (std::abs(s - mass * mass) > kOnShellTol * std::max(1.0, mass * mass) || p.t <= 0.0)
        throw DomainError(std::string(what) + ": four-momentum not on-shell");
}

} // namespace

PlaneWaveSpinor spinor_u(const FourVector& p, int s, double mass) {
    require_on_shell(p, mass, "spinor_u");
    if (s != 0 && s != 1) throw DomainError("spinor_u: spin label must be 0 or 1");
    const double E = p.t;
    Eigen::Vector2cd chi = Eigen::Vector2cd::Zero();
    chi[s] = 1.0;
    const Eigen::Matrix2cd sp = p.x * pauli(1) + p.y * pauli(2) + p.z * pauli(3);
    PlaneWaveSpinor out;
    out.p = p;
    out.mass = mass;
    out.u.head<2>() = chi;
    out.u.tail<2>() = (sp * chi) / (E + mass);
    out.u *= std::sqrt((E + mass) / (2.0 * mass));
    return out;
}

Eigen::RowVector4cd bar(const Spinor4& u) { return u.adjoint() * gamma(0); }

Matrix4c spin_sum_projector(const FourVector& p, double mass) {
    Matrix4c slash = Matrix4c::Zero();
    for (int mu = 0; mu < 4; ++mu) slash += metric_diag(mu) * p[mu] * gamma(mu);
    return (slash + mass * Matrix4c::Identity()) / (2.0 * mass);
}

double sigma1_brute(const FourVector& pi, const FourVector& pf, double mass) {
    double tot = 0.0;
    for (int sf = 0; sf < 2; ++sf)
        for (int si = 0; si < 2; ++si) {
            const std::complex<double> amp =
                bar(spinor_u(pf, sf, mass).u) * spinor_u(pi, si, mass).u;
            tot += std::norm(amp);
        }
    return tot / 2.0;
}

double sigma1_closed(const FourVector& pi, const FourVector& pf, double mass) {
    return 0.5 * (1.0 + minkowski_dot(pi, pf) / (mass * mass));
}

double ScatterKinematics::e_final() const {
    const double s2 = std::sin(theta / 2.0) * std::sin(theta / 2.0);
    return (M > 0.0 && std::isfinite(M)) ? E / (1.0 + (2.0 * E / M) * s2) : E;
}

double ScatterKinematics::q_squared() const {
    const double s2 = std::sin(theta / 2.0) * std::sin(theta / 2.0);
    return -4.0 * e_final() * E * s2;
}

ElasticEvent elastic_event(const ScatterKinematics& kin) {
    if (kin.E <= kin.m || kin.M <= 0.0 || !std::isfinite(kin.M))
        throw DomainError("elastic_event: need E > m and a finite target mass");
    const double m = kin.m, M = kin.M, E = kin.E, th = kin.theta;
    const double ki = std::sqrt(E * E - m * m);
    const FourVector pi{E, 0.0, 0.0, ki};
    const FourVector Pi{M, 0.0, 0.0, 0.0};
    // Exact final beam energy: root of (pi + Pi - pf)^2 - M^2 at lab angle th.
    auto defect = [&](double Ef) {
        const double kf = std::sqrt(std::max(Ef * Ef - m * m, 0.0));
        const FourVector pf{Ef, kf * std::sin(th), 0.0, kf * std::cos(th)};
        const FourVector Pf = pi + Pi - pf;
        return minkowski_square(Pf) - M * M;
    };
    double lo = m * (1.0 + 1e-14), hi = E;
    double flo = defect(lo);
    if (flo * defect(hi) > 0.0) throw DomainError("elastic_event: no kinematic solution");
    for (int it = 0; it < 200 && (hi - lo) > 1e-15 * E; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = defect(mid);
        if (flo * f <= 0.0)
            hi = mid;
        else {
            lo = mid;
            flo = f;
        }
    }
    const double Ef = 0.5 * (lo + hi);
    const double kf = std::sqrt(Ef * Ef - m * m);
    ElasticEvent ev;
    ev.pi = pi;
    ev.Pi = Pi;
    ev.pf = FourVector{Ef, kf * std::sin(th), 0.0, kf * std::cos(th)};
    ev.Pf = pi + Pi - ev.pf;
    ev.q2 = minkowski_square(ev.pf - ev.pi);
    return ev;
}

double sigma2_brute(const ElasticEvent& ev, double m, double M) {
    double tot = 0.0;
    Spinor4 ue[2][2], up[2][2]; // [final?][spin]
    for (int s = 0; s < 2; ++s) {
        ue[0][s] = spinor_u(ev.pi, s, m).u;
        ue[1][s] = spinor_u(ev.pf, s, m).u;
        up[0][s] = spinor_u(ev.Pi, s, M).u;
        up[1][s] = spinor_u(ev.Pf, s, M).u;
    }
    for (int sf = 0; sf < 2; ++sf)
        for (int si = 0; si < 2; ++si)
            for (int Sf = 0; Sf < 2; ++Sf)
                for (int Si = 0; Si < 2; ++Si) {
                    std::complex<double> amp = 0.0;
                    for (int mu = 0; mu < 4; ++mu) {
                        const std::complex<double> je = bar(ue[1][sf]) * gamma(mu) * ue[0][si];
                        const std::complex<double> jp = bar(up[1][Sf]) * gamma(mu) * up[0][Si];
                        amp += metric_diag(mu) * je * jp;
                    }
                    tot += std::norm(amp);
                }
    return tot / 4.0;
}

double sigma2_closed(const ElasticEvent& ev, double m, double M) {
    // Exact invariant contraction for the elastic current-current product,
    // written with the lab beam energies and tau = -q^2/2.
    const double Ei = ev.pi.t, Ef = ev.pf.t;
    const double tau = -ev.q2 / 2.0;
    return (Ei * Ef - tau / 2.0 + tau * tau / (2.0 * M * M) - m * m * tau / (2.0 * M * M)) /
           (m * m);
}

double sigma2_high_energy(const ScatterKinematics& kin) {
    const double h = kin.theta / 2.0;
    const double c2 = std::cos(h) * std::cos(h), s2 = std::sin(h) * std::sin(h);
    if (c2 == 0.0) throw DomainError("sigma2_high_energy: tan(theta/2) diverges at theta = pi");
    const double q2 = kin.q_squared();
    return (kin.e_final() * kin.E / (kin.m * kin.m)) * c2 *
           (1.0 - q2 / (2.0 * kin.M * kin.M) * (s2 / c2));
}

double sigma2(const ScatterKinematics& kin) {
    const ElasticEvent ev = elastic_event(kin);
    return sigma2_brute(ev, kin.m, kin.M);
}

double dcs_coulomb(double E, double theta, double Z, double alpha, double mass,
                   double theta_min) {
    if (theta < theta_min) throw ForwardDivergence("dcs_coulomb: theta below theta_min");
    if (E <= mass) throw DomainError("dcs_coulomb: need E > m");
    const double p2 = E * E - mass * mass;
    const double s2 = std::sin(theta / 2.0) * std::sin(theta / 2.0);
    return Z * Z * alpha * alpha * mass * mass / (p2 * p2 * s2 * s2) *
           (1.0 + p2 / (mass * mass) * s2);
}

double rutherford(double E, double theta, double Z, double alpha, double mass) {
    if (E <= mass) throw DomainError("rutherford: need E > m");
    const double p2 = E * E - mass * mass;
    const double s2 = std::sin(theta / 2.0) * std::sin(theta / 2.0);
    return Z * Z * alpha * alpha * mass * mass / (p2 * p2 * s2 * s2);
}

double fourier_potential_coulomb(double q_mag, double Z, double alpha) {
    if (q_mag <= 0.0) throw DomainError("fourier_potential_coulomb: zero momentum transfer");
    return -Z * alpha / (q_mag * q_mag);
}

double dcs_ep(const ScatterKinematics& kin, double alpha, EpMode mode, double theta_min) {
    if (kin.theta < theta_min) throw ForwardDivergence("dcs_ep: theta below theta_min");
    if (kin.E <= kin.m || kin.M <= 0.0 || !std::isfinite(kin.M))
        throw DomainError("dcs_ep: need E > m and finite target mass");
    const double Ef = kin.e_final(), q2 = kin.q_squared();
    const double s2 = std::sin(kin.theta / 2.0) * std::sin(kin.theta / 2.0);
    const double m2 = kin.m * kin.m;
    const double S1 = (mode == EpMode::HighESigma1)
                          ? (Ef * kin.E / m2) * s2
                          : 1.0 + (Ef * kin.E / m2) * s2; // exact: (1/2)(1 + pi.pf/m^2)
    const double S2 = sigma2_high_energy(kin);
    // The constant 16 plays the same role as the dropped prefactor in
    // dcs_coulomb: with it, the high-energy mode closes to
    // (alpha^2/E^2) cot^2 [bracket]/[recoil] exactly.
    return 16.0 * alpha * alpha * m2 * m2 * Ef / (q2 * q2 * kin.E * kin.E * kin.E) * S1 * S2;
}

double dcs_ep_conventional(const ScatterKinematics& kin, double alpha, double theta_min) {
    if (kin.theta < theta_min) throw ForwardDivergence("dcs_ep_conventional: theta below theta_min");
    const double h = kin.theta / 2.0;
    const double c2 = std::cos(h) * std::cos(h), s2 = std::sin(h) * std::sin(h);
    const double Ef = kin.e_final(), q2 = kin.q_squared();
    return alpha * alpha * c2 / (4.0 * kin.E * kin.E * s2 * s2) * (Ef / kin.E) *
           (1.0 - q2 / (2.0 * kin.M * kin.M) * (s2 / c2));
}

} // namespace utdirac
