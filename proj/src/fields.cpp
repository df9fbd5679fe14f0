// SPDX-License-Identifier: Apache-2.0
#include "utdirac/fields.hpp"

#include <cmath>
#include <numbers>

#include "utdirac/algebra.hpp"

namespace utdirac {
namespace {

constexpr double kPi = std::numbers::pi;

void require_space3(const GridField& f, const char* what) {
    if (f.kind() != GridKind::Space3 || f.axes() != 3)
        throw DomainError(std::string(what) + ": expected a 3D spatial grid");
}

void require_spacetime(const GridField& f, const char* what) {
    if (f.kind() != GridKind::SpaceTime || f.axes() != 2)
        throw DomainError(std::string(what) + ": expected a (1+1) spacetime grid");
}

} // namespace

GridField greens_poisson(const GridField& source) {
    require_space3(source, "greens_poisson");
    if (source.components() != 1) throw DomainError("greens_poisson: scalar source required");
    for (int a = 0; a < 3; ++a)
        if (source.shape()[a] > 64) throw DomainError("greens_poisson: grid cap is 64 per axis");

    const auto& sh = source.shape();
    const double hx = source.spacing()[0], hy = source.spacing()[1], hz = source.spacing()[2];
    const double cellvol = hx * hy * hz;
    // Equivalent-sphere radius of a cell: volume match (4/3) pi r^3 = cellvol
    // gives the standard midpoint regularization of the 1/r self-term,
    // 1/(4 pi r_eq) integrated over the sphere -> (3/2) / (4 pi r_eq).
    const double r_eq = std::cbrt(3.0 * cellvol / (4.0 * kPi));
    const double self_kernel = 1.5 / (4.0 * kPi * r_eq);

    // Collect nonzero source cells once; the sum is O(nonzero * nsites).
    struct Cell {
        double x, y, z, q;
        Eigen::Index s;
    };
    std::vector<Cell> cells;
    for (Eigen::Index i = 0; i < sh[0]; ++i)
        for (Eigen::Index j = 0; j < sh[1]; ++j)
            for (Eigen::Index k = 0; k < sh[2]; ++k) {
                const Eigen::Index s = source.site(i, j, k);
                const double q = source.at(s).real();
                if (q != 0.0)
                    cells.push_back({source.coord(0, i), source.coord(1, j),
                                     source.coord(2, k), q, s});
            }

    GridField phi = source.like_zero();
    for (Eigen::Index i = 0; i < sh[0]; ++i)
        for (Eigen::Index j = 0; j < sh[1]; ++j)
            for (Eigen::Index k = 0; k < sh[2]; ++k) {
                const Eigen::Index s = phi.site(i, j, k);
                const double x = source.coord(0, i), y = source.coord(1, j),
                             z = source.coord(2, k);
                double acc = 0.0;
                for (const Cell& c : cells) {
                    if (c.s == s) {
                        acc += c.q * self_kernel * cellvol;
                        continue;
                    }
                    const double r = std::sqrt((x - c.x) * (x - c.x) + (y - c.y) * (y - c.y) +
                                               (z - c.z) * (z - c.z));
                    acc += c.q * cellvol / (4.0 * kPi * r);
                }
                phi.at(s) = acc;
            }
    return phi;
}

InteractionPotentials interaction_potentials(const GridField& psi_e, const GridField& rho_p,
                                             const GridField* current_p, double e_p) {
    require_space3(psi_e, "interaction_potentials");
    if (psi_e.components() != 4)
        throw DomainError("interaction_potentials: psi needs 4 components");
    if (!psi_e.same_layout(rho_p) && !(rho_p.components() == 1 && rho_p.shape() == psi_e.shape()))
        throw DomainError("interaction_potentials: grid mismatch");

    GridField rho = rho_p;
    rho.values() *= e_p;
    const GridField phi_p = greens_poisson(rho);

    const Matrix4c g0 = gamma(0);
    InteractionPotentials out{rho_p.like_zero(),
                              GridField(GridKind::Space3, psi_e.shape(), psi_e.spacing(),
                                        psi_e.origin(), 3)};
    for (Eigen::Index s = 0; s < psi_e.size(); ++s) {
        const Eigen::Vector4cd u = psi_e.values().col(s);
        const double dag = u.squaredNorm();               // psi^dag psi
        const double barr = (u.adjoint() * g0 * u)(0).real(); // psibar psi
        out.phi.at(s) = dag * phi_p.at(s);
        if (current_p) {
            for (int comp = 0; comp < 3; ++comp) out.a.at(s, comp) = barr;
        }
    }
    if (current_p) {
        if (current_p->components() != 3 || current_p->shape() != psi_e.shape())
            throw DomainError("interaction_potentials: current needs 3 components on the grid");
        for (int comp = 0; comp < 3; ++comp) {
            GridField jc(GridKind::Space3, psi_e.shape(), psi_e.spacing(), psi_e.origin(), 1);
            for (Eigen::Index s = 0; s < jc.size(); ++s) jc.at(s) = e_p * current_p->at(s, comp);
            const GridField ac = greens_poisson(jc);
            for (Eigen::Index s = 0; s < jc.size(); ++s) out.a.at(s, comp) *= ac.at(s);
        }
    }
    return out;
}

GridField convolution_potential(const GridField& J, const GridField& A, double e) {
    if (J.components() != 4 || A.components() != 4 || J.shape() != A.shape() ||
        J.spacing() != A.spacing())
        throw DomainError("convolution_potential: need matching 4-component fields");
    const int axes = J.axes();
    double cellvol = 1.0;
    for (int a = 0; a < axes; ++a) cellvol *= J.spacing()[a];

    // Nonzero current cells with their multi-indices.
    std::vector<std::pair<std::vector<Eigen::Index>, Eigen::Index>> cells;
    std::vector<Eigen::Index> idx(axes, 0);
    for (Eigen::Index s = 0; s < J.size(); ++s) {
        bool nonzero = false;
        for (int c = 0; c < 4; ++c)
            if (J.at(s, c) != Complex(0.0)) nonzero = true;
        if (nonzero) cells.emplace_back(idx, s);
        for (int a = axes - 1; a >= 0; --a) {
            if (++idx[a] < J.shape()[a]) break;
            idx[a] = 0;
        }
    }

    // Index of displacement zero on A's grid (A sampled at origin + i*h).
    std::vector<Eigen::Index> ref(axes);
    for (int a = 0; a < axes; ++a) {
        const double r = -A.origin()[a] / A.spacing()[a];
        ref[a] = static_cast<Eigen::Index>(std::llround(r));
        if (std::abs(r - ref[a]) > 1e-9)
            throw DomainError("convolution_potential: displacement zero not on the A grid");
    }

    GridField out(J.kind(), J.shape(), J.spacing(), J.origin(), 1);
    std::vector<Eigen::Index> ti(axes, 0);
    for (Eigen::Index s = 0; s < out.size(); ++s) {
        Complex acc = 0.0;
        for (const auto& [ci, cs] : cells) {
            Eigen::Index disp = 0;
            for (int a = 0; a < axes; ++a) {
                const Eigen::Index da = ti[a] - ci[a] + ref[a];
                if (da < 0 || da >= A.shape()[a])
                    throw DomainError("convolution_potential: support exceeds grid (wraparound refused)");
                disp = disp * A.shape()[a] + da;
            }
            for (int mu = 0; mu < 4; ++mu) {
                const double g = (mu == 0) ? 1.0 : -1.0;
                acc += g * J.at(cs, mu) * A.at(disp, mu);
            }
        }
        out.at(s) = e * acc * cellvol;
        for (int a = axes - 1; a >= 0; --a) {
            if (++ti[a] < out.shape()[a]) break;
            ti[a] = 0;
        }
    }
    return out;
}

double equation_residual(const GridField& psi, const GridField* a_t, double e, double mass) {
    require_spacetime(psi, "equation_residual");
    if (psi.components() != 4) throw DomainError("equation_residual: psi needs 4 components");
    if (a_t && (!a_t->same_layout(psi) ? a_t->components() != 4 || a_t->shape() != psi.shape()
                                       : false))
        throw DomainError("equation_residual: potential grid mismatch");
    const auto& sh = psi.shape();
    if (sh[0] < 8 || sh[1] < 8) throw GridTooCoarse("equation_residual: need >= 8 per axis");
    const double ht = psi.spacing()[0], hz = psi.spacing()[1];
    const Matrix4c g_t = gamma(0), g_z = gamma(3);
    const Complex I(0.0, 1.0);

    double worst = 0.0;
    for (Eigen::Index i = 1; i + 1 < sh[0]; ++i)
        for (Eigen::Index j = 1; j + 1 < sh[1]; ++j) {
            const Eigen::Index s = psi.site(i, j);
            const Eigen::Vector4cd u = psi.values().col(s);
            const Eigen::Vector4cd dt =
                (psi.values().col(psi.site(i + 1, j)) - psi.values().col(psi.site(i - 1, j))) /
                (2.0 * ht);
            const Eigen::Vector4cd dz =
                (psi.values().col(psi.site(i, j + 1)) - psi.values().col(psi.site(i, j - 1))) /
                (2.0 * hz);
            Eigen::Vector4cd res = g_t * (I * dt) + g_z * (I * dz) - mass * u;
            if (a_t)
                for (int mu = 0; mu < 4; ++mu)
                    res -= e * a_t->at(s, mu) * (gamma(mu) * u);
            worst = std::max(worst, res.cwiseAbs().maxCoeff());
        }
    return worst;
}

GridField gauge_f(const GridField& s, const GaugeCoefficients& c) {
    c.validate();
    if (s.components() != 1) throw DomainError("gauge_f: scalar density required");
    GridField out = s.like_zero();
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        const double v = s.at(i).real();
        if (v == 0.0) throw ZeroDensity("gauge_f: density vanishes at a site");
        double acc = 0.0;
        for (const auto& [n, cn] : c.terms) acc += cn * std::pow(v, n);
        out.at(i) = acc;
    }
    return out;
}

GridField gauge_alpha(const GridField& s, const GaugeCoefficients& c, double e) {
    c.validate();
    if (s.components() != 1) throw DomainError("gauge_alpha: scalar density required");
    GridField out = s.like_zero();
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        const double v = s.at(i).real();
        if (v == 0.0) throw ZeroDensity("gauge_alpha: density vanishes at a site");
        double acc = 0.0;
        for (const auto& [n, cn] : c.terms) {
            if (n == -1)
                acc -= cn * std::log(std::abs(v));
            else
                acc += (static_cast<double>(n) / (n + 1.0)) * cn * std::pow(v, n + 1);
        }
        out.at(i) = e * acc;
    }
    return out;
}

double gauge_constraint_residual(const GridField& s, const GaugeCoefficients& c, double e) {
    const GridField f = gauge_f(s, c);
    const GridField alpha = gauge_alpha(s, c, e);
    const auto& sh = s.shape();
    const int axes = s.axes();

    // Central-difference d_mu alpha - e s d_mu f along every axis, interior only.
    double worst = 0.0;
    std::vector<Eigen::Index> idx(axes, 0);
    auto flat = [&](const std::vector<Eigen::Index>& v) {
        Eigen::Index s0 = 0;
        for (int a = 0; a < axes; ++a) s0 = s0 * sh[a] + v[a];
        return s0;
    };
    for (Eigen::Index lin = 0; lin < s.size(); ++lin) {
        bool interior = true;
        for (int a = 0; a < axes; ++a)
            if (idx[a] == 0 || idx[a] + 1 == sh[a]) interior = false;
        if (interior) {
            const Eigen::Index s0 = flat(idx);
            for (int a = 0; a < axes; ++a) {
                auto up = idx, dn = idx;
                ++up[a];
                --dn[a];
                const double h2 = 2.0 * s.spacing()[a];
                const double da = (alpha.at(flat(up)).real() - alpha.at(flat(dn)).real()) / h2;
                const double df = (f.at(flat(up)).real() - f.at(flat(dn)).real()) / h2;
                worst = std::max(worst, std::abs(da - e * s.at(s0).real() * df));
            }
        }
        for (int a = axes - 1; a >= 0; --a) {
            if (++idx[a] < sh[a]) break;
            idx[a] = 0;
        }
    }
    return worst;
}

GridField scalar_density(const GridField& psi) {
    if (psi.components() != 4) throw DomainError("scalar_density: psi needs 4 components");
    const Matrix4c g0 = gamma(0);
    GridField out(psi.kind(), psi.shape(), psi.spacing(), psi.origin(), 1);
    for (Eigen::Index s = 0; s < psi.size(); ++s) {
        const Eigen::Vector4cd u = psi.values().col(s);
        out.at(s) = (u.adjoint() * g0 * u)(0).real();
    }
    return out;
}

GridField scale_by_density(const GridField& a, const GridField& s) {
    if (s.components() != 1 || s.shape() != a.shape())
        throw DomainError("scale_by_density: scalar field on the same grid required");
    GridField out = a;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (int c = 0; c < a.components(); ++c) out.at(i, c) *= s.at(i).real();
    return out;
}

double dalembert_density_residual(const GridField& psi) {
    require_spacetime(psi, "dalembert_density_residual");
    const auto& sh = psi.shape();
    if (sh[0] < 8 || sh[1] < 8) throw GridTooCoarse("dalembert_density_residual: grid too coarse");
    const GridField dens = scalar_density(psi);
    const double ht = psi.spacing()[0], hz = psi.spacing()[1];
    double worst = 0.0;
    for (Eigen::Index i = 1; i + 1 < sh[0]; ++i)
        for (Eigen::Index j = 1; j + 1 < sh[1]; ++j) {
            const double c = dens.at(dens.site(i, j)).real();
            const double dtt = (dens.at(dens.site(i + 1, j)).real() - 2.0 * c +
                                dens.at(dens.site(i - 1, j)).real()) /
                               (ht * ht);
            const double dzz = (dens.at(dens.site(i, j + 1)).real() - 2.0 * c +
                                dens.at(dens.site(i, j - 1)).real()) /
                               (hz * hz);
            worst = std::max(worst, std::abs(dtt - dzz));
        }
    return worst;
}

GaugePair gauge_transform(const GridField& psi, const GridField& a, const GridField& s,
                          const GaugeCoefficients& c, double e) {
    if (a.components() != 4 || a.shape() != psi.shape())
        throw DomainError("gauge_transform: potential needs 4 components on psi's grid");
    const GridField f = gauge_f(s, c);
    const GridField alpha = gauge_alpha(s, c, e);

    GaugePair out{psi, a};
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        const Complex phase = std::exp(Complex(0.0, -alpha.at(i).real()));
        for (int comp = 0; comp < 4; ++comp) out.psi.at(i, comp) = psi.at(i, comp) * phase;
    }

    // A'_mu = A_mu + d_mu f, covariant components; one-sided stencils at the
    // edges keep the layout intact (tests restrict norms to the interior).
    const auto& sh = psi.shape();
    const int axes = psi.axes();
    std::vector<Eigen::Index> idx(axes, 0);
    auto flat = [&](const std::vector<Eigen::Index>& v) {
        Eigen::Index s0 = 0;
        for (int ax = 0; ax < axes; ++ax) s0 = s0 * sh[ax] + v[ax];
        return s0;
    };
    // Map grid axis -> spacetime index mu. SpaceTime grids carry (t, z);
    // spatial grids carry (x, y, z).
    auto mu_of_axis = [&](int ax) {
        if (psi.kind() == GridKind::SpaceTime) return ax == 0 ? 0 : 3;
        return ax + 1;
    };
    for (Eigen::Index lin = 0; lin < psi.size(); ++lin) {
        const Eigen::Index s0 = flat(idx);
        for (int ax = 0; ax < axes; ++ax) {
            auto up = idx, dn = idx;
            double denom = 2.0 * psi.spacing()[ax];
            if (idx[ax] == 0) {
                ++up[ax];
                denom = psi.spacing()[ax];
            } else if (idx[ax] + 1 == sh[ax]) {
                --dn[ax];
                denom = psi.spacing()[ax];
            } else {
                ++up[ax];
                --dn[ax];
            }
            double df = (f.at(flat(up)).real() - f.at(flat(dn)).real()) / denom;
            const int mu = mu_of_axis(ax);
            // d_mu with lower index: d_0 = d/dt, d_k = d/dx^k as written;
            // covariant components of the transformed potential add d_mu f.
            out.a.at(s0, mu) += df;
        }
        for (int ax = axes - 1; ax >= 0; --ax) {
            if (++idx[ax] < sh[ax]) break;
            idx[ax] = 0;
        }
    }
    return out;
}

GridField fluctuation_mass_sq(const GridField& eps, const GridField& kap) {
    if (eps.components() != 4 || kap.components() != 4 || eps.shape() != kap.shape())
        throw DomainError("fluctuation_mass_sq: need matching 4-component fields");
    GridField out(eps.kind(), eps.shape(), eps.spacing(), eps.origin(), 1);
    for (Eigen::Index s = 0; s < eps.size(); ++s) {
        Complex dot = eps.at(s, 0) * kap.at(s, 0);
        for (int k = 1; k < 4; ++k) dot -= eps.at(s, k) * kap.at(s, k);
        out.at(s) = -2.0 * dot;
    }
    return out;
}

} // namespace utdirac
