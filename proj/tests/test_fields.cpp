// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "utdirac/algebra.hpp"
#include "utdirac/fields.hpp"
#include "utdirac/scattering.hpp"

using namespace utdirac;

namespace {

constexpr double kPi = std::numbers::pi;

GridField cube_grid(int n, double half_width, int components = 1) {
    const double h = 2.0 * half_width / n;
    const double o = -half_width + h / 2.0; // cell centers, origin-free
    return GridField(GridKind::Space3, {n, n, n}, {h, h, h}, {o, o, o}, components);
}

// On-shell plane wave with momentum p along z on a (1+1) grid.
GridField plane_wave(Eigen::Index nt, Eigen::Index nz, double ht, double hz, double E, double pz,
                     double m, double amp = 1.0) {
    GridField psi(GridKind::SpaceTime, {nt, nz}, {ht, hz}, {-ht * (nt - 1) / 2.0, 0.0}, 4);
    const Spinor4 u = spinor_u({std::sqrt(pz * pz + m * m), 0.0, 0.0, pz}, 0, m).u;
    for (Eigen::Index i = 0; i < nt; ++i)
        for (Eigen::Index j = 0; j < nz; ++j) {
            const double t = psi.coord(0, i), z = psi.coord(1, j);
            const Complex phase = std::exp(Complex(0.0, -(E * t - pz * z)));
            psi.values().col(psi.site(i, j)) = amp * phase * u;
        }
    return psi;
}

} // namespace

TEST_CASE("point-source Poisson potential reproduces the Coulomb kernel midrange") {
    const int n = 32;
    GridField source = cube_grid(n, 4.0);
    const double h = source.spacing()[0];
    const Eigen::Index c = n / 2;
    source.at(source.site(c, c, c)) = 1.0 / (h * h * h); // unit charge

    const GridField phi = greens_poisson(source);
    const double x0 = source.coord(0, c), y0 = source.coord(1, c), z0 = source.coord(2, c);
    double worst = 0.0;
    int counted = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) {
                const double dx = source.coord(0, i) - x0, dy = source.coord(1, j) - y0,
                             dz = source.coord(2, k) - z0;
                const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
                if (r < 1.0 || r > 3.0) continue; // midrange only
                const double want = 1.0 / (4.0 * kPi * r);
                worst = std::max(worst,
                                 std::abs(phi.at(phi.site(i, j, k)).real() / want - 1.0));
                ++counted;
            }
    CHECK(counted > 1000);
    CHECK(worst < 0.01);
}

TEST_CASE("uniform ball source gives the analytic interior/exterior potential") {
    const int n = 40;
    GridField source = cube_grid(n, 4.0);
    const double R = 1.2, rho = 0.7;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) {
                const double r = std::sqrt(std::pow(source.coord(0, i), 2) +
                                           std::pow(source.coord(1, j), 2) +
                                           std::pow(source.coord(2, k), 2));
                if (r < R) source.at(source.site(i, j, k)) = rho;
            }
    const GridField phi = greens_poisson(source);
    const double h = source.spacing()[0];

    // The staircase boundary carries its own charge error, so rescale the
    // exterior comparison by the charge the grid actually holds.
    double Q = 0.0;
    for (Eigen::Index s = 0; s < source.size(); ++s) Q += source.at(s).real();
    Q *= h * h * h;
    CHECK(Q == doctest::Approx(rho * (4.0 / 3.0) * kPi * R * R * R).epsilon(0.03));

    double worst = 0.0;
    const Eigen::Index c = n / 2;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double got = phi.at(phi.site(i, c, c)).real();
        const double rr = std::sqrt(std::pow(phi.coord(0, i), 2) +
                                    2.0 * std::pow(phi.coord(1, c), 2));
        if (rr > 3.5 || std::abs(rr - R) < 2.0 * h) continue;
        const double want =
            (rr >= R) ? Q / (4.0 * kPi * rr) : rho * (3.0 * R * R - rr * rr) / 6.0;
        worst = std::max(worst, std::abs(got / want - 1.0));
    }
    CHECK(worst < 0.05);

    // Linearity and the zero source.
    GridField zero = cube_grid(16, 2.0);
    CHECK(greens_poisson(zero).values().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Poisson solution closes the loop: -Laplacian(phi) recovers a smooth source") {
    const int n = 24;
    GridField source = cube_grid(n, 3.2);
    const double h = source.spacing()[0];
    const double sig = 0.8;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) {
                const double r2 = std::pow(source.coord(0, i), 2) +
                                  std::pow(source.coord(1, j), 2) +
                                  std::pow(source.coord(2, k), 2);
                source.at(source.site(i, j, k)) = std::exp(-r2 / (2.0 * sig * sig));
            }
    const GridField phi = greens_poisson(source);

    // 7-point Laplacian near the center, where box truncation is negligible.
    const Eigen::Index c = n / 2;
    double worst = 0.0;
    for (Eigen::Index i = c - 2; i <= c + 2; ++i)
        for (Eigen::Index j = c - 2; j <= c + 2; ++j)
            for (Eigen::Index k = c - 2; k <= c + 2; ++k) {
                const double lap =
                    (phi.at(phi.site(i + 1, j, k)).real() + phi.at(phi.site(i - 1, j, k)).real() +
                     phi.at(phi.site(i, j + 1, k)).real() + phi.at(phi.site(i, j - 1, k)).real() +
                     phi.at(phi.site(i, j, k + 1)).real() + phi.at(phi.site(i, j, k - 1)).real() -
                     6.0 * phi.at(phi.site(i, j, k)).real()) /
                    (h * h);
                worst = std::max(worst,
                                 std::abs(-lap - source.at(source.site(i, j, k)).real()));
            }
    CHECK(worst < 0.03);

    // Linearity: doubling the source doubles the potential.
    GridField twice = source;
    twice.values() *= 2.0;
    const GridField phi2 = greens_poisson(twice);
    CHECK((phi2.values() - 2.0 * phi.values()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("interaction potentials scale with the local density and the proton charge") {
    const int n = 16;
    GridField rho_p = cube_grid(n, 2.0);
    const double h = rho_p.spacing()[0];
    const Eigen::Index c = n / 2;
    rho_p.at(rho_p.site(c, c, c)) = 1.0 / (h * h * h); // unit point charge

    GridField psi = cube_grid(n, 2.0, 4);
    for (Eigen::Index s = 0; s < psi.size(); ++s) {
        psi.at(s, 0) = Complex(0.6, 0.0);
        psi.at(s, 2) = Complex(0.0, 0.3);
    }
    const double dens = 0.6 * 0.6 + 0.3 * 0.3;

    GridField jp = cube_grid(n, 2.0, 3);
    jp.at(jp.site(c, c, c), 1) = 2.0 / (h * h * h);

    const auto pots = interaction_potentials(psi, rho_p, &jp, 1.0);
    const GridField bare = greens_poisson(rho_p);
    CHECK(pots.phi.components() == 1);
    CHECK(pots.a.components() == 3);
    const double dens_bar = 0.6 * 0.6 - 0.3 * 0.3; // psibar psi
    double worst_phi = 0.0, worst_a = 0.0;
    for (Eigen::Index s = 0; s < bare.size(); ++s) {
        worst_phi = std::max(worst_phi, std::abs(pots.phi.at(s) - dens * bare.at(s)));
        // y current carries twice the point charge, so its potential is 2x.
        worst_a = std::max(worst_a, std::abs(pots.a.at(s, 1) - dens_bar * 2.0 * bare.at(s)));
        worst_a = std::max(worst_a, std::abs(pots.a.at(s, 0)) + std::abs(pots.a.at(s, 2)));
    }
    CHECK(worst_phi < 1e-12);
    CHECK(worst_a < 1e-12);
    // Doubling e_p doubles both potentials.
    const auto pots2 = interaction_potentials(psi, rho_p, &jp, 2.0);
    CHECK((pots2.phi.values() - 2.0 * pots.phi.values()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((pots2.a.values() - 2.0 * pots.a.values()).cwiseAbs().maxCoeff() < 1e-12);

    // Electrostatic-only call and the zero source.
    const auto zero = interaction_potentials(psi, cube_grid(n, 2.0));
    CHECK(zero.phi.values().cwiseAbs().maxCoeff() == 0.0);
    CHECK(zero.a.values().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("convolution potential shifts a point current and refuses wraparound") {
    const Eigen::Index n = 16;
    const double h = 0.5;
    GridField J(GridKind::Space3, {n, n, n}, {h, h, h}, {0.0, 0.0, 0.0}, 4);
    GridField A(GridKind::Space3, {n, n, n}, {h, h, h}, {0.0, 0.0, 0.0}, 4);
    for (Eigen::Index s = 0; s < A.size(); ++s) {
        A.at(s, 0) = std::cos(0.2 * s);
        A.at(s, 2) = 0.3;
    }
    SUBCASE("point current at the origin copies A0") {
        J.at(J.site(0, 0, 0), 0) = 2.0;
        const GridField V = convolution_potential(J, A, 1.5);
        const double cellvol = h * h * h;
        for (Eigen::Index s = 0; s < V.size(); ++s)
            CHECK(std::abs(V.at(s) - 1.5 * 2.0 * A.at(s, 0) * cellvol) < 1e-12);
    }
    SUBCASE("spatial components enter with the metric sign") {
        J.at(J.site(0, 0, 0), 2) = 1.0;
        const GridField V = convolution_potential(J, A, 1.0);
        CHECK(V.at(V.site(3, 4, 5)).real() ==
              doctest::Approx(-0.3 * h * h * h).epsilon(1e-12));
    }
    SUBCASE("support off the corner wraps out of the grid") {
        J.at(J.site(2, 0, 0), 0) = 1.0;
        CHECK_THROWS_AS(convolution_potential(J, A), DomainError);
    }
    SUBCASE("zero current gives zero") {
        const GridField V = convolution_potential(J, A);
        CHECK(V.values().cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("free on-shell plane wave solves the equation at O(h^2)") {
    const double m = 1.0, pz = 0.7;
    const double E = std::sqrt(pz * pz + m * m);
    double prev = 0.0;
    for (const Eigen::Index n : {33, 65, 129}) {
        const double ht = 2.0 / (n - 1), hz = 4.0 / (n - 1);
        const GridField psi = plane_wave(n, n, ht, hz, E, pz, m);
        const double res = equation_residual(psi, nullptr, 1.0, m);
        if (prev > 0.0) CHECK(prev / res >= 3.8);
        prev = res;
    }

    // Off-shell frequency leaves a plateau: the residual is (E' - E) gamma^0 u,
    // whose largest component is (E' - E) times the largest component of u.
    const double E_bad = E + 0.05;
    const GridField bad = plane_wave(65, 65, 2.0 / 64, 4.0 / 64, E_bad, pz, m);
    const double umax = spinor_u({E, 0.0, 0.0, pz}, 0, m).u.cwiseAbs().maxCoeff();
    CHECK(equation_residual(bad, nullptr, 1.0, m) ==
          doctest::Approx(0.05 * umax).epsilon(0.02));

    GridField zero(GridKind::SpaceTime, {9, 9}, {0.1, 0.1}, {-0.4, 0.0}, 4);
    CHECK(equation_residual(zero, nullptr, 1.0, m) == 0.0);
}

TEST_CASE("gauge family evaluates its closed forms") {
    GridField s(GridKind::Line, {16}, {0.1}, {0.0}, 1);
    for (Eigen::Index i = 0; i < 16; ++i) s.at(i) = 1.0 + 0.2 * i;

    SUBCASE("single n=1 term: f = s, alpha = e s^2/2") {
        GaugeCoefficients c{{{1, 1.0}}};
        const GridField f = gauge_f(s, c), a = gauge_alpha(s, c, 2.0);
        for (Eigen::Index i = 0; i < 16; ++i) {
            const double v = s.at(i).real();
            CHECK(f.at(i).real() == doctest::Approx(v).epsilon(1e-14));
            CHECK(a.at(i).real() == doctest::Approx(2.0 * v * v / 2.0).epsilon(1e-14));
        }
    }
    SUBCASE("single n=-1 term: f = 1/s, alpha = -e log|s|") {
        GaugeCoefficients c{{{-1, 1.0}}};
        const GridField f = gauge_f(s, c), a = gauge_alpha(s, c, 1.0);
        for (Eigen::Index i = 0; i < 16; ++i) {
            const double v = s.at(i).real();
            CHECK(f.at(i).real() == doctest::Approx(1.0 / v).epsilon(1e-14));
            CHECK(a.at(i).real() == doctest::Approx(-std::log(v)).epsilon(1e-14));
        }
    }
    SUBCASE("even exponents and zero density are rejected") {
        CHECK_THROWS_AS(gauge_f(s, GaugeCoefficients{{{2, 1.0}}}), DomainError);
        s.at(3) = 0.0;
        CHECK_THROWS_AS(gauge_f(s, GaugeCoefficients{{{1, 1.0}}}), ZeroDensity);
    }
}

TEST_CASE("gauge constraint residual converges at second order for mixed coefficients") {
    const std::vector<GaugeCoefficients> sets = {
        {{{1, 1.0}}},
        {{{1, 2.0}, {-1, 0.5}, {3, -1.0}}},
        {{{-1, 1.0}, {5, 0.1}}},
    };
    for (const auto& c : sets) {
        double prev = 0.0;
        for (const int n : {64, 128, 256}) {
            const double h = 4.0 / n;
            GridField s(GridKind::Line, {n}, {h}, {0.0}, 1);
            for (Eigen::Index i = 0; i < n; ++i)
                s.at(i) = 1.0 + 0.3 * std::sin(1.7 * s.coord(0, i));
            const double res = gauge_constraint_residual(s, c, 1.3);
            if (prev > 0.0) CHECK(std::log2(prev / res) >= 1.9);
            prev = res;
        }
    }
    // Constant density: exactly zero.
    GridField s(GridKind::Line, {32}, {0.1}, {0.0}, 1);
    s.values().setConstant(2.0);
    CHECK(gauge_constraint_residual(s, {{{1, 1.0}, {3, 0.2}}}, 1.0) == 0.0);
}

TEST_CASE("density d'Alembertian vanishes for one plane wave, not for two") {
    const double m = 1.0;
    const double p1 = 0.4, p2 = -0.9;
    const double E1 = std::sqrt(p1 * p1 + m * m), E2 = std::sqrt(p2 * p2 + m * m);
    const Eigen::Index n = 129;
    const double ht = 2.0 / (n - 1), hz = 6.0 / (n - 1);

    const GridField one = plane_wave(n, n, ht, hz, E1, p1, m);
    CHECK(dalembert_density_residual(one) < 1e-10);

    GridField two = plane_wave(n, n, ht, hz, E1, p1, m);
    const GridField other = plane_wave(n, n, ht, hz, E2, p2, m, 0.5);
    two.values() += other.values();
    const double res = dalembert_density_residual(two);
    // Cross term oscillates at (p1 - p2); its d'Alembertian is of size
    // |(p1-p2)^2| times the cross amplitude.
    const double dp2 = std::abs(std::pow(E1 - E2, 2) - std::pow(p1 - p2, 2));
    CHECK(res > 0.1 * dp2);
}

TEST_CASE("gauge transformation preserves modulus and the equation residual") {
    const double m = 1.0, pz = 0.6, e = 0.8;
    const double E = std::sqrt(pz * pz + m * m);

    double prev_gap = 0.0;
    for (const Eigen::Index n : {65, 129}) {
        const double ht = 1.0 / (n - 1), hz = 3.0 / (n - 1);
        const GridField psi = plane_wave(n, n, ht, hz, E, pz, m);
        const GridField s = scalar_density(psi);

        // Constant density of a single plane wave: need a varying test
        // density instead, built by modulating the amplitude.
        GridField mod = psi;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                const double w = 1.0 + 0.2 * std::sin(mod.coord(1, j));
                mod.values().col(mod.site(i, j)) *= w;
            }
        const GridField smod = scalar_density(mod);

        GridField a(GridKind::SpaceTime, {n, n}, {ht, hz}, {psi.origin()[0], 0.0}, 4);
        for (Eigen::Index st = 0; st < a.size(); ++st) {
            a.at(st, 0) = 0.05;
            a.at(st, 3) = -0.02;
        }
        const GaugeCoefficients c{{{1, 0.4}}};
        const GaugePair out = gauge_transform(mod, a, smod, c, e);

        // Modulus preserved pointwise.
        CHECK((out.psi.values().cwiseAbs() - mod.values().cwiseAbs()).maxCoeff() < 1e-13);
        // Transformed density is unchanged.
        const GridField s2 = scalar_density(out.psi);
        CHECK((s2.values() - smod.values()).cwiseAbs().maxCoeff() < 1e-12);

        // Residual with the density-scaled interaction potential is gauge
        // invariant up to the stencil error.
        const double r0 = equation_residual(mod, nullptr, e, m);
        GridField at0 = scale_by_density(a, smod);
        const double r1 = equation_residual(mod, &at0, e, m);
        GridField at1 = scale_by_density(out.a, s2);
        const double r2 = equation_residual(out.psi, &at1, e, m);
        const double gap = std::abs(r2 - r1);
        (void)r0;
        if (prev_gap > 0.0) CHECK(prev_gap / gap >= 3.5);
        prev_gap = gap;
        CHECK(gap < 0.05 * std::max(r1, 1e-3));
    }

    // Empty coefficient set: identity transform.
    const GridField psi = plane_wave(17, 17, 0.1, 0.1, E, pz, m);
    const GridField s = scalar_density(psi);
    GridField a(GridKind::SpaceTime, {17, 17}, {0.1, 0.1}, {psi.origin()[0], 0.0}, 4);
    const GaugePair id = gauge_transform(psi, a, s, GaugeCoefficients{}, 1.0);
    CHECK((id.psi.values() - psi.values()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((id.a.values() - a.values()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("fluctuation mass is the Minkowski contraction, pointwise") {
    GridField eps(GridKind::Line, {8}, {1.0}, {0.0}, 4);
    GridField kap = eps.like_zero();
    // eps = kap = (1,0,0,0) -> mu^2 = -2.
    for (Eigen::Index s = 0; s < 8; ++s) {
        eps.at(s, 0) = 1.0;
        kap.at(s, 0) = 1.0;
    }
    GridField mu2 = fluctuation_mass_sq(eps, kap);
    for (Eigen::Index s = 0; s < 8; ++s) CHECK(mu2.at(s).real() == -2.0);

    // Minkowski-orthogonal pair -> 0.
    for (Eigen::Index s = 0; s < 8; ++s) {
        eps.at(s, 0) = 1.0;
        eps.at(s, 1) = 1.0;
        kap.at(s, 0) = 1.0;
        kap.at(s, 1) = 1.0; // eps.kap = 1 - 1 = 0
    }
    mu2 = fluctuation_mass_sq(eps, kap);
    for (Eigen::Index s = 0; s < 8; ++s) CHECK(std::abs(mu2.at(s)) == 0.0);

    // Random fields against an independent loop.
    std::srand(99);
    for (Eigen::Index s = 0; s < 8; ++s)
        for (int c = 0; c < 4; ++c) {
            eps.at(s, c) = Complex(std::rand() % 100, 0.0) / 50.0 - 1.0;
            kap.at(s, c) = Complex(std::rand() % 100, 0.0) / 50.0 - 1.0;
        }
    mu2 = fluctuation_mass_sq(eps, kap);
    for (Eigen::Index s = 0; s < 8; ++s) {
        Complex want = -2.0 * (eps.at(s, 0) * kap.at(s, 0) - eps.at(s, 1) * kap.at(s, 1) -
                               eps.at(s, 2) * kap.at(s, 2) - eps.at(s, 3) * kap.at(s, 3));
        CHECK(std::abs(mu2.at(s) - want) < 1e-14);
    }
}
