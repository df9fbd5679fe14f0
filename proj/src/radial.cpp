// SPDX-License-Identifier: Apache-2.0
#include "utdirac/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace utdirac {
namespace {

// Coupled first-order system for y = (G, F) in the variable x = log r,
// d/dx = r d/dr. For scalar coupling the Coulomb term -Zalpha/r enters the
// mass slot; for vector coupling it enters the energy slot.
struct Rhs {
    Coupling coupling;
    double kappa, za, E, m;

    Eigen::Vector2d operator()(double x, const Eigen::Vector2d& y) const {
        const double r = std::exp(x);
        const double G = y[0], F = y[1];
        double ep, em; // coefficients of F in G' and of G in F' (1/r units)
        if (coupling == Coupling::Scalar) {
            ep = E + m - za / r;
            em = E - m + za / r;
        } else {
            ep = E + m + za / r;
            em = E - m + za / r;
        }
        // dG/dr = -(kappa/r) G + ep * F ; dF/dr = (kappa/r) F - em * G
        return Eigen::Vector2d(r * (-(kappa / r) * G + ep * F),
                               r * ((kappa / r) * F - em * G));
    }
};

// Power-series seed at r_min: (G, F) ~ r^gamma (a0 + a1 r, b0 + b1 r).
void series_seed(const RadialProblem& p, double E, double r, double& G, double& F) {
    const double za = p.zalpha();
    const double kappa = p.kappa;
    const double m = p.mass;
    double gamma, b0;
    const double a0 = 1.0;
    if (p.coupling == Coupling::Scalar) {
        gamma = std::sqrt(kappa * kappa + za * za);
        b0 = -(gamma + kappa) * a0 / za;
    } else {
        const double disc = kappa * kappa - za * za;
        if (disc <= 0.0)
            throw SingularRegime("vector coupling supercritical: Z*alpha >= |kappa|");
        gamma = std::sqrt(disc);
        b0 = (gamma + kappa) * a0 / za;
    }
    // Next order from the recursion at power gamma+1:
    //   (gamma+1+kappa) a1 - B b1 = (E+m) b0
    //   C a1 + (gamma+1-kappa) b1 = -(E-m) a0
    // with B = za (scalar) or -za (vector), C = za in both conventions used
    // here; determinant reduces to 2*gamma + 1 in both cases.
    const double A = gamma + 1.0 + kappa;
    const double D = gamma + 1.0 - kappa;
    const double B = (p.coupling == Coupling::Scalar) ? za : -za;
    const double C = za;
    const double pr = (E + m) * b0;
    const double qr = -(E - m) * a0;
    const double det = A * D + B * C; // == 2*gamma + 1
    const double a1 = (pr * D + B * qr) / det;
    const double b1 = (A * qr - C * pr) / det;
    const double rg = std::pow(r, gamma);
    G = rg * (a0 + a1 * r);
    F = rg * (b0 + b1 * r);
}

Eigen::Vector2d rk4_step(const Rhs& rhs, double x, const Eigen::Vector2d& y, double h) {
    const Eigen::Vector2d k1 = rhs(x, y);
    const Eigen::Vector2d k2 = rhs(x + 0.5 * h, y + 0.5 * h * k1);
    const Eigen::Vector2d k3 = rhs(x + 0.5 * h, y + 0.5 * h * k2);
    const Eigen::Vector2d k4 = rhs(x + h, y + h * k3);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

struct Shot {
    double defect = 0.0;
    int node_count = 0;
    Eigen::ArrayXd G, F; // full normalized solution (filled only on demand)
};

// Integrate outward to the match index and inward back to it; return the
// Wronskian-like matching defect and the outward node count of G.
Shot shoot(const RadialProblem& p, const Eigen::ArrayXd& x, int i_match, double E,
           bool keep_solution) {
    const int n = static_cast<int>(x.size());
    const Rhs rhs{p.coupling, static_cast<double>(p.kappa), p.zalpha(), E, p.mass};
    const double m = p.mass;

    Eigen::ArrayXd Gout = Eigen::ArrayXd::Zero(n), Fout = Eigen::ArrayXd::Zero(n);
    {
        double G0, F0;
        series_seed(p, E, std::exp(x[0]), G0, F0);
        Eigen::Vector2d y(G0, F0);
        Gout[0] = y[0];
        Fout[0] = y[1];
        for (int i = 0; i < i_match; ++i) {
            const double h = x[i + 1] - x[i];
            y = rk4_step(rhs, x[i], y, h);
            // Rescale to dodge overflow; only sign structure and the matching
            // ratio matter before normalization.
            const double s = y.cwiseAbs().maxCoeff();
            if (s > 1e100) y /= s;
            Gout[i + 1] = y[0];
            Fout[i + 1] = y[1];
        }
    }

    Eigen::ArrayXd Gin = Eigen::ArrayXd::Zero(n), Fin = Eigen::ArrayXd::Zero(n);
    {
        const double lambda = std::sqrt(std::max(m * m - E * E, 1e-300));
        Eigen::Vector2d y(1.0, -lambda / (E + m));
        Gin[n - 1] = y[0];
        Fin[n - 1] = y[1];
        for (int i = n - 1; i > i_match; --i) {
            const double h = x[i - 1] - x[i];
            y = rk4_step(rhs, x[i], y, h);
            const double s = y.cwiseAbs().maxCoeff();
            if (s > 1e100) y /= s;
            Gin[i - 1] = y[0];
            Fin[i - 1] = y[1];
        }
    }

    Shot out;
    for (int i = 1; i <= i_match; ++i)
        if (Gout[i - 1] != 0.0 && Gout[i] * Gout[i - 1] < 0.0) ++out.node_count;

    const double go = Gout[i_match], fo = Fout[i_match];
    const double gi = Gin[i_match], fi = Fin[i_match];
    const double w = go * fi - fo * gi;
    out.defect = w / (std::abs(go * fi) + std::abs(fo * gi) + 1e-300);

    if (keep_solution) {
        // Stitch: scale inward branch to match G at i_match, then normalize
        // int (G^2 + F^2) dr = 1 by the trapezoid rule on the log grid.
        const double scale = (gi != 0.0) ? go / gi : 1.0;
        out.G = Gout;
        out.F = Fout;
        for (int i = i_match; i < n; ++i) {
            out.G[i] = scale * Gin[i];
            out.F[i] = scale * Fin[i];
        }
        const Eigen::ArrayXd r = x.exp();
        const Eigen::ArrayXd dens = (out.G.square() + out.F.square()) * r; // dr = r dx
        double norm = 0.0;
        for (int i = 0; i + 1 < n; ++i)
            norm += 0.5 * (dens[i] + dens[i + 1]) * (x[i + 1] - x[i]);
        const double inv = 1.0 / std::sqrt(norm);
        out.G *= inv;
        out.F *= inv;
    }
    return out;
}

struct Setup {
    Eigen::ArrayXd x;
    double e_lo, e_hi;
};

Setup make_grid(const RadialProblem& p) {
    if (p.Z <= 0.0 || p.n_points < 64) throw DomainError("radial: bad problem parameters");
    if (p.coupling == Coupling::Vector && p.zalpha() >= std::abs(p.kappa))
        throw SingularRegime("vector coupling supercritical: Z*alpha >= |kappa|");
    const double m = p.mass;
    const int n_principal = p.n_r + std::abs(p.kappa);
    const double za = p.zalpha();
    // Nonrelativistic estimate locates the tail scale; clamp for strong Z.
    const double e_est = m * std::max(1.0 - za * za / (2.0 * n_principal * n_principal), 0.2);
    const double lambda_est = std::sqrt(std::max(m * m - e_est * e_est, 1e-6 * m * m));
    const double r_min = (p.r_min > 0.0) ? p.r_min : 1e-6 / (p.Z * m);
    const double r_max = (p.r_max > 0.0) ? p.r_max : 40.0 / lambda_est;
    if (r_max <= r_min * 10.0) throw DomainError("radial: r_max too small");
    Setup s;
    s.x = Eigen::ArrayXd::LinSpaced(p.n_points, std::log(r_min), std::log(r_max));
    s.e_lo = -m + 1e-9 * m;
    s.e_hi = m - 1e-9 * m;
    return s;
}

int match_index(const Eigen::ArrayXd& x, double E, double mass, double za) {
    // Outer classical turning point of the Coulomb tail, E = m - za/r_t,
    // clamped into the grid.
    double r_t = (mass - E > 1e-12) ? za / (mass - E) : std::exp(x[x.size() - 1]);
    const double xt = std::log(std::max(r_t, std::exp(x[0]) * 2.0));
    int i = static_cast<int>(x.size()) / 2;
    for (int k = 1; k + 1 < x.size(); ++k)
        if (x[k] >= xt) {
            i = k;
            break;
        }
    i = std::clamp(i, 8, static_cast<int>(x.size()) - 9);
    return i;
}

} // namespace

BoundState solve_bound(const RadialProblem& problem) {
    const Setup s = make_grid(problem);
    const double m = problem.mass;
    const int n_r = problem.n_r;
    LevelSpec::from_kappa(problem.kappa, problem.n_r, +1).validate(); // rejects invalid levels

    auto probe = [&](double E) {
        return shoot(problem, s.x, match_index(s.x, E, m, problem.zalpha()), E, false);
    };
    auto solution_at = [&](double E) {
        return shoot(problem, s.x, match_index(s.x, E, m, problem.zalpha()), E, true);
    };

    // The matching defect changes sign exactly at the eigenvalues, every
    // bound energy of a kappa channel is strictly positive, and the mirror
    // partners of the spectrum sit at strictly negative energy. Scanning
    // upward from E = 0+ therefore meets the channel's levels in order of
    // n_r, starting at n_r = 0 for kappa < 0 and n_r = 1 for kappa > 0, so
    // the requested state is simply the k-th defect root. Coulomb levels
    // accumulate at E -> m, so the scan is uniform in the effective
    // principal number t, E(t) = m(1 - (Za)^2/2t^2), which spaces them
    // evenly and keeps consecutive roots many steps apart.
    const double za = problem.zalpha();
    const int target_root = n_r + (problem.kappa < 0 ? 1 : 0);
    const double t_min = za / std::sqrt(2.0) * (1.0 + 1e-9); // E(t_min) = 0+
    const double t_max = n_r + std::abs(problem.kappa) + 5.0;
    auto energy_of = [&](double t) {
        return std::min(m * (1.0 - za * za / (2.0 * t * t)), s.e_hi);
    };

    const int steps = 600;
    int roots_seen = 0;
    double prev_e = energy_of(t_min);
    double prev_f = probe(prev_e).defect;
    for (int k = 1; k <= steps; ++k) {
        const double e = energy_of(t_min + (t_max - t_min) * k / steps);
        const double f = probe(e).defect;
        if (prev_f * f < 0.0) {
            ++roots_seen;
            double a = prev_e, b = e, fa = prev_f;
            double e_mid = 0.5 * (a + b);
            for (int it = 0; it < problem.max_iter && b - a > problem.e_tol; ++it) {
                e_mid = 0.5 * (a + b);
                const double fm = probe(e_mid).defect;
                if (fm == 0.0) break;
                if (fa * fm < 0.0) {
                    b = e_mid;
                } else {
                    a = e_mid;
                    fa = fm;
                }
            }
            if (b - a > problem.e_tol * 4.0)
                throw NoConvergence("radial: bisection did not reach tolerance");
            if (roots_seen == target_root) {
                Shot final = solution_at(e_mid);
                BoundState st;
                st.energy = e_mid;
                st.r = s.x.exp();
                st.G = final.G;
                st.F = final.F;
                st.node_count = n_r;
                st.residual = std::abs(final.defect);
                st.converged = true;
                return st;
            }
        }
        prev_e = e;
        prev_f = f;
    }
    throw NoConvergence("radial: requested state not found in the scan window");
}

std::vector<ScanPoint> eigen_scan(const RadialProblem& problem, double e_lo, double e_hi,
                                  int steps) {
    if (steps < 2) throw DomainError("eigen_scan: need at least 2 steps");
    const Setup s = make_grid(problem);
    std::vector<ScanPoint> out;
    out.reserve(steps);
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int k = 0; k < steps; ++k) {
        const double e = e_lo + (e_hi - e_lo) * k / (steps - 1);
        Shot sh = shoot(problem, s.x, match_index(s.x, e, problem.mass, problem.zalpha()), e, false);
        ScanPoint pt;
        pt.energy = e;
        pt.defect = sh.defect;
        pt.node_count = sh.node_count;
        pt.sign_change = (k > 0) && (prev * sh.defect < 0.0);
        prev = sh.defect;
        out.push_back(pt);
    }
    return out;
}

} // namespace utdirac
