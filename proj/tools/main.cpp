// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>

#include "reproduce.hpp"
#include "run_config.hpp"
#include "utdirac/algebra.hpp"
#include "utdirac/fields.hpp"
#include "utdirac/nls.hpp"
#include "utdirac/radial.hpp"
#include "utdirac/scattering.hpp"
#include "utdirac/spectrum.hpp"

namespace {

using namespace utdirac;
using namespace utdirac::cli;

std::ostream& open_out(std::ofstream& file, const std::string& out_path) {
    if (out_path.empty()) return std::cout;
    file.open(out_path);
    if (!file) throw DomainError("cannot open output file " + out_path);
    return file;
}

int cmd_spectrum(const RunConfig& cfg, int n, double z, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    const CouplingConstants c{cfg.alpha, z};
    const double scale = cfg.unit_scale();
    os << header_line(cfg) << "\n";
    if (cfg.output == "json") {
        os << "{\"z\":" << fmt_json(z) << ",\"n\":" << n << ",\"levels\":[";
        bool first = true;
        for (const LevelRow& row : level_order_report(n, c)) {
            os << (first ? "" : ",") << "{\"l\":" << row.level.l << ",\"j\":"
               << fmt_json(row.level.j) << ",\"kappa\":" << row.level.kappa
               << ",\"e_modified\":" << fmt_json(row.e_modified * scale)
               << ",\"rank_modified\":" << row.rank_modified << ",\"e_conventional\":";
            if (row.e_conventional)
                os << fmt_json(*row.e_conventional * scale) << ",\"rank_conventional\":"
                   << *row.rank_conventional;
            else
                os << "\"singular\",\"rank_conventional\":null";
            os << "}";
            first = false;
        }
        os << "]}\n";
    } else {
        os << "n,l,j,kappa,e_modified,rank_modified,e_conventional,rank_conventional\n";
        for (const LevelRow& row : level_order_report(n, c)) {
            os << n << "," << row.level.l << "," << fmt_csv(row.level.j) << ","
               << row.level.kappa << "," << fmt_csv(row.e_modified * scale) << ","
               << row.rank_modified << ",";
            if (row.e_conventional)
                os << fmt_csv(*row.e_conventional * scale) << "," << *row.rank_conventional;
            else
                os << "singular,";
            os << "\n";
        }
    }
    return 0;
}

int cmd_radial(const RunConfig& cfg, double z, int kappa, int n_r, const std::string& coupling,
               int points, const std::string& out_path) {
    RadialProblem p;
    p.alpha = cfg.alpha;
    p.Z = z;
    p.kappa = kappa;
    p.n_r = n_r;
    p.n_points = points;
    p.coupling = (coupling == "vector") ? Coupling::Vector : Coupling::Scalar;
    const BoundState st = solve_bound(p);

    const LevelSpec level = LevelSpec::from_kappa(kappa, n_r);
    const CouplingConstants c{cfg.alpha, z};
    const double closed = (p.coupling == Coupling::Scalar) ? energy_modified(level, c)
                                                           : energy_conventional(level, c);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    os << header_line(cfg) << "\n";
    const double scale = cfg.unit_scale();
    if (cfg.output == "json") {
        os << "{\"z\":" << fmt_json(z) << ",\"kappa\":" << kappa << ",\"n_r\":" << n_r
           << ",\"coupling\":\"" << coupling << "\",\"energy\":" << fmt_json(st.energy * scale)
           << ",\"energy_closed_form\":" << fmt_json(closed * scale)
           << ",\"node_count\":" << st.node_count
           << ",\"matching_defect\":" << fmt_json(st.residual) << "}\n";
    } else {
        os << "z,kappa,n_r,coupling,energy,energy_closed_form,node_count,matching_defect\n";
        os << fmt_csv(z) << "," << kappa << "," << n_r << "," << coupling << ","
           << fmt_csv(st.energy * scale) << "," << fmt_csv(closed * scale) << ","
           << st.node_count << "," << fmt_csv(st.residual) << "\n";
        os << "r,G,F\n";
        for (Eigen::Index i = 0; i < st.r.size(); ++i)
            os << fmt_csv(st.r[i]) << "," << fmt_csv(st.G[i]) << "," << fmt_csv(st.F[i]) << "\n";
    }
    return 0;
}

int cmd_scatter(const RunConfig& cfg, double energy, double target_mass, double z,
                const std::string& theta_grid, const std::string& mode,
                const std::string& out_path) {
    double th_lo = 10.0, th_hi = 170.0;
    int th_n = 17;
    if (!theta_grid.empty() &&
        std::sscanf(theta_grid.c_str(), "%lf:%lf:%d", &th_lo, &th_hi, &th_n) != 3)
        throw DomainError("scatter: --theta-grid expects lo:hi:count in degrees");
    if (th_n < 1) throw DomainError("scatter: empty theta grid");

    const double m_ev = kElectronMassEv;
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    os << header_line(cfg) << "\n";
    os << "theta_deg,dcs_modified,dcs_conventional,ratio\n";
    for (int i = 0; i < th_n; ++i) {
        const double deg = th_lo + (th_n == 1 ? 0.0 : (th_hi - th_lo) * i / (th_n - 1));
        const double theta = deg * std::numbers::pi / 180.0;
        double modified, conv;
        if (target_mass > 0.0 && std::isfinite(target_mass)) {
            ScatterKinematics kin{energy / m_ev, theta, target_mass / m_ev, 1.0};
            modified = dcs_ep(kin, cfg.alpha,
                           mode == "exact_sigma1" ? EpMode::ExactSigma1 : EpMode::HighESigma1);
            conv = dcs_ep_conventional(kin, cfg.alpha);
        } else {
            const double E = energy / m_ev;
            modified = dcs_coulomb(E, theta, z, cfg.alpha, 1.0);
            // Conventional benchmark: Mott formula for a static charge.
            const double p2 = E * E - 1.0, beta2 = p2 / (E * E);
            const double s2 = std::sin(theta / 2.0) * std::sin(theta / 2.0);
            conv = z * z * cfg.alpha * cfg.alpha * (1.0 - beta2 * s2) /
                   (4.0 * p2 * beta2 * s2 * s2);
        }
        os << fmt_csv(deg) << "," << fmt_csv(modified) << "," << fmt_csv(conv) << ","
           << fmt_csv(modified / conv) << "\n";
    }
    return 0;
}

int cmd_nls(const RunConfig& cfg, const std::string& mode, double g, int n, double dt, double T,
            double box, const std::string& out_path) {
    if (n < 8) throw DomainError("nls: need at least 8 grid points");
    const double dx = box / n;
    NlsState st{GridField(GridKind::Line, {n}, {dx}, {-box / 2.0}, 1), g, 1.0,
                mode == "choquard" ? NlsMode::Choquard : NlsMode::Cubic, dt, 0.0};
    for (Eigen::Index i = 0; i < n; ++i) st.psi.at(i) = 1.0 / std::cosh(st.psi.coord(0, i));

    const NlsInvariants before = conserved_quantities(st);
    const NlsState out = evolve(st, T);
    const NlsInvariants after = conserved_quantities(out);

    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    os << header_line(cfg) << "\n";
    os << "# mode=" << mode << " g=" << fmt_csv(g) << " T=" << fmt_csv(T)
       << " norm_drift=" << fmt_csv(std::abs(after.norm - before.norm))
       << " energy_drift=" << fmt_csv(std::abs(after.energy - before.energy)) << "\n";
    os << "x,re,im,abs2\n";
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex v = out.psi.at(i);
        os << fmt_csv(out.psi.coord(0, i)) << "," << fmt_csv(v.real()) << ","
           << fmt_csv(v.imag()) << "," << fmt_csv(std::norm(v)) << "\n";
    }
    return 0;
}

int cmd_fields(const RunConfig& cfg, int grid, const std::string& out_path) {
    if (grid < 8 || grid > 64) throw DomainError("fields: grid must be 8..64");
    const double h = 8.0 / grid;
    GridField source(GridKind::Space3, {grid, grid, grid}, {h, h, h},
                     {-4.0 + h / 2, -4.0 + h / 2, -4.0 + h / 2}, 1);
    // Unit point charge in the cell nearest the origin.
    const Eigen::Index c = grid / 2;
    source.at(source.site(c, c, c)) = 1.0 / (h * h * h);
    const GridField phi = greens_poisson(source);

    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    os << header_line(cfg) << "\n";
    os << "r,phi,coulomb_reference\n";
    for (Eigen::Index i = 0; i < grid; ++i) {
        const double x = phi.coord(0, i) - phi.coord(0, c);
        const double r = std::abs(x);
        if (r == 0.0) continue;
        os << fmt_csv(r) << "," << fmt_csv(phi.at(phi.site(i, c, c)).real()) << ","
           << fmt_csv(1.0 / (4.0 * std::numbers::pi * r)) << "\n";
    }
    return 0;
}

int cmd_gauge_check(const RunConfig& cfg, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    os << header_line(cfg) << "\n";
    os << "coefficients,n_sites,residual,order\n";
    const std::vector<std::pair<std::string, GaugeCoefficients>> sets = {
        {"C1=1", {{{1, 1.0}}}},
        {"C1=2;C-1=0.5;C3=-1", {{{1, 2.0}, {-1, 0.5}, {3, -1.0}}}},
        {"C-1=1;C5=0.1", {{{-1, 1.0}, {5, 0.1}}}},
    };
    int bad = 0;
    for (const auto& [label, coeff] : sets) {
        double prev = 0.0;
        for (int n : {64, 128, 256}) {
            const double h = 4.0 / n;
            GridField s(GridKind::Line, {n}, {h}, {0.0}, 1);
            for (Eigen::Index i = 0; i < n; ++i)
                s.at(i) = 1.0 + 0.3 * std::sin(1.7 * s.coord(0, i));
            const double res = gauge_constraint_residual(s, coeff, 1.0);
            double order = 0.0;
            if (prev > 0.0) order = std::log2(prev / res);
            os << label << "," << n << "," << fmt_csv(res) << ","
               << (prev > 0.0 ? fmt_csv(order) : std::string("")) << "\n";
            if (prev > 0.0 && order < 1.9) ++bad;
            prev = res;
        }
    }
    return bad == 0 ? 0 : 1;
}

int cmd_algebra_check(const RunConfig& cfg, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    os << header_line(cfg) << "\n";
    int failures = 0;
    auto check = [&](bool ok, const std::string& what, double v) {
        os << (ok ? "PASS" : "FAIL") << "  " << what << "  measured=" << fmt_json(v) << "\n";
        if (!ok) ++failures;
    };

    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const Matrix4c anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
            const double want = (mu == nu) ? 2.0 * metric_diag(mu) : 0.0;
            worst = std::max(worst,
                             (anti - want * Matrix4c::Identity()).cwiseAbs().maxCoeff());
        }
    check(worst == 0.0, "gamma anticommutators {g^mu,g^nu} = 2 g^munu", worst);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ur(-1.0, 1.0);
    double worst_boost = 0.0;
    for (int i = 0; i < 100; ++i) {
        Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                omega(a, b) = 0.5 * ur(rng);
                omega(b, a) = -omega(a, b);
            }
        const Eigen::Matrix4d a = lorentz_from_generator(omega);
        const Matrix4c L = spinor_lorentz(a);
        for (int mu = 0; mu < 4; ++mu) {
            Matrix4c rhs = Matrix4c::Zero();
            for (int nu = 0; nu < 4; ++nu) rhs += a(mu, nu) * gamma(nu);
            worst_boost = std::max(
                worst_boost, (L.inverse() * gamma(mu) * L - rhs).cwiseAbs().maxCoeff());
        }
    }
    check(worst_boost <= 1e-10, "spinor map of 100 random Lorentz transformations", worst_boost);

    std::normal_distribution<double> un(0.0, 1.0);
    double worst_pair = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Eigen::Vector3d p(un(rng), un(rng), un(rng));
        const Matrix4c H = energy_operator_matrix(p, un(rng), Eigen::Vector3d(un(rng), un(rng), un(rng)));
        Eigen::ComplexEigenSolver<Matrix4c> es(H);
        Eigen::Vector4d ev = es.eigenvalues().real();
        std::sort(ev.data(), ev.data() + 4);
        worst_pair = std::max(worst_pair, std::abs(ev[0] + ev[3]));
        worst_pair = std::max(worst_pair, std::abs(ev[1] + ev[2]));
        worst_pair = std::max(worst_pair, es.eigenvalues().imag().cwiseAbs().maxCoeff());
    }
    check(worst_pair <= 1e-12, "energy operator +/- spectrum pairing, 1000 draws", worst_pair);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for a unitary-time-inversion-invariant relativistic wave "
                 "equation and its conventional counterpart"};
    app.require_subcommand(1);

    std::string config_path, out_path, output_override;
    app.add_option("--config", config_path, "key = value config file");
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--output", output_override, "output format: csv or json");
    double alpha_flag = -1.0;
    app.add_option("--alpha", alpha_flag, "fine-structure constant override");

    auto* sp = app.add_subcommand("spectrum", "closed-form hydrogenic levels for one n-shell");
    int sp_n = 2;
    double sp_z = 1.0;
    sp->add_option("--n", sp_n, "principal quantum number");
    sp->add_option("--z", sp_z, "nuclear charge");

    auto* ra = app.add_subcommand("radial", "radial bound-state eigensolver");
    double ra_z = 1.0;
    int ra_kappa = -1, ra_nr = 0, ra_points = 4000;
    std::string ra_coupling = "scalar";
    ra->add_option("--z", ra_z, "nuclear charge");
    ra->add_option("--kappa", ra_kappa, "relativistic angular quantum number");
    ra->add_option("--nr", ra_nr, "radial node count");
    ra->add_option("--coupling", ra_coupling, "scalar or vector");
    ra->add_option("--points", ra_points, "log-grid samples");

    auto* sc = app.add_subcommand("scatter", "tree-level cross-section sweep");
    double sc_e = 188e6, sc_m = 938.272e6, sc_z = 1.0;
    std::string sc_grid, sc_mode = "highE_sigma1";
    sc->add_option("--energy", sc_e, "beam energy in eV");
    sc->add_option("--target-mass", sc_m, "target mass in eV (0 = static Coulomb center)");
    sc->add_option("--z", sc_z, "charge for the static Coulomb case");
    sc->add_option("--theta-grid", sc_grid, "lo:hi:count in degrees");
    sc->add_option("--mode", sc_mode, "exact_sigma1 or highE_sigma1");

    auto* nl = app.add_subcommand("nls", "nonlinear Schroedinger evolution from a sech start");
    std::string nl_mode = "cubic";
    double nl_g = -1.0, nl_dt = 1e-3, nl_T = 1.0, nl_box = 40.0;
    int nl_n = 1024;
    nl->add_option("--mode", nl_mode, "cubic or choquard");
    nl->add_option("--g", nl_g, "nonlinearity coupling");
    nl->add_option("--n", nl_n, "grid points");
    nl->add_option("--dt", nl_dt, "time step");
    nl->add_option("--T", nl_T, "duration");
    nl->add_option("--box", nl_box, "box length");

    auto* fi = app.add_subcommand("fields", "Poisson potential of a point source");
    int fi_grid = 32;
    fi->add_option("--grid", fi_grid, "samples per axis (8..64)");

    auto* gc = app.add_subcommand("gauge-check", "gauge-constraint refinement study");
    auto* ac = app.add_subcommand("algebra-check", "matrix identity self-test");

    auto* re = app.add_subcommand("reproduce", "named reproduction recipes");
    std::string re_target;
    re->add_option("target", re_target,
                   "percent-table | ordering | rutherford-limit | soliton | spin-sums")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = resolve_config(config_path);
        if (alpha_flag > 0.0) cfg.alpha = alpha_flag;
        if (!output_override.empty()) {
            if (output_override != "csv" && output_override != "json")
                throw DomainError("--output must be csv or json");
            cfg.output = output_override;
        }

        if (*sp) return cmd_spectrum(cfg, sp_n, sp_z, out_path);
        if (*ra) return cmd_radial(cfg, ra_z, ra_kappa, ra_nr, ra_coupling, ra_points, out_path);
        if (*sc) return cmd_scatter(cfg, sc_e, sc_m, sc_z, sc_grid, sc_mode, out_path);
        if (*nl) return cmd_nls(cfg, nl_mode, nl_g, nl_n, nl_dt, nl_T, nl_box, out_path);
        if (*fi) return cmd_fields(cfg, fi_grid, out_path);
        if (*gc) return cmd_gauge_check(cfg, out_path);
        if (*ac) return cmd_algebra_check(cfg, out_path);
        if (*re) {
            std::ofstream file;
            std::ostream& os = open_out(file, out_path);
            return run_reproduce(re_target, cfg, os) == 0 ? 0 : 1;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
