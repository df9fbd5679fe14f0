// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <vector>

#include "utdirac/errors.hpp"

namespace utdirac {

/// CODATA fine-structure constant (overridable everywhere it is consumed).
inline constexpr double kAlphaDefault = 1.0 / 137.035999084;

/// Electron mass in eV, for the optional unit conversion.
inline constexpr double kElectronMassEv = 510998.95;

/// Hydrogenic level quantum numbers. kappa = -(j+1/2) for j = l+1/2 and
/// +(j+1/2) for j = l-1/2; sign selects the energy branch.
struct LevelSpec {
    int n = 1;
    double j = 0.5;
    int l = 0;
    int kappa = -1;
    int sign = +1;

    /// Build from (n, j, l); derives kappa and validates.
    static LevelSpec make(int n, double j, int l, int sign = +1);
    /// Build from (kappa, radial node count); n = n_r + |kappa|.
    static LevelSpec from_kappa(int kappa, int n_r, int sign = +1);

    int n_r() const { return n - std::abs(kappa); }
    void validate() const;
};

struct CouplingConstants {
    double alpha = kAlphaDefault;
    double Z = 1.0;
    double zalpha() const { return Z * alpha; }
};

/// Closed-form bound energy of the scalar-coupled Coulomb equation, in units
/// of m. Regular for every Z > 0.
double energy_modified(const LevelSpec& level, const CouplingConstants& c);

/// Conventional Dirac-Coulomb (Sommerfeld) energy. Throws SingularRegime
/// when Z*alpha >= j + 1/2.
double energy_conventional(const LevelSpec& level, const CouplingConstants& c);

/// Power-series expansion of the positive modified energy through (Z a)^4.
/// Guarded to Z*alpha < 0.3.
double energy_series(const LevelSpec& level, const CouplingConstants& c);

/// Fine-structure splitting m(Za)^4/(2n^3) |1/(j1+1/2) - 1/(j2+1/2)|.
double fine_splitting(int n, double j1, double j2, const CouplingConstants& c);

/// Ground-state percentage difference 1 - sqrt(1 - (Za)^4) between the two
/// theories; domain Z*alpha < 1.
double percent_difference(const CouplingConstants& c);

struct LevelRow {
    LevelSpec level;
    double e_modified = 0;
    std::optional<double> e_conventional; ///< empty when the regime is singular
    int rank_modified = 0;                ///< 0 = highest energy within the n-shell
    std::optional<int> rank_conventional;
};

/// All positive-branch levels sharing n, with per-theory energy ranks.
std::vector<LevelRow> level_order_report(int n, const CouplingConstants& c);

struct ZeemanLine {
    double m_j;
    double shift; ///< first-order energy shift in units of m
};

/// Weak-field linear Zeeman pattern of one level: shift(m_j) from the
/// expectation of -(e/2m) k.B with k = l + sigma, i.e. the Lande projection
/// of j + s. B is along z in units of m^2/e; charge defaults to the electron.
/// Throws DomainError when the shifts are not small against the n-shell
/// fine-structure splitting.
std::vector<ZeemanLine> zeeman_pattern(const LevelSpec& level, const CouplingConstants& c,
                                       double B, double charge = -1.0);

} // namespace utdirac
