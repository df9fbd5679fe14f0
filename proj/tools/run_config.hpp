// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

#include "utdirac/spectrum.hpp"

namespace utdirac::cli {

/// Effective run configuration. Precedence: built-in defaults, then the
/// key = value config file (path from --config or UNITARY_DIRAC_CONFIG),
/// then explicit command-line flags.
struct RunConfig {
    double alpha = kAlphaDefault;
    std::string mass_unit = "electron_mass"; // or "eV"
    std::string output = "csv";              // or "json"
    double tol_energy = 1e-12;
    double tol_residual = 1e-10;
    std::map<std::string, std::string> extra;

    /// Scale factor from electron-mass units to the requested unit.
    double unit_scale() const { return mass_unit == "eV" ? kElectronMassEv : 1.0; }
};

/// Parse a plain key = value file ('#' comments, blank lines allowed).
/// Unknown keys land in extra. Throws DomainError on malformed lines.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Resolve the config: optional --config path wins over the env var.
RunConfig resolve_config(const std::string& config_flag);

/// Fixed-precision float formatting (12 significant digits for JSON,
/// 9 for CSV), locale-independent.
std::string fmt_json(double v);
std::string fmt_csv(double v);

/// The standard first line of every output: version, alpha, units, tolerances.
std::string header_line(const RunConfig& cfg);

} // namespace utdirac::cli
