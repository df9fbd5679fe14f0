// SPDX-License-Identifier: Apache-2.0
#include "run_config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "utdirac/errors.hpp"

namespace utdirac::cli {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string fmt(double v, const char* spec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

} // namespace

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("config: cannot open " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("config: malformed line " + std::to_string(lineno) + " in " + path);
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw DomainError("config: malformed line " + std::to_string(lineno) + " in " + path);
        if (key == "alpha")
            cfg.alpha = std::stod(val);
        else if (key == "mass_unit")
            cfg.mass_unit = val;
        else if (key == "output")
            cfg.output = val;
        else if (key == "tol_energy")
            cfg.tol_energy = std::stod(val);
        else if (key == "tol_residual")
            cfg.tol_residual = std::stod(val);
        else
            cfg.extra[key] = val;
    }
    if (cfg.mass_unit != "electron_mass" && cfg.mass_unit != "eV")
        throw DomainError("config: mass_unit must be electron_mass or eV");
    if (cfg.output != "csv" && cfg.output != "json")
        throw DomainError("config: output must be csv or json");
}

RunConfig resolve_config(const std::string& config_flag) {
    RunConfig cfg;
    std::string path = config_flag;
    if (path.empty()) {
        if (const char* env = std::getenv("UNITARY_DIRAC_CONFIG")) path = env;
    }
    if (!path.empty()) apply_config_file(cfg, path);
    return cfg;
}

std::string fmt_json(double v) { return fmt(v, "%.12g"); }
std::string fmt_csv(double v) { return fmt(v, "%.9g"); }

std::string header_line(const RunConfig& cfg) {
    std::ostringstream os;
    os << "# utdirac 0.1.0 alpha=" << fmt_json(cfg.alpha) << " units=" << cfg.mass_unit
       << " tol_energy=" << fmt_json(cfg.tol_energy)
       << " tol_residual=" << fmt_json(cfg.tol_residual);
    return os.str();
}

} // namespace utdirac::cli
