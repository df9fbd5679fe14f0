// SPDX-License-Identifier: Apache-2.0
#include "utdirac/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace utdirac {

namespace {

bool half_integer(double j) {
    const double twice = 2.0 * j;
    return std::abs(twice - std::round(twice)) < 1e-12 && std::round(twice) > 0 &&
           static_cast<long>(std::llround(twice)) % 2 == 1;
}

} // namespace

LevelSpec LevelSpec::make(int n, double j, int l, int sign) {
    LevelSpec s;
    s.n = n;
    s.j = j;
    s.l = l;
    s.sign = sign;
    const int jp = static_cast<int>(std::llround(j + 0.5)); // j + 1/2
    s.kappa = (std::abs(j - (l + 0.5)) < 1e-12) ? -jp : +jp;
    s.validate();
    return s;
}

LevelSpec LevelSpec::from_kappa(int kappa, int n_r, int sign) {
    LevelSpec s;
    s.kappa = kappa;
    s.n = n_r + std::abs(kappa);
    s.j = std::abs(kappa) - 0.5;
    s.l = (kappa > 0) ? kappa : -kappa - 1;
    s.sign = sign;
    s.validate();
    return s;
}

void LevelSpec::validate() const {
    if (n < 1) throw DomainError("level: n must be >= 1");
    if (!half_integer(j) || j < 0.5 || j > n - 0.5) throw DomainError("level: bad j");
    if (l < 0 || l > n - 1) throw DomainError("level: bad l");
    if (std::abs(l - j) > 0.5 + 1e-12) throw DomainError("level: j must be l +- 1/2");
    const int jp = static_cast<int>(std::llround(j + 0.5));
    if (std::abs(kappa) != jp) throw DomainError("level: |kappa| must equal j + 1/2");
    const int expected = (std::abs(j - (l + 0.5)) < 1e-12) ? -jp : +jp;
    if (kappa != expected) throw DomainError("level: kappa inconsistent with (j, l)");
    if (sign != 1 && sign != -1) throw DomainError("level: sign must be +-1");
}

double energy_modified(const LevelSpec& level, const CouplingConstants& c) {
    level.validate();
    if (!(c.zalpha() > 0)) throw DomainError("energy_modified: Z*alpha must be positive");
    const double za = c.zalpha();
    const double jp = level.j + 0.5;
    const double denom = level.n - jp + std::sqrt(jp * jp + za * za);
    return level.sign * std::sqrt(1.0 - za * za / (denom * denom));
}

double energy_conventional(const LevelSpec& level, const CouplingConstants& c) {
    level.validate();
    const double za = c.zalpha();
    const double jp = level.j + 0.5;
    if (za >= jp) {
        throw SingularRegime("conventional Dirac-Coulomb has no real solution for Z*alpha >= j+1/2");
    }
    const double denom = level.n - jp + std::sqrt(jp * jp - za * za);
    return level.sign / std::sqrt(1.0 + za * za / (denom * denom));
}

double energy_series(const LevelSpec& level, const CouplingConstants& c) {
    level.validate();
    const double za = c.zalpha();
    if (za >= 0.3) throw DomainError("energy_series: valid only for Z*alpha < 0.3");
    const double n = level.n;
    const double jp = level.j + 0.5;
    const double za2 = za * za;
    return 1.0 - za2 / (2.0 * n * n) +
           (za2 * za2 / (2.0 * n * n * n)) * (1.0 / jp - 1.0 / (4.0 * n));
}

double fine_splitting(int n, double j1, double j2, const CouplingConstants& c) {
    if (n < 1 || !half_integer(j1) || !half_integer(j2) || j1 > n - 0.5 || j2 > n - 0.5) {
        throw DomainError("fine_splitting: invalid quantum numbers");
    }
    const double za = c.zalpha();
    const double za4 = za * za * za * za;
    return za4 / (2.0 * n * n * n) * std::abs(1.0 / (j1 + 0.5) - 1.0 / (j2 + 0.5));
}

double percent_difference(const CouplingConstants& c) {
    const double za = c.zalpha();
    if (za >= 1.0) throw DomainError("percent_difference: requires Z*alpha < 1");
    const double za4 = za * za * za * za;
    return 1.0 - std::sqrt(1.0 - za4);
}

std::vector<LevelRow> level_order_report(int n, const CouplingConstants& c) {
    std::vector<LevelRow> rows;
    for (int twice_j = 1; twice_j <= 2 * n - 1; twice_j += 2) {
        const double j = 0.5 * twice_j;
        for (int l : {static_cast<int>(j - 0.5), static_cast<int>(j + 0.5)}) {
            if (l > n - 1) continue;
            LevelRow row;
            row.level = LevelSpec::make(n, j, l);
            row.e_modified = energy_modified(row.level, c);
            try {
                row.e_conventional = energy_conventional(row.level, c);
            } catch (const SingularRegime&) {
                row.e_conventional.reset();
            }
            rows.push_back(row);
        }
    }
    // rank 0 = highest energy in the shell
    std::vector<size_t> idx(rows.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return rows[a].e_modified > rows[b].e_modified; });
    for (size_t r = 0; r < idx.size(); ++r) rows[idx[r]].rank_modified = static_cast<int>(r);
    std::vector<size_t> cidx;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].e_conventional) cidx.push_back(i);
    }
    std::sort(cidx.begin(), cidx.end(),
              [&](size_t a, size_t b) { return *rows[a].e_conventional > *rows[b].e_conventional; });
    for (size_t r = 0; r < cidx.size(); ++r) rows[cidx[r]].rank_conventional = static_cast<int>(r);
    return rows;
}

std::vector<ZeemanLine> zeeman_pattern(const LevelSpec& level, const CouplingConstants& c,
                                       double B, double charge) {
    level.validate();
    const double j = level.j;
    const double l = level.l;
    // Lande projection of k = l + sigma = j + s onto j
    const double g = 1.0 + (j * (j + 1.0) + 0.75 - l * (l + 1.0)) / (2.0 * j * (j + 1.0));
    std::vector<ZeemanLine> lines;
    double max_shift = 0.0;
    for (double mj = -j; mj <= j + 1e-9; mj += 1.0) {
        const double shift = -(charge / 2.0) * g * mj * B;
        max_shift = std::max(max_shift, std::abs(shift));
        lines.push_back({mj, shift});
    }
    if (level.n >= 2 && B != 0.0) {
        const double split = fine_splitting(level.n, 0.5, 1.5, c);
        if (max_shift > 0.1 * split) {
            throw DomainError("zeeman_pattern: field too strong for the weak-field regime");
        }
    }
    return lines;
}

} // namespace utdirac
