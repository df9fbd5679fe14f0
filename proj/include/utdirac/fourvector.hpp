// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace utdirac {

/// Contravariant four-vector (t, x, y, z) under metric diag(+,-,-,-).
/// Natural units: hbar = c = 1, energies/momenta in electron-mass units.
struct FourVector {
    double t{0}, x{0}, y{0}, z{0};

    constexpr FourVector() = default;
    constexpr FourVector(double t_, double x_, double y_, double z_)
        : t(t_), x(x_), y(y_), z(z_) {}

    double operator[](int mu) const {
        switch (mu) {
            case 0: return t;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }

    Eigen::Vector3d spatial() const { return {x, y, z}; }

    FourVector operator+(const FourVector& o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
    FourVector operator-(const FourVector& o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
    FourVector operator-() const { return {-t, -x, -y, -z}; }
    FourVector operator*(double c) const { return {c * t, c * x, c * y, c * z}; }
};

/// Minkowski inner product a.b = a0 b0 - a.b (metric diag(+,-,-,-)).
inline double minkowski_dot(const FourVector& a, const FourVector& b) {
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

inline double minkowski_square(const FourVector& a) { return minkowski_dot(a, a); }

/// Metric component g_{mu mu} (diagonal metric, no summation).
constexpr double metric_diag(int mu) { return mu == 0 ? 1.0 : -1.0; }

/// On-shell four-momentum with positive energy for 3-momentum p and mass m.
inline FourVector on_shell(const Eigen::Vector3d& p, double mass) {
    return {std::sqrt(p.squaredNorm() + mass * mass), p.x(), p.y(), p.z()};
}

} // namespace utdirac
