// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "utdirac/errors.hpp"

namespace utdirac {

using Complex = std::complex<double>;

enum class GridKind {
    Line,      ///< 1 spatial axis
    SpaceTime, ///< 1+1: axis 0 is t, axis 1 is x
    Space3,    ///< 3 spatial axes
};

/// Uniform-grid sampled complex field (scalar or multi-component per site).
///
/// Sites are ordered row-major with the last axis fastest. Values are stored
/// as a (components x nsites) matrix so a per-site column maps onto a spinor.
class GridField {
  public:
    GridField(GridKind kind, std::vector<Eigen::Index> shape, std::vector<double> spacing,
              std::vector<double> origin, int components = 1);

    GridKind kind() const { return kind_; }
    int axes() const { return static_cast<int>(shape_.size()); }
    const std::vector<Eigen::Index>& shape() const { return shape_; }
    const std::vector<double>& spacing() const { return spacing_; }
    const std::vector<double>& origin() const { return origin_; }
    int components() const { return components_; }
    Eigen::Index size() const { return values_.cols(); }

    Eigen::MatrixXcd& values() { return values_; }
    const Eigen::MatrixXcd& values() const { return values_; }

    double coord(int axis, Eigen::Index i) const { return origin_[axis] + spacing_[axis] * i; }

    Eigen::Index site(Eigen::Index i) const { return i; }
    Eigen::Index site(Eigen::Index i, Eigen::Index j) const { return i * shape_[1] + j; }
    Eigen::Index site(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
        return (i * shape_[1] + j) * shape_[2] + k;
    }

    Complex& at(Eigen::Index s, int comp = 0) { return values_(comp, s); }
    Complex at(Eigen::Index s, int comp = 0) const { return values_(comp, s); }

    /// True when axis 0 samples t in [-T, T] with an odd count so t=0 is a grid point.
    bool time_symmetric() const;

    bool same_layout(const GridField& o) const {
        return kind_ == o.kind_ && shape_ == o.shape_ && components_ == o.components_;
    }

    /// Zero field with the same layout.
    GridField like_zero() const;

  private:
    GridKind kind_;
    std::vector<Eigen::Index> shape_;
    std::vector<double> spacing_;
    std::vector<double> origin_;
    int components_;
    Eigen::MatrixXcd values_;
};

/// Flat binary serialization with a plain-text header (dims, shape, spacing).
void save_field(const GridField& f, const std::string& path);
GridField load_field(const std::string& path);

/// CSV emission for 1D fields / 1D slices: x, Re, Im, |value|^2 per component.
void write_csv_line1d(const GridField& f, const std::string& path, const std::string& header);

} // namespace utdirac
