// SPDX-License-Identifier: Apache-2.0
#include "utdirac/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace utdirac {

namespace {

int expected_axes(GridKind kind) {
    switch (kind) {
        case GridKind::Line: return 1;
        case GridKind::SpaceTime: return 2;
        case GridKind::Space3: return 3;
    }
    return 0;
}

std::string kind_name(GridKind kind) {
    switch (kind) {
        case GridKind::Line: return "line";
        case GridKind::SpaceTime: return "spacetime";
        case GridKind::Space3: return "space3";
    }
    return "?";
}

GridKind kind_from_name(const std::string& s) {
    if (s == "line") return GridKind::Line;
    if (s == "spacetime") return GridKind::SpaceTime;
    if (s == "space3") return GridKind::Space3;
    throw DomainError("unknown grid kind: " + s);
}

} // namespace

GridField::GridField(GridKind kind, std::vector<Eigen::Index> shape, std::vector<double> spacing,
                     std::vector<double> origin, int components)
    : kind_(kind),
      shape_(std::move(shape)),
      spacing_(std::move(spacing)),
      origin_(std::move(origin)),
      components_(components) {
    const int na = expected_axes(kind_);
    if (static_cast<int>(shape_.size()) != na || static_cast<int>(spacing_.size()) != na ||
        static_cast<int>(origin_.size()) != na) {
        throw DomainError("grid: shape/spacing/origin rank mismatch");
    }
    Eigen::Index n = 1;
    for (int a = 0; a < na; ++a) {
        if (shape_[a] < 8) throw DomainError("grid: need at least 8 samples per axis");
        if (!(spacing_[a] > 0)) throw DomainError("grid: spacing must be positive");
        n *= shape_[a];
    }
    if (components_ < 1 || components_ > 4) {
        throw DomainError("grid: components must be 1..4");
    }
    values_ = Eigen::MatrixXcd::Zero(components_, n);
}

bool GridField::time_symmetric() const {
    if (kind_ != GridKind::SpaceTime) return false;
    if (shape_[0] % 2 == 0) return false;
    const double T = spacing_[0] * static_cast<double>((shape_[0] - 1) / 2);
    return std::abs(origin_[0] + T) <= 1e-12 * (1.0 + T);
}

GridField GridField::like_zero() const {
    return GridField(kind_, shape_, spacing_, origin_, components_);
}

void save_field(const GridField& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open " + path);
    out << "utdirac-field 1\n";
    out << "kind " << kind_name(f.kind()) << "\n";
    out << "components " << f.components() << "\n";
    out << "shape";
    for (auto n : f.shape()) out << " " << n;
    out << "\nspacing";
    char buf[64];
    for (auto h : f.spacing()) {
        std::snprintf(buf, sizeof buf, " %.17g", h);
        out << buf;
    }
    out << "\norigin";
    for (auto o : f.origin()) {
        std::snprintf(buf, sizeof buf, " %.17g", o);
        out << buf;
    }
    // data layout: complex128, components fastest, then sites row-major (last axis fastest)
    out << "\ndata complex128\n";
    out.write(reinterpret_cast<const char*>(f.values().data()),
              static_cast<std::streamsize>(sizeof(Complex) * f.values().size()));
}

GridField load_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open " + path);
    std::string magic;
    int version = 0;
    in >> magic >> version;
    if (magic != "utdirac-field" || version != 1) throw DomainError("bad field file header");
    std::string key, kname;
    in >> key >> kname;
    GridKind kind = kind_from_name(kname);
    int components = 0;
    in >> key >> components;
    in >> key;
    const int na = expected_axes(kind);
    std::vector<Eigen::Index> shape(na);
    for (auto& n : shape) in >> n;
    in >> key;
    std::vector<double> spacing(na);
    for (auto& h : spacing) in >> h;
    in >> key;
    std::vector<double> origin(na);
    for (auto& o : origin) in >> o;
    std::string dtype;
    in >> key >> dtype;
    if (dtype != "complex128") throw DomainError("bad field dtype");
    in.ignore(1); // newline before binary payload
    GridField f(kind, shape, spacing, origin, components);
    in.read(reinterpret_cast<char*>(f.values().data()),
            static_cast<std::streamsize>(sizeof(Complex) * f.values().size()));
    if (!in) throw DomainError("truncated field file");
    return f;
}

void write_csv_line1d(const GridField& f, const std::string& path, const std::string& header) {
    if (f.axes() != 1) throw DomainError("csv slice writer expects a 1D field");
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open " + path);
    out << header << "\n";
    out << "x";
    for (int c = 0; c < f.components(); ++c) out << ",re" << c << ",im" << c << ",abs2_" << c;
    out << "\n";
    char buf[256];
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.9g", f.coord(0, i));
        out << buf;
        for (int c = 0; c < f.components(); ++c) {
            const Complex v = f.at(i, c);
            std::snprintf(buf, sizeof buf, ",%.9g,%.9g,%.9g", v.real(), v.imag(), std::norm(v));
            out << buf;
        }
        out << "\n";
    }
}

} // namespace utdirac
