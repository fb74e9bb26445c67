#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "anisoloc/anisotropy.hpp"

namespace anisoloc {

// Sample (ix, iy) sits at origin + (ix dx, iy dy). Storage is row-major with y outer.
struct GridGeometry {
    std::size_t nx = 0;
    std::size_t ny = 0;
    double dx = 1.0;
    double dy = 1.0;
    Vec2 origin = Vec2::Zero();

    std::size_t size() const { return nx * ny; }
    double x(std::size_t ix) const { return origin.x() + static_cast<double>(ix) * dx; }
    double y(std::size_t iy) const { return origin.y() + static_cast<double>(iy) * dy; }
    Vec2 point(std::size_t ix, std::size_t iy) const { return {x(ix), y(iy)}; }
    bool operator==(const GridGeometry&) const = default;
};

// nx, ny >= 8 and positive finite spacings.
void validate_geometry(const GridGeometry& g);

// Even nx, ny with the origin at (-nx/2 dx, -ny/2 dy).
GridGeometry centered_geometry(std::size_t nx, std::size_t ny, double dx, double dy);

// Frequency lattice dual to a centred space grid: spacing 2 pi/(n d), origin at -n/2 spacing.
GridGeometry frequency_geometry(const GridGeometry& space);

template <class T>
struct Grid {
    GridGeometry geom;
    std::vector<T> values;

    Grid() = default;
    explicit Grid(const GridGeometry& g) : geom(g), values(g.size(), T{}) {}
    Grid(const GridGeometry& g, std::vector<T> v) : geom(g), values(std::move(v)) {}

    T& at(std::size_t ix, std::size_t iy) { return values[iy * geom.nx + ix]; }
    const T& at(std::size_t ix, std::size_t iy) const { return values[iy * geom.nx + ix]; }
};

using RealGrid = Grid<double>;
using ComplexGrid = Grid<std::complex<double>>;

ComplexGrid to_complex(const RealGrid& g);
RealGrid real_part(const ComplexGrid& g);

// Sum |v|^2 dx dy.
double grid_energy(const RealGrid& g);
double grid_energy(const ComplexGrid& g);

// Largest transformed radius R such that every nu with ||nu|| <= R maps (omega = P^T nu)
// inside the Nyquist box of `space`: min_i pi / (d_i ||P e_i||).
double transformed_band_limit(const GridGeometry& space, const AnisotropySpec& spec);

// Largest transformed-frequency step of one cell of the frequency lattice dual to `space`.
double transformed_frequency_step(const GridGeometry& space, const AnisotropySpec& spec);

// ||a - b|| / ||b|| in the discrete L2 norm; geometries must match.
double relative_l2_error(const ComplexGrid& a, const ComplexGrid& b);

}  // namespace anisoloc
