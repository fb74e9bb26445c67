#include "anisoloc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "anisoloc/errors.hpp"

namespace anisoloc {

void validate_geometry(const GridGeometry& g) {
    if (g.nx < 8 || g.ny < 8)
        throw DomainError("grid: need nx, ny >= 8 (got " + std::to_string(g.nx) + "x" + std::to_string(g.ny) + ")");
    if (!(g.dx > 0.0) || !(g.dy > 0.0) || !std::isfinite(g.dx) || !std::isfinite(g.dy))
        throw DomainError("grid: spacings must be positive and finite");
    if (!g.origin.allFinite()) throw DomainError("grid: origin must be finite");
}

GridGeometry centered_geometry(std::size_t nx, std::size_t ny, double dx, double dy) {
    GridGeometry g{nx, ny, dx, dy, Vec2(-0.5 * static_cast<double>(nx) * dx, -0.5 * static_cast<double>(ny) * dy)};
    validate_geometry(g);
    if (nx % 2 != 0 || ny % 2 != 0) throw DomainError("grid: centred grids need even nx, ny");
    return g;
}

GridGeometry frequency_geometry(const GridGeometry& space) {
    validate_geometry(space);
    if (space.nx % 2 != 0 || space.ny % 2 != 0) throw DomainError("grid: FFT grids need even nx, ny");
    const double dwx = 2.0 * std::numbers::pi / (static_cast<double>(space.nx) * space.dx);
    const double dwy = 2.0 * std::numbers::pi / (static_cast<double>(space.ny) * space.dy);
    return {space.nx, space.ny, dwx, dwy,
            Vec2(-0.5 * static_cast<double>(space.nx) * dwx, -0.5 * static_cast<double>(space.ny) * dwy)};
}

ComplexGrid to_complex(const RealGrid& g) {
    ComplexGrid out(g.geom);
    for (std::size_t i = 0; i < g.values.size(); ++i) out.values[i] = g.values[i];
    return out;
}

RealGrid real_part(const ComplexGrid& g) {
    RealGrid out(g.geom);
    for (std::size_t i = 0; i < g.values.size(); ++i) out.values[i] = g.values[i].real();
    return out;
}

double grid_energy(const RealGrid& g) {
    double s = 0.0;
    for (double v : g.values) s += v * v;
    return s * g.geom.dx * g.geom.dy;
}

double grid_energy(const ComplexGrid& g) {
    double s = 0.0;
    for (const auto& v : g.values) s += std::norm(v);
    return s * g.geom.dx * g.geom.dy;
}

double transformed_band_limit(const GridGeometry& space, const AnisotropySpec& spec) {
    const double rx = std::numbers::pi / (space.dx * spec.P().col(0).norm());
    const double ry = std::numbers::pi / (space.dy * spec.P().col(1).norm());
    return std::min(rx, ry);
}

double transformed_frequency_step(const GridGeometry& space, const AnisotropySpec& spec) {
    const GridGeometry fg = frequency_geometry(space);
    return std::max(fg.dx * spec.Q().row(0).norm(), fg.dy * spec.Q().row(1).norm());
}

double relative_l2_error(const ComplexGrid& a, const ComplexGrid& b) {
    if (!(a.geom == b.geom)) throw DomainError("relative_l2_error: geometry mismatch");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        num += std::norm(a.values[i] - b.values[i]);
        den += std::norm(b.values[i]);
    }
    if (den == 0.0) throw DomainError("relative_l2_error: reference is identically zero");
    return std::sqrt(num / den);
}

}  // namespace anisoloc
