#include "anisoloc/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "anisoloc/errors.hpp"

namespace anisoloc {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// Phase e^{s j omega_k o} along one axis times (-1)^m shift factor is applied separately.
std::vector<std::complex<double>> axis_phase(std::size_t n, double dw, double w0, double o, double sign) {
    std::vector<std::complex<double>> ph(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double w = w0 + static_cast<double>(k) * dw;
        ph[k] = std::polar(1.0, sign * w * o);
    }
    return ph;
}

}  // namespace

void dft2(std::vector<std::complex<double>>& data, std::size_t nx, std::size_t ny, int sign) {
    if (data.size() != nx * ny) throw DomainError("dft2: size mismatch");
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_2d(static_cast<int>(ny), static_cast<int>(nx), ptr, ptr,
                                sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    if (plan == nullptr) throw NumericalError("dft2: FFTW planning failed");
    fftw_execute(plan);
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
}

ComplexGrid forward_ft(const ComplexGrid& g) {
    const GridGeometry fg = frequency_geometry(g.geom);
    const std::size_t nx = g.geom.nx, ny = g.geom.ny;
    std::vector<std::complex<double>> buf(g.values);
    for (std::size_t iy = 0; iy < ny; ++iy)
        for (std::size_t ix = 0; ix < nx; ++ix)
            if ((ix + iy) % 2 == 1) buf[iy * nx + ix] = -buf[iy * nx + ix];
    dft2(buf, nx, ny, -1);
    const auto phx = axis_phase(nx, fg.dx, fg.origin.x(), g.geom.origin.x(), -1.0);
    const auto phy = axis_phase(ny, fg.dy, fg.origin.y(), g.geom.origin.y(), -1.0);
    const double cell = g.geom.dx * g.geom.dy;
    ComplexGrid out(fg);
    for (std::size_t iy = 0; iy < ny; ++iy)
        for (std::size_t ix = 0; ix < nx; ++ix)
            out.values[iy * nx + ix] = cell * phx[ix] * phy[iy] * buf[iy * nx + ix];
    return out;
}

ComplexGrid forward_ft(const RealGrid& g) { return forward_ft(to_complex(g)); }

ComplexGrid inverse_ft(const ComplexGrid& G, const GridGeometry& space) {
    const GridGeometry fg = frequency_geometry(space);
    if (G.geom.nx != fg.nx || G.geom.ny != fg.ny || std::fabs(G.geom.dx - fg.dx) > 1e-12 * fg.dx ||
        std::fabs(G.geom.dy - fg.dy) > 1e-12 * fg.dy)
        throw DomainError("inverse_ft: spectrum does not sit on the frequency lattice of the target grid");
    const std::size_t nx = space.nx, ny = space.ny;
    const auto phx = axis_phase(nx, fg.dx, fg.origin.x(), space.origin.x(), 1.0);
    const auto phy = axis_phase(ny, fg.dy, fg.origin.y(), space.origin.y(), 1.0);
    std::vector<std::complex<double>> buf(nx * ny);
    for (std::size_t iy = 0; iy < ny; ++iy)
        for (std::size_t ix = 0; ix < nx; ++ix)
            buf[iy * nx + ix] = G.values[iy * nx + ix] * phx[ix] * phy[iy];
    dft2(buf, nx, ny, +1);
    const double scale = fg.dx * fg.dy / (4.0 * std::numbers::pi * std::numbers::pi);
    ComplexGrid out(space);
    for (std::size_t iy = 0; iy < ny; ++iy)
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double sgn = ((ix + iy) % 2 == 1) ? -scale : scale;
            out.values[iy * nx + ix] = sgn * buf[iy * nx + ix];
        }
    return out;
}

}  // namespace anisoloc
