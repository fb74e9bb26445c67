#include "anisoloc/eigensystem.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "anisoloc/errors.hpp"
#include "anisoloc/fft.hpp"
#include "anisoloc/specfun.hpp"

namespace anisoloc {

EigenSpec::EigenSpec(int n_, const MorseParams& p_, const AnisotropySpec& spec_, const ConcentrationLevel& C_)
    : n(n_), p(p_), spec(spec_), C(C_) {
    if (n < 0) throw DomainError("EigenSpec: order n must be nonnegative");
}

double eigenvalue(int n, double r, const ConcentrationLevel& C) {
    if (n < 0) throw DomainError("eigenvalue: order n must be nonnegative");
    if (!(r > 1.0)) throw DomainError("eigenvalue: need r > 1");
    const double c = C.value();
    const double x0 = (c - 1.0) / (c + 1.0);
    return specfun::reg_inc_beta(x0, n + 1.0, r - 1.0);
}

double eigenfunction_normalization(int n, const MorseParams& p) {
    if (n < 0) throw DomainError("eigenfunction_normalization: n must be nonnegative");
    const double r = p.r();
    const double log_a2 = std::log(std::numbers::pi * p.gamma()) + r * std::log(2.0) +
                          specfun::log_gamma(n + 1.0) - specfun::log_gamma(n + r);
    return std::exp(0.5 * log_a2);
}

double radial_eigenfunction(int n, const MorseParams& p, double nu) {
    if (!(nu >= 0.0)) throw DomainError("radial_eigenfunction: nu must be nonnegative");
    const double u = std::pow(nu, p.gamma());
    return std::sqrt(2.0) * eigenfunction_normalization(n, p) * std::pow(nu, p.l()) * std::exp(-u) *
           specfun::laguerre(n, p.r() - 1.0, 2.0 * u);
}

double aniso_eigenfunction_freq(const EigenSpec& eig, const Vec2& omega) {
    return radial_eigenfunction(eig.n, eig.p, (eig.spec.Q().transpose() * omega).norm());
}

RealGrid eigenfunction_frequency_grid(const EigenSpec& eig, const GridGeometry& freq, Execution exec) {
    validate_geometry(freq);
    RealGrid out(freq);
    const double amp = std::sqrt(2.0) * eigenfunction_normalization(eig.n, eig.p);
    const Mat2 qt = eig.spec.Q().transpose();
    const double g = eig.p.gamma(), l = eig.p.l(), c = eig.p.r() - 1.0;
    const auto ny = static_cast<long>(freq.ny);
#pragma omp parallel for schedule(static) if (exec == Execution::Parallel)
    for (long iy = 0; iy < ny; ++iy) {
        for (std::size_t ix = 0; ix < freq.nx; ++ix) {
            const double nu = (qt * freq.point(ix, static_cast<std::size_t>(iy))).norm();
            const double u = std::pow(nu, g);
            out.at(ix, static_cast<std::size_t>(iy)) =
                amp * std::pow(nu, l) * std::exp(-u) * specfun::laguerre(eig.n, c, 2.0 * u);
        }
    }
    return out;
}

ComplexGrid eigenfunction_space_grid(const EigenSpec& eig, const GridGeometry& space, Execution exec) {
    const GridGeometry fg = frequency_geometry(space);
    const double nu_max = nu_bounds(eig.p, eig.C).nu_max;
    const double need = 3.0 * nu_max;
    const double cx = eig.spec.P().col(0).norm(), cy = eig.spec.P().col(1).norm();
    if (std::numbers::pi / space.dx < need * cx || std::numbers::pi / space.dy < need * cy) {
        std::ostringstream msg;
        msg.precision(6);
        msg << "eigenfunction_space_grid: grid undersamples the transformed band 3*nu_max = " << need
            << "; need dx <= " << std::numbers::pi / (need * cx) << " and dy <= "
            << std::numbers::pi / (need * cy) << " (got dx = " << space.dx << ", dy = " << space.dy << ")";
        throw PreconditionError(msg.str());
    }
    return inverse_ft(to_complex(eigenfunction_frequency_grid(eig, fg, exec)), space);
}

GridGeometry default_space_grid(const EigenSpec& eig) {
    const NuBounds nb = nu_bounds(eig.p, eig.C);
    const double span_y = 32.0 / nb.nu_min;
    auto axis = [&](double p_col, double q_row) {
        const double d = std::numbers::pi / (4.0 * nb.nu_max * p_col);
        std::size_t n = 16;
        while (static_cast<double>(n) * d < span_y * q_row) n *= 2;
        return std::pair{n, d};
    };
    const auto [nx, dx] = axis(eig.spec.P().col(0).norm(), eig.spec.Q().row(0).norm());
    const auto [ny, dy] = axis(eig.spec.P().col(1).norm(), eig.spec.Q().row(1).norm());
    return centered_geometry(nx, ny, dx, dy);
}

}  // namespace anisoloc
