#include "anisoloc/fields.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "anisoloc/errors.hpp"
#include "anisoloc/fft.hpp"
#include "anisoloc/rng.hpp"

namespace anisoloc {

namespace {

constexpr double kEmbeddingTail = 1e-6;
constexpr double kNegativeFloor = -1e-10;

double wrapped_lag(std::size_t i, std::size_t n, double d) {
    const auto k = static_cast<double>(i <= n / 2 ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(n));
    return k * d;
}

}  // namespace

CovarianceFamily parse_family(const std::string& name) {
    if (name == "gaussian-decay") return CovarianceFamily::GaussianDecay;
    if (name == "exponential-decay") return CovarianceFamily::ExponentialDecay;
    throw DomainError("unknown covariance family '" + name + "' (expected gaussian-decay or exponential-decay)");
}

std::string family_name(CovarianceFamily f) {
    return f == CovarianceFamily::GaussianDecay ? "gaussian-decay" : "exponential-decay";
}

CovarianceSpec::CovarianceSpec(CovarianceFamily f, double s, const AnisotropySpec& h) : family(f), scale(s), H(h) {
    if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("CovarianceSpec: scale must be positive");
}

double covariance(const CovarianceSpec& c, const Vec2& lag) {
    if (!lag.allFinite()) throw DomainError("covariance: lag must be finite");
    const double s = lag.dot(c.H.H() * lag) / (c.scale * c.scale);
    return c.family == CovarianceFamily::GaussianDecay ? std::exp(-s) : std::exp(-std::sqrt(s));
}

std::vector<double> spectral_density(const CovarianceSpec& c, const GridGeometry& geom) {
    validate_geometry(geom);
    const std::size_t nx = geom.nx, ny = geom.ny;
    const double half_x = 0.5 * static_cast<double>(nx) * geom.dx;
    const double half_y = 0.5 * static_cast<double>(ny) * geom.dy;
    const double tail = std::max({covariance(c, Vec2(half_x, 0.0)), covariance(c, Vec2(0.0, half_y)),
                                  covariance(c, Vec2(half_x, half_y)), covariance(c, Vec2(half_x, -half_y))});
    if (tail >= kEmbeddingTail) {
        std::ostringstream msg;
        msg << "generate: covariance at half-domain lag is " << tail << " (>= " << kEmbeddingTail
            << "); enlarge the grid";
        throw PreconditionError(msg.str());
    }
    std::vector<std::complex<double>> buf(nx * ny);
    for (std::size_t iy = 0; iy < ny; ++iy)
        for (std::size_t ix = 0; ix < nx; ++ix)
            buf[iy * nx + ix] = covariance(c, Vec2(wrapped_lag(ix, nx, geom.dx), wrapped_lag(iy, ny, geom.dy)));
    dft2(buf, nx, ny, -1);
    std::vector<double> lam(nx * ny);
    double lmax = 0.0;
    for (std::size_t k = 0; k < lam.size(); ++k) {
        lam[k] = buf[k].real();
        lmax = std::max(lmax, lam[k]);
    }
    for (std::size_t k = 0; k < lam.size(); ++k) {
        if (lam[k] < kNegativeFloor * lmax) {
            std::ostringstream msg;
            msg << "generate: circulant embedding failed (spectral density " << lam[k] / lmax
                << " of its maximum at index " << k << "); use a larger grid";
            throw NumericalError(msg.str());
        }
        lam[k] = std::max(lam[k], 0.0);
    }
    return lam;
}

RealGrid generate(const CovarianceSpec& c, const GridGeometry& geom, std::uint64_t seed) {
    const std::vector<double> lam = spectral_density(c, geom);
    const std::size_t n = lam.size();
    const CounterRng rng(seed);
    std::vector<std::complex<double>> buf(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double amp = std::sqrt(lam[k] * inv_n);
        buf[k] = amp * std::complex<double>(rng.normal(k, 0), rng.normal(k, 1));
    }
    dft2(buf, geom.nx, geom.ny, -1);
    RealGrid out(geom);
    for (std::size_t k = 0; k < n; ++k) out.values[k] = buf[k].real();
    return out;
}

}  // namespace anisoloc
