#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anisoloc/anisotropy.hpp"
#include "anisoloc/grid.hpp"

namespace anisoloc {

enum class CovarianceFamily { GaussianDecay, ExponentialDecay };

CovarianceFamily parse_family(const std::string& name);  // "gaussian-decay" | "exponential-decay"
std::string family_name(CovarianceFamily f);

struct CovarianceSpec {
    CovarianceFamily family;
    double scale;
    AnisotropySpec H;

    CovarianceSpec(CovarianceFamily family, double scale, const AnisotropySpec& H);
};

// b_r(lag^T H lag / scale^2): e^{-s} or e^{-sqrt(s)}.
double covariance(const CovarianceSpec& c, const Vec2& lag);

// Discrete spectral density of the wrapped covariance on `geom` (FFT of the sampled,
// periodically wrapped covariance), row-major in DFT index order.
std::vector<double> spectral_density(const CovarianceSpec& c, const GridGeometry& geom);

// Unit-variance stationary Gaussian field by circulant spectral synthesis.
RealGrid generate(const CovarianceSpec& c, const GridGeometry& geom, std::uint64_t seed);

}  // namespace anisoloc
