#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "anisoloc/checks/oracles.hpp"
#include "anisoloc/errors.hpp"
#include "anisoloc/fields.hpp"
#include "anisoloc/rng.hpp"

using namespace anisoloc;
using doctest::Approx;

TEST_CASE("family names") {
    CHECK(parse_family("gaussian-decay") == CovarianceFamily::GaussianDecay);
    CHECK(parse_family("exponential-decay") == CovarianceFamily::ExponentialDecay);
    CHECK(family_name(CovarianceFamily::ExponentialDecay) == "exponential-decay");
    CHECK_THROWS_AS(parse_family("matern"), DomainError);
    CHECK_THROWS_AS(CovarianceSpec(CovarianceFamily::GaussianDecay, 0.0, AnisotropySpec()), DomainError);
}

TEST_CASE("covariance values") {
    const CovarianceSpec iso(CovarianceFamily::GaussianDecay, 2.0, AnisotropySpec());
    CHECK(covariance(iso, Vec2::Zero()) == 1.0);
    CHECK(covariance(iso, Vec2(1.0, 0.0)) == Approx(std::exp(-0.25)).epsilon(1e-15));
    CHECK(covariance(iso, Vec2(0.6, 0.8)) == Approx(covariance(iso, Vec2(1.0, 0.0))).epsilon(1e-15));
    const double eps = 0.3;
    const CovarianceSpec ex(CovarianceFamily::ExponentialDecay, 1.5, AnisotropySpec::from_entries(1.0, 0.0, eps * eps));
    CHECK(covariance(ex, Vec2(0.0, 2.0)) == Approx(covariance(ex, Vec2(eps * 2.0, 0.0))).epsilon(1e-15));
    CHECK(covariance(ex, Vec2(1.5, 0.0)) == Approx(std::exp(-1.0)).epsilon(1e-15));
    double prev = 2.0;
    for (double d = 0.0; d < 5.0; d += 0.1) {
        const double c = covariance(ex, Vec2(d, 0.0));
        CHECK(c <= prev);
        prev = c;
    }
}

TEST_CASE("counter RNG") {
    const CounterRng a(42), b(42), c(43);
    CHECK(a.bits(7) == b.bits(7));
    CHECK(a.bits(7) != c.bits(7));
    double s = 0.0, s2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n / 2; ++i)
        for (int w = 0; w < 2; ++w) {
            const double z = a.normal(static_cast<std::uint64_t>(i), w);
            s += z;
            s2 += z * z;
        }
    CHECK(std::fabs(s / n) < 4.0 / std::sqrt(n));
    CHECK(s2 / n == Approx(1.0).epsilon(0.02));
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const double u = a.uniform(i);
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("spectral density properties and preconditions") {
    const CovarianceSpec c(CovarianceFamily::GaussianDecay, 1.0, AnisotropySpec::from_entries(1.0, 0.3, 0.5));
    const GridGeometry geom{64, 64, 0.25, 0.25, Vec2::Zero()};
    const auto lam = spectral_density(c, geom);
    double mx = 0.0;
    for (double v : lam) mx = std::max(mx, v);
    for (std::size_t iy = 0; iy < 64; ++iy)
        for (std::size_t ix = 0; ix < 64; ++ix) {
            const double v = lam[iy * 64 + ix];
            CHECK(v >= -1e-10 * mx);
            CHECK(std::isfinite(v));
            const double m = lam[((64 - iy) % 64) * 64 + (64 - ix) % 64];
            CHECK(std::fabs(v - m) <= 1e-12 * mx);
        }
    const GridGeometry small{16, 16, 0.1, 0.1, Vec2::Zero()};
    CHECK_THROWS_AS(spectral_density(c, small), PreconditionError);
}

TEST_CASE("generation is reproducible and unit-variance") {
    const CovarianceSpec c(CovarianceFamily::GaussianDecay, 1.0, AnisotropySpec());
    const GridGeometry geom{128, 128, 0.5, 0.5, Vec2::Zero()};
    const RealGrid a = generate(c, geom, 17), b = generate(c, geom, 17), d = generate(c, geom, 18);
    CHECK(std::memcmp(a.values.data(), b.values.data(), a.values.size() * sizeof(double)) == 0);
    CHECK(a.values != d.values);
    // Pooled variance over realizations; standard error ~ sqrt(2/N_eff).
    double s = 0.0, s2 = 0.0;
    std::size_t n = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        for (double v : generate(c, geom, seed).values) {
            s += v;
            s2 += v * v;
            ++n;
        }
    const double mean = s / static_cast<double>(n);
    const double var = s2 / static_cast<double>(n) - mean * mean;
    // Correlation area pi scale^2 = pi; 64 x 64 cells of that area per realization.
    const double n_eff = 20.0 * (64.0 * 64.0) / 3.141592653589793;
    CHECK(std::fabs(var - 1.0) < 3.0 * std::sqrt(2.0 / n_eff));
    CHECK(std::fabs(mean) < 3.0 / std::sqrt(n_eff));
}

TEST_CASE("empirical isotropy for H = I") {
    const double scale = 2.0;
    const CovarianceSpec c(CovarianceFamily::GaussianDecay, scale, AnisotropySpec());
    const GridGeometry geom{64, 64, 0.5, 0.5, Vec2::Zero()};
    std::vector<RealGrid> fs;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) fs.push_back(generate(c, geom, seed));
    // Empirical covariance at integer lags along the axes and the diagonal, per realization.
    for (auto [lx, ly] : {std::pair{1, 0}, {0, 1}, {2, 0}, {0, 3}, {2, 2}, {3, 1}}) {
        std::vector<double> per;
        for (const auto& f : fs) {
            double acc = 0.0;
            for (std::size_t iy = 0; iy < 64; ++iy)
                for (std::size_t ix = 0; ix < 64; ++ix)
                    acc += f.at(ix, iy) * f.at((ix + static_cast<std::size_t>(lx)) % 64, (iy + static_cast<std::size_t>(ly)) % 64);
            per.push_back(acc / (64.0 * 64.0));
        }
        double m = 0.0, v = 0.0;
        for (double x : per) m += x;
        m /= static_cast<double>(per.size());
        for (double x : per) v += (x - m) * (x - m);
        const double se = std::sqrt(v / static_cast<double>(per.size() - 1) / static_cast<double>(per.size()));
        const double want = covariance(c, Vec2(lx * geom.dx, ly * geom.dy));
        CHECK(std::fabs(m - want) <= 3.0 * se);
    }
}

TEST_CASE("correlation length ratio follows 1/eps") {
    const double eps = 0.1;
    const CovarianceSpec c(CovarianceFamily::GaussianDecay, 1.0, AnisotropySpec::from_entries(1.0, 0.0, eps * eps));
    const GridGeometry geom{128, 128, 0.1, 1.0, Vec2::Zero()};
    std::vector<RealGrid> fs;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) fs.push_back(generate(c, geom, seed));
    const double ratio = checks::correlation_length(fs, false) / checks::correlation_length(fs, true);
    CHECK(ratio == Approx(1.0 / eps).epsilon(0.2));
}
