#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "anisoloc/errors.hpp"
#include "anisoloc/fft.hpp"
#include "anisoloc/localisation_operator.hpp"
#include "anisoloc/transform.hpp"

using namespace anisoloc;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
const MorseParams kP(8.0, 3.0);

ComplexGrid smooth_field(const GridGeometry& geom, const MorseParams& p, const AnisotropySpec& spec) {
    ComplexGrid g(geom);
    const std::vector<std::pair<LocalIndex, double>> parts = {{LocalIndex(1.0, 0.0, Vec2(0.0, 0.0)), 1.0},
                                                              {LocalIndex(0.7, 0.0, Vec2(0.5, -0.3)), 0.7}};
    for (const auto& [xi, w] : parts) {
        const ComplexGrid v = coherent_state_grid(p, spec, xi, geom);
        for (std::size_t k = 0; k < g.values.size(); ++k) g.values[k] += w * v.values[k];
    }
    return g;
}

double max_abs(const std::vector<cplx>& v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}
}  // namespace

TEST_CASE("discrete Parseval of the transform convention") {
    const GridGeometry geom = centered_geometry(64, 32, 0.3, 0.5);
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n01;
    ComplexGrid g(geom);
    for (auto& v : g.values) v = cplx(n01(rng), n01(rng));
    const ComplexGrid G = forward_ft(g);
    double fe = 0.0;
    for (const auto& v : G.values) fe += std::norm(v);
    fe *= G.geom.dx * G.geom.dy / (4 * kPi * kPi);
    CHECK(fe == Approx(grid_energy(g)).epsilon(1e-10));
    const ComplexGrid back = inverse_ft(G, geom);
    CHECK(relative_l2_error(back, g) < 1e-13);
}

TEST_CASE("coherent state grid is real and matches its spectrum") {
    const AnisotropySpec spec = AnisotropySpec::from_p_entries(1.0, 0.2, 0.6);
    const GridGeometry geom = centered_geometry(256, 256, 0.25, 0.25);
    const LocalIndex xi(1.2, 0.4, Vec2(0.3, -0.6));
    const ComplexGrid v = coherent_state_grid(kP, spec, xi, geom);
    double im = 0.0;
    for (const auto& x : v.values) im = std::max(im, std::fabs(x.imag()));
    CHECK(im < 1e-12 * max_abs(v.values));
    CHECK(grid_energy(v) == Approx(17.0 / 6.0).epsilon(1e-6));
}

TEST_CASE("self-analysis peaks at the generating index") {
    const AnisotropySpec spec = AnisotropySpec::from_p_entries(1.0, 0.0, 0.5);
    const GridGeometry geom = centered_geometry(256, 256, 0.25, 0.25);
    const LocalIndex xi0(1.0, 0.0, Vec2(0.4, -0.2));
    const ComplexGrid g = coherent_state_grid(kP, spec, xi0, geom);
    std::vector<LocalIndex> xs;
    for (double a : {0.6, 0.8, 1.0, 1.25, 1.6})
        for (double b1 = -0.2; b1 <= 1.01; b1 += 0.2)
            for (double b2 = -0.8; b2 <= 0.41; b2 += 0.2) xs.emplace_back(a, 0.0, Vec2(b1, b2));
    const CoefficientSlice w = analyze(g, kP, spec, xs);
    std::size_t best = 0;
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (std::abs(w.values[i]) > std::abs(w.values[best])) best = i;
    CHECK(xs[best].a == Approx(1.0));
    CHECK((xs[best].b - xi0.b).norm() < 1e-9);
    CHECK(std::abs(analyze(g, kP, spec, {xi0}).values[0]) == Approx(17.0 / 6.0).epsilon(1e-6));
}

TEST_CASE("analysis is linear and matches an isotropic direct evaluation") {
    const AnisotropySpec iso;
    const GridGeometry geom = centered_geometry(64, 64, 0.3, 0.3);
    const ComplexGrid g1 = smooth_field(geom, kP, iso);
    std::mt19937_64 rng(4);
    std::normal_distribution<double> n01;
    ComplexGrid g2(geom);
    for (auto& v : g2.values) v = n01(rng);
    const std::vector<LocalIndex> xs = {LocalIndex(1.0, 0.3, Vec2(0.2, 0.1)), LocalIndex(0.8, 2.0, Vec2(-0.5, 0.4))};
    const cplx alpha(1.5, 0.5);
    ComplexGrid mix(geom);
    for (std::size_t k = 0; k < mix.values.size(); ++k) mix.values[k] = alpha * g1.values[k] + g2.values[k];
    const auto w1 = analyze(g1, kP, iso, xs), w2 = analyze(g2, kP, iso, xs), wm = analyze(mix, kP, iso, xs);
    const ComplexGrid G = forward_ft(g1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK(std::abs(wm.values[i] - (alpha * w1.values[i] + w2.values[i])) < 1e-10 * std::abs(wm.values[i]));
        // Direct sum with V = e^{-j b.omega |omega|^2} a^{1/3} V_r(a^{1/3}|omega|).
        cplx direct = 0.0;
        for (std::size_t iy = 0; iy < G.geom.ny; ++iy)
            for (std::size_t ix = 0; ix < G.geom.nx; ++ix) {
                const Vec2 w = G.geom.point(ix, iy);
                const double s = std::cbrt(xs[i].a);
                const cplx v = std::polar(s * radial_state(kP, s * w.norm()), -xs[i].b.dot(w) * w.squaredNorm());
                direct += std::conj(v) * G.at(ix, iy);
            }
        direct *= G.geom.dx * G.geom.dy / (4 * kPi * kPi);
        CHECK(std::abs(w1.values[i] - direct) < 1e-12 * std::abs(direct));
    }
}

// States are real in space and theta-invariant: real fields give real coefficients and
// w(a, theta + pi, b) = conj(w(a, theta, b)).
TEST_CASE("real fields give conjugate-symmetric coefficients") {
    const GridGeometry geom = centered_geometry(64, 64, 0.3, 0.3);
    std::mt19937_64 rng(9);
    std::normal_distribution<double> n01;
    RealGrid g(geom);
    for (auto& v : g.values) v = n01(rng);
    const std::vector<LocalIndex> xs = {LocalIndex(1.0, 0.3, Vec2(0.6, -0.2)), LocalIndex(1.0, 0.3 + kPi, Vec2(0.6, -0.2))};
    const CoefficientSlice w = analyze(g, kP, AnisotropySpec(), xs);
    CHECK(std::abs(w.values[1] - std::conj(w.values[0])) < 1e-10 * std::abs(w.values[0]));
    CHECK(std::fabs(w.values[0].imag()) < 1e-10 * std::abs(w.values[0]));
}

TEST_CASE("shift covariance at gamma = 1") {
    const MorseParams p(4.0, 1.0);
    const AnisotropySpec spec = AnisotropySpec::from_p_entries(1.0, 0.0, 0.5);
    const GridGeometry geom = centered_geometry(64, 64, 0.25, 0.5);
    const ComplexGrid g = coherent_state_grid(p, spec, LocalIndex(1.0, 0.0, Vec2::Zero()), geom);
    const int sx = 3, sy = -2;
    ComplexGrid t(geom);
    for (std::size_t iy = 0; iy < 64; ++iy)
        for (std::size_t ix = 0; ix < 64; ++ix)
            t.at((ix + 64 + sx) % 64, (iy + 64 + sy) % 64) = g.at(ix, iy);
    const Vec2 b0 = spec.P() * Vec2(sx * geom.dx, sy * geom.dy);
    for (const Vec2 b : {Vec2(0.5, 0.25), Vec2(-0.3, 0.1)}) {
        const cplx shifted = analyze(t, p, spec, {LocalIndex(2.0, 0.0, b)}).values[0];
        const cplx base = analyze(g, p, spec, {LocalIndex(2.0, 0.0, b - b0)}).values[0];
        CHECK(std::abs(shifted - base) < 1e-8 * std::abs(base));
    }
}

TEST_CASE("band precondition") {
    const GridGeometry geom = centered_geometry(16, 16, 2.0, 2.0);
    const ComplexGrid g(geom);
    CHECK_THROWS_AS(analyze(g, kP, AnisotropySpec(), {LocalIndex(0.01, 0.0, Vec2::Zero())}), PreconditionError);
    CHECK_THROWS_AS(analyze(g, kP, AnisotropySpec(), {LocalIndex(1000.0, 0.0, Vec2::Zero())}), PreconditionError);
}

TEST_CASE("synthesis edge cases") {
    const AnisotropySpec spec;
    const GridGeometry geom = centered_geometry(32, 32, 0.5, 0.5);
    LatticeCoefficients empty{geom, {}, {}};
    CHECK_THROWS_AS(synthesize(empty, kP, spec, geom), DomainError);
    IndexLattice lat;
    lat.a_lo = 0.5;
    lat.a_hi = 2.0;
    const ComplexGrid g = smooth_field(geom, kP, spec);
    LatticeCoefficients w = analyze_lattice(g, kP, spec, lattice_index_quadrature(kP, lat));
    for (auto& s : w.slices)
        for (auto& v : s.values) v = 0.0;
    const Reconstruction r = synthesize(w, kP, spec, geom);
    CHECK(max_abs(r.field.values) == 0.0);
    CHECK_FALSE(r.relative_error.has_value());
}

TEST_CASE("lattice analysis matches pointwise analysis") {
    const AnisotropySpec spec = AnisotropySpec::from_p_entries(1.0, 0.1, 0.5);
    const GridGeometry geom = centered_geometry(64, 64, 0.5, 0.5);
    const ComplexGrid g = smooth_field(geom, kP, spec);
    IndexLattice lat;
    lat.a_lo = 0.5;
    lat.a_hi = 2.0;
    const IndexQuadrature q = lattice_index_quadrature(kP, lat);
    const LatticeCoefficients w = analyze_lattice(g, kP, spec, q);
    for (std::size_t n = 0; n < q.size(); ++n) {
        const auto& node = q[n];
        std::vector<LocalIndex> xs;
        std::vector<cplx> want;
        for (std::size_t iy = 0; iy < node.bgrid.ny; iy += 3)
            for (std::size_t ix = 0; ix < node.bgrid.nx; ix += 3) {
                xs.emplace_back(node.a, node.theta, node.bgrid.point(ix, iy));
                want.push_back(w.slices[n].at(ix, iy));
            }
        const CoefficientSlice ref = analyze(g, kP, spec, xs);
        const double scale = max_abs(ref.values);
        for (std::size_t i = 0; i < xs.size(); ++i) CHECK(std::abs(ref.values[i] - want[i]) <= 1e-10 * scale);
    }
}

TEST_CASE("scalogram") {
    const AnisotropySpec spec;
    const GridGeometry geom = centered_geometry(64, 64, 0.3, 0.3);
    const ComplexGrid zero(geom);
    for (const auto& s : scalogram(zero, kP, spec, {1.0}, {0.0}))
        for (double v : s.values) CHECK(v == 0.0);
    // Pointwise agreement with analyze, gamma = 1 and gamma = 3.
    for (const MorseParams p : {MorseParams(4.0, 1.0), kP}) {
        const ComplexGrid g = coherent_state_grid(p, spec, LocalIndex(p.gamma() == 1.0 ? 2.0 : 1.0, 0.0, Vec2(0.3, 0.0)), geom);
        const double a = p.gamma() == 1.0 ? 2.0 : 0.9;
        const auto sc = scalogram(g, p, spec, {a}, {0.0});
        REQUIRE(sc.size() == 1);
        double peak = 0.0;
        for (double v : sc[0].values) peak = std::max(peak, v);
        for (std::size_t iy = 0; iy < 64; iy += 7)
            for (std::size_t ix = 0; ix < 64; ix += 5) {
                const cplx w = analyze(g, p, spec, {LocalIndex(a, 0.0, geom.point(ix, iy))}).values[0];
                CHECK(std::fabs(sc[0].at(ix, iy) - std::norm(w)) <= 1e-10 * peak);
            }
    }
}

TEST_CASE("scalogram energy approximates the field energy") {
    const AnisotropySpec spec;
    const GridGeometry geom = centered_geometry(256, 256, 0.2, 0.2);
    const ComplexGrid g = coherent_state_grid(kP, spec, LocalIndex(1.0, 0.0, Vec2::Zero()), geom);
    const double h = 0.25;
    std::vector<double> as;
    for (double la = std::log(0.05); la <= std::log(12.0); la += h) as.push_back(std::exp(la));
    const auto sc = scalogram(g, kP, spec, as, {0.0});
    double e = 0.0;
    // Beyond |b| ~ 4 a^{1 - 1/gamma} the dispersed state wraps around the periodic domain.
    for (std::size_t k = 0; k < as.size(); ++k) {
        const double box = 4.0 * std::pow(as[k], 2.0 / 3.0);
        double s = 0.0;
        for (std::size_t iy = 0; iy < geom.ny; ++iy)
            for (std::size_t ix = 0; ix < geom.nx; ++ix)
                if (std::fabs(geom.x(ix)) <= box && std::fabs(geom.y(iy)) <= box) s += sc[k].at(ix, iy);
        e += h * as[k] / std::pow(as[k], 3) * s * geom.dx * geom.dy;
    }
    e *= admissibility_constant(kP);  // theta integrates to 2 pi against C_H / (2 pi)
    CHECK(e == Approx(grid_energy(g)).epsilon(0.10));
}

TEST_CASE("scalogram energy peaks at the scale matching the dominant wavenumber") {
    const AnisotropySpec spec;
    const GridGeometry geom = centered_geometry(128, 128, 0.25, 0.25);
    const GridGeometry fg = frequency_geometry(geom);
    const double k0 = 2.0;
    std::mt19937_64 rng(21);
    std::normal_distribution<double> n01;
    ComplexGrid G(fg);
    for (std::size_t iy = 0; iy < fg.ny; ++iy)
        for (std::size_t ix = 0; ix < fg.nx; ++ix)
            if (std::fabs(fg.point(ix, iy).norm() - k0) < 0.1) G.at(ix, iy) = cplx(n01(rng), n01(rng));
    const ComplexGrid g = to_complex(real_part(inverse_ft(G, geom)));
    std::vector<double> as;
    for (double a = 0.1; a < 2.5; a *= 1.05) as.push_back(a);
    const auto sc = scalogram(g, kP, spec, as, {0.0});
    std::size_t best = 0;
    double best_e = -1.0;
    for (std::size_t k = 0; k < as.size(); ++k) {
        double s = 0.0;
        for (double v : sc[k].values) s += v;
        if (s > best_e) {
            best_e = s;
            best = k;
        }
    }
    const double a_star = std::pow(constants(kP).C3 / k0, 3.0);
    CHECK(as[best] / a_star > 0.8);
    CHECK(as[best] / a_star < 1.25);
}
