#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "anisoloc/checks/oracles.hpp"
#include "anisoloc/errors.hpp"
#include "anisoloc/region.hpp"

using namespace anisoloc;
using doctest::Approx;

namespace {
const MorseParams kP(8.0, 3.0);
}

TEST_CASE("concentration level") {
    CHECK_THROWS_AS(ConcentrationLevel(0.99), DomainError);
    const ConcentrationLevel C(2.0);
    CHECK(C.a_lo() == Approx(2.0 - std::sqrt(3.0)).epsilon(1e-14));
    CHECK(C.a_hi() == Approx(2.0 + std::sqrt(3.0)).epsilon(1e-14));
    CHECK(C.b_max(2.0) == Approx(std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("index region membership") {
    CHECK(index_region_contains(ConcentrationLevel(1.0), 1.0, 0.0));
    CHECK(index_region_contains(ConcentrationLevel(2.0), 2.0, std::sqrt(3.0) * (1 - 1e-15)));
    CHECK_FALSE(index_region_contains(ConcentrationLevel(2.0), 4.0, 0.0));
}

TEST_CASE("frequency bounds") {
    const double C3 = constants(kP).C3;
    const NuBounds b1 = nu_bounds(kP, ConcentrationLevel(1.0));
    CHECK(b1.nu_min == Approx(C3).epsilon(1e-15));
    CHECK(b1.nu_max == Approx(C3).epsilon(1e-15));
    const NuBounds b2 = nu_bounds(kP, ConcentrationLevel(2.0));
    CHECK(b2.nu_max == Approx(2.279).epsilon(1e-3));
    CHECK(b2.nu_min == Approx(0.947).epsilon(1e-3));
    CHECK(std::pow(C3 / b2.nu_max, 3) * std::pow(C3 / b2.nu_min, 3) == Approx(1.0).epsilon(1e-13));
    // Attained mean frequencies over A(C) span exactly [nu_min, nu_max].
    const ConcentrationLevel C(2.0);
    double lo = 1e9, hi = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        const double a = C.a_lo() + (C.a_hi() - C.a_lo()) * i / 2000.0;
        const double nu = C3 / std::cbrt(a);
        lo = std::min(lo, nu);
        hi = std::max(hi, nu);
    }
    CHECK(lo == Approx(b2.nu_min).epsilon(1e-12));
    CHECK(hi == Approx(b2.nu_max).epsilon(1e-12));
    double prev_lo = C3, prev_hi = C3;
    for (double c : {1.1, 1.5, 3.0, 10.0}) {
        const NuBounds b = nu_bounds(kP, ConcentrationLevel(c));
        CHECK(b.nu_min < prev_lo);
        CHECK(b.nu_max > prev_hi);
        prev_lo = b.nu_min;
        prev_hi = b.nu_max;
    }
}

TEST_CASE("area and hypervolume") {
    CHECK(area_C(ConcentrationLevel(1.0)) == 0.0);
    const double want = 4 * std::sqrt(3.0) + std::log((2 - std::sqrt(3.0)) / (2 + std::sqrt(3.0)));
    CHECK(area_C(ConcentrationLevel(2.0)) == Approx(want).epsilon(1e-14));
    CHECK(area_C(ConcentrationLevel(2.0)) == Approx(4.2943).epsilon(1e-4));
    // Integral of (2aC - 1 - a^2)/a^3 da over the a-range, doubled for b of both signs.
    const ConcentrationLevel C(2.0);
    const double q = checks::integrate([](double a) { return 2 * std::sqrt(4 * a - 1 - a * a) * 0.5 * std::sqrt(4 * a - 1 - a * a) / (a * a * a); }, C.a_lo(), C.a_hi(), 1e-13);
    CHECK(q == Approx(area_C(C)).epsilon(1e-9));
    double prev = 0.0;
    for (double c = 1.01; c < 6.0; c += 0.25) {
        CHECK(area_C(ConcentrationLevel(c)) > prev);
        prev = area_C(ConcentrationLevel(c));
    }
    CHECK(hypervolume(kP, ConcentrationLevel(1.0)) == 0.0);
    CHECK(hypervolume(kP, C) == Approx(checks::hypervolume_by_quadrature(kP, C)).epsilon(1e-6));
    const double A = constants(kP).A;
    for (double c : {1.5, 2.0, 4.0})
        CHECK(hypervolume(kP, ConcentrationLevel(c)) / area_C(ConcentrationLevel(c)) == Approx(A).epsilon(1e-10));
    CHECK(phase_space_volume(kP, C) == Approx(4 * M_PI * M_PI * hypervolume(kP, C)).epsilon(1e-15));
}

TEST_CASE("hypervolume invariant under spec (Monte Carlo)") {
    const ConcentrationLevel C(2.0);
    const double v_iso = checks::phase_volume_monte_carlo(kP, C, AnisotropySpec(), 400000, 5);
    const double v_ani = checks::phase_volume_monte_carlo(kP, C, AnisotropySpec::from_entries(1.0, 0.0, 0.09), 400000, 6);
    CHECK(v_ani == Approx(v_iso).epsilon(0.02));
    CHECK(v_iso == Approx(phase_space_volume(kP, C)).epsilon(0.02));
}

TEST_CASE("phase region membership") {
    const double C3 = constants(kP).C3;
    for (double c : {1.0, 1.5, 4.0}) CHECK(phase_region_contains(kP, ConcentrationLevel(c), 0.0, C3));
    const ConcentrationLevel C(2.0);
    const NuBounds b = nu_bounds(kP, C);
    CHECK(phase_region_contains(kP, C, 0.0, b.nu_max * (1 - 1e-12)));
    for (double y : {0.0, 0.1, 1.0}) {
        CHECK_FALSE(phase_region_contains(kP, C, y, b.nu_max * 1.01));
        CHECK_FALSE(phase_region_contains(kP, C, y, b.nu_min * 0.99));
    }
    CHECK_THROWS_AS(phase_region_contains(kP, C, 0.0, 0.0), DomainError);
}

TEST_CASE("pullback equivalence on random index points") {
    const ConcentrationLevel C(2.0);
    const MorseConstants k = constants(kP);
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> ua(C.a_lo(), C.a_hi()), u01(0.0, 1.0);
    int accepted = 0;
    while (accepted < 10000) {
        const double a = ua(rng);
        const double b = C.b_max(a) * u01(rng);
        if (!index_region_contains(C, a, b)) continue;
        ++accepted;
        const double nu = k.C3 / std::cbrt(a);
        const double y = b * k.C4 * std::pow(nu, 2.0) / std::pow(k.C3, 2.0);
        const RegionPullback pb = pullback(kP, y, nu);
        CHECK(pb.a == Approx(a).epsilon(1e-12));
        CHECK(pb.b == Approx(b).epsilon(1e-12).scale(1.0));
        REQUIRE(phase_region_contains(kP, C, y, nu));
    }
}

TEST_CASE("printed inequality diagnostic") {
    const ConcentrationLevel C(2.0);
    const double C3 = constants(kP).C3;
    const RegionDiagnostic d = phase_region_diagnostic(kP, C, 0.0, C3);
    CHECK(d.pullback_inside);
    // Expanding the pullback condition by nu^{2 gamma} gives the printed form exactly.
    int inside = 0;
    for (double nu = 0.8; nu < 2.4; nu += 0.01)
        for (double y = 0.0; y < 2.0; y += 0.01) {
            const RegionDiagnostic e = phase_region_diagnostic(kP, C, y, nu);
            if (std::fabs(e.pullback_margin) < 1e-9) continue;
            CHECK(e.agree());
            inside += e.pullback_inside ? 1 : 0;
        }
    CHECK(inside > 100);
}

TEST_CASE("boundary samples") {
    const ConcentrationLevel C(2.0);
    CHECK(region_boundary_samples(kP, C, 8).size() == 8);
    CHECK_THROWS_AS(region_boundary_samples(kP, C, 7), DomainError);
    const auto pts = region_boundary_samples(kP, C, 64);
    const NuBounds nb = nu_bounds(kP, C);
    CHECK(pts.front().nu == Approx(nb.nu_min).epsilon(1e-12));
    CHECK(pts.back().nu == Approx(nb.nu_max).epsilon(1e-12));
    CHECK(std::fabs(pts.front().y) < 1e-7);
    CHECK(std::fabs(pts.back().y) < 1e-7);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) CHECK(pts[i].nu >= pts[i - 1].nu);
        const RegionPullback pb = pullback(kP, pts[i].y, pts[i].nu);
        CHECK(std::fabs(pb.a * pb.a + pb.b * pb.b + 1 - 4 * pb.a) <= 1e-10);
    }
}
