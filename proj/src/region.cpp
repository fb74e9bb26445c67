#include "anisoloc/region.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "anisoloc/errors.hpp"

namespace anisoloc {

ConcentrationLevel::ConcentrationLevel(double C) : C_(C) {
    if (!(C >= 1.0) || !std::isfinite(C))
        throw DomainError("ConcentrationLevel: C must be finite and >= 1, got " + std::to_string(C));
}

double ConcentrationLevel::a_lo() const {
    // 1 / (C + sqrt(C^2 - 1)) avoids cancellation for large C.
    return 1.0 / (C_ + std::sqrt(C_ * C_ - 1.0));
}

double ConcentrationLevel::a_hi() const { return C_ + std::sqrt(C_ * C_ - 1.0); }

double ConcentrationLevel::b_max(double a) const {
    const double v = 2.0 * a * C_ - 1.0 - a * a;
    return v > 0.0 ? std::sqrt(v) : 0.0;
}

bool index_region_contains(const ConcentrationLevel& C, double a, double b) {
    if (!(a > 0.0)) throw DomainError("index_region_contains: a must be positive");
    if (!(b >= 0.0)) throw DomainError("index_region_contains: b must be nonnegative");
    return a * a + b * b + 1.0 <= 2.0 * a * C.value();
}

NuBounds nu_bounds(const MorseParams& p, const ConcentrationLevel& C) {
    const double c3 = constants(p).C3;
    const double ig = 1.0 / p.gamma();
    return {c3 / std::pow(C.a_hi(), ig), c3 / std::pow(C.a_lo(), ig)};
}

double area_C(const ConcentrationLevel& C) {
    const double c = C.value();
    const double s = std::sqrt(c * c - 1.0);
    // log((C - s)/(C + s)) = -2 acosh(C)
    return 2.0 * c * s - 2.0 * std::acosh(c);
}

double hypervolume(const MorseParams& p, const ConcentrationLevel& C) { return constants(p).A * area_C(C); }

double phase_space_volume(const MorseParams& p, const ConcentrationLevel& C) {
    return 4.0 * std::numbers::pi * std::numbers::pi * hypervolume(p, C);
}

RegionPullback pullback(const MorseParams& p, double y, double nu) {
    if (!(nu > 0.0)) throw DomainError("phase region: nu must be positive");
    if (!(y >= 0.0)) throw DomainError("phase region: y must be nonnegative");
    const MorseConstants k = constants(p);
    const double g = p.gamma();
    return {std::pow(k.C3 / nu, g), k.E3 * y / std::pow(nu, g - 1.0)};
}

bool phase_region_contains(const MorseParams& p, const ConcentrationLevel& C, double y, double nu) {
    const RegionPullback ab = pullback(p, y, nu);
    return index_region_contains(C, ab.a, ab.b);
}

RegionDiagnostic phase_region_diagnostic(const MorseParams& p, const ConcentrationLevel& C, double y,
                                         double nu) {
    const RegionPullback ab = pullback(p, y, nu);
    const MorseConstants k = constants(p);
    const double c = C.value();
    RegionDiagnostic d{};
    d.pullback_margin = 2.0 * ab.a * c - ab.a * ab.a - ab.b * ab.b - 1.0;
    d.pullback_inside = index_region_contains(C, ab.a, ab.b);
    const double ug = std::pow(nu, p.gamma());
    const double t1 = y * nu * k.E3;
    const double t2 = ug - c * k.E4;
    d.printed_margin = (k.E4 * k.E4 * (c * c - 1.0) - t1 * t1 - t2 * t2) / (ug * ug);
    d.printed_inside = t1 * t1 + t2 * t2 <= k.E4 * k.E4 * (c * c - 1.0);
    return d;
}

std::vector<BoundaryPoint> region_boundary_samples(const MorseParams& p, const ConcentrationLevel& C,
                                                   std::size_t n) {
    if (n < 8) throw DomainError("region_boundary_samples: need n >= 8");
    const MorseConstants k = constants(p);
    const double g = p.gamma();
    const double c = C.value();
    const double s = std::sqrt(c * c - 1.0);
    std::vector<BoundaryPoint> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        // a runs from a_hi (nu_min) down to a_lo (nu_max); cosine spacing clusters at the tips.
        double a = c + s * std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1));
        if (i == 0) a = C.a_hi();
        if (i == n - 1) a = C.a_lo();
        const double b = (i == 0 || i == n - 1) ? 0.0 : C.b_max(a);
        const double nu = k.C3 * std::pow(a, -1.0 / g);
        pts[i] = {b * std::pow(nu, g - 1.0) / k.E3, nu};
    }
    return pts;
}

}  // namespace anisoloc
