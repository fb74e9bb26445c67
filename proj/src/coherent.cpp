#include "anisoloc/coherent.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "anisoloc/errors.hpp"

namespace anisoloc {

LocalIndex::LocalIndex(double a_, double theta_, const Vec2& b_) : a(a_), theta(theta_), b(b_) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("LocalIndex: scale a must be positive");
    if (!std::isfinite(theta) || !b.allFinite()) throw DomainError("LocalIndex: non-finite component");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) theta += two_pi;
    if (theta >= two_pi) theta = 0.0;
}

RadialIndex::RadialIndex(double a_, double b_) : a(a_), b(b_) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("RadialIndex: scale a must be positive");
    if (!(b >= 0.0) || !std::isfinite(b)) throw DomainError("RadialIndex: b must be nonnegative");
}

cplx generalized_shift_phase(const MorseParams& p, const Vec2& nu, const Vec2& b) {
    const double n = nu.norm();
    if (n == 0.0) return {1.0, 0.0};
    const double phase = b.dot(nu) * std::pow(n, p.gamma() - 1.0);
    return {std::cos(phase), -std::sin(phase)};
}

FreqFunction fiducial_function(const MorseParams& p, const AnisotropySpec& spec) {
    return [p, spec](const Vec2& w) { return cplx(fiducial_freq(p, spec, w), 0.0); };
}

FreqFunction apply_dilation(FreqFunction g, const MorseParams& p, double a) {
    const double s = std::pow(a, 1.0 / p.gamma());
    return [g = std::move(g), s](const Vec2& w) { return s * g(s * w); };
}

FreqFunction apply_transformed_rotation(FreqFunction g, const AnisotropySpec& spec, double theta) {
    // g(M x) has spectrum |M|^{-1} G(M^{-T} omega); |M| = 1 here.
    const Mat2 m_inv_t = transformed_rotation(spec, theta).inverse().transpose();
    return [g = std::move(g), m_inv_t](const Vec2& w) { return g(m_inv_t * w); };
}

FreqFunction apply_generalized_shift(FreqFunction g, const MorseParams& p, const AnisotropySpec& spec,
                                     const Vec2& b) {
    const Mat2 qt = spec.Q().transpose();
    return [g = std::move(g), p, qt, b](const Vec2& w) {
        return g(w) * generalized_shift_phase(p, qt * w, b);
    };
}

cplx coherent_state_freq(const MorseParams& p, const AnisotropySpec& spec, const LocalIndex& xi,
                         const Vec2& omega) {
    FreqFunction v = fiducial_function(p, spec);
    v = apply_transformed_rotation(std::move(v), spec, xi.theta);
    v = apply_dilation(std::move(v), p, xi.a);
    v = apply_generalized_shift(std::move(v), p, spec, xi.b);
    return v(omega);
}

cplx coherent_state_closed_form(const MorseParams& p, const AnisotropySpec& spec, const LocalIndex& xi,
                                const Vec2& omega) {
    const Vec2 nu = spec.Q().transpose() * omega;
    const double n = nu.norm();
    const double s = std::pow(xi.a, 1.0 / p.gamma());
    const Vec2 rotated = rotation(-xi.theta) * nu;
    const double mod = s * radial_state(p, s * rotated.norm()) / std::sqrt(spec.detP());
    const double phase = n > 0.0 ? nu.dot(xi.b) * std::pow(n, p.gamma() - 1.0) : 0.0;
    return mod * cplx(std::cos(phase), -std::sin(phase));
}

double radial_coherent_state_freq(const MorseParams& p, const AnisotropySpec& spec, const RadialIndex& xi,
                                  const Vec2& omega) {
    if (!(xi.b > 0.0)) throw DomainError("radial_coherent_state_freq: requires b > 0");
    const double nu = (spec.Q().transpose() * omega).norm();
    if (nu == 0.0) return 0.0;
    const double g = p.gamma();
    const double s = std::pow(xi.a, 1.0 / g);
    const double u = std::pow(nu, g);
    const double envelope = s * std::pow(s * nu, 0.5 * (g - 1.0)) * window_1d(p, s * nu);
    return envelope * std::cos(u * xi.b - 0.25 * std::numbers::pi) /
           std::sqrt(0.5 * std::numbers::pi * u * xi.b * spec.detP());
}

double energy(const MorseParams& p, const AnisotropySpec&, const LocalIndex&) { return 0.5 * p.r(); }

double mean_frequency(const MorseParams& p, const LocalIndex& xi) {
    return constants(p).C3 * std::pow(xi.a, -1.0 / p.gamma());
}

MeanPosition mean_position(const MorseParams& p, const AnisotropySpec& spec, const LocalIndex& xi) {
    MeanPosition m;
    m.y = constants(p).C4 * std::pow(xi.a, 1.0 / p.gamma() - 1.0) * xi.b;
    m.x = spec.Q() * m.y;
    return m;
}

}  // namespace anisoloc
