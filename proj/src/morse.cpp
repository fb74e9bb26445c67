#include "anisoloc/morse.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "anisoloc/errors.hpp"
#include "anisoloc/specfun.hpp"

namespace anisoloc {

using specfun::log_gamma;

MorseParams::MorseParams(double beta, double gamma) : beta_(beta), gamma_(gamma) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw DomainError("MorseParams: beta must be positive, got " + std::to_string(beta));
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw DomainError("MorseParams: gamma must be positive, got " + std::to_string(gamma));
    if (!(r() > 1.0))
        throw DomainError("MorseParams: need r = (2 beta + 1)/gamma > 1, i.e. beta > (gamma - 1)/2");
}

MorseConstants constants(const MorseParams& p) {
    const double g = p.gamma();
    const double r = p.r();
    if (!(r - 1.0 / g + 2.0 > 0.0)) throw DomainError("constants: r - 1/gamma + 2 must be positive");
    MorseConstants k{};
    k.r = r;
    k.l = p.l();
    k.m = g;
    k.c = (2.0 * k.l + 2.0) / k.m - 1.0;
    const double lg_r1 = log_gamma(r + 1.0);
    const double log_c3 = log_gamma(r + 1.0 / g + 1.0) - std::log(2.0) / g - lg_r1;
    const double log_c4 =
        (1.0 / g - 2.0) * std::log(2.0) + std::log(g + 1.0) + log_gamma(r - 1.0 / g + 2.0) - lg_r1;
    k.C3 = std::exp(log_c3);
    k.C4 = std::exp(log_c4);
    k.E3 = std::exp((g - 1.0) * log_c3 - log_c4);
    k.E4 = std::exp(g * log_c3);
    k.A = std::exp(2.0 * std::log(g + 1.0) + 2.0 * log_gamma(r - 1.0 / g + 2.0) +
                   2.0 * log_gamma(r + 1.0 / g + 1.0) - 5.0 * std::log(2.0) - 4.0 * lg_r1 - std::log(g));
    return k;
}

double window_normalization(const MorseParams& p) {
    const double r = p.r();
    return std::exp(0.5 * ((r + 1.0) * std::log(2.0) + std::log(std::numbers::pi * p.gamma()) -
                           log_gamma(r)));
}

double window_1d(const MorseParams& p, double omega) {
    if (!(omega > 0.0)) return 0.0;
    return window_normalization(p) * std::exp(p.beta() * std::log(omega) - std::pow(omega, p.gamma()));
}

double radial_state(const MorseParams& p, double nu) {
    if (!(nu > 0.0)) return 0.0;
    const double e = p.beta() + 0.5 * (p.gamma() - 1.0);
    return window_normalization(p) * std::exp(e * std::log(nu) - std::pow(nu, p.gamma()));
}

double fiducial_freq(const MorseParams& p, const AnisotropySpec& spec, const Vec2& omega) {
    const double nu = (spec.Q().transpose() * omega).norm();
    return radial_state(p, nu) / std::sqrt(spec.detP());
}

double peak_frequency(const MorseParams& p) {
    const double num = 2.0 * p.beta() + p.gamma() - 1.0;
    if (!(num > 0.0)) throw DomainError("peak_frequency: 2 beta + gamma - 1 must be positive");
    return std::pow(num / (2.0 * p.gamma()), 1.0 / p.gamma());
}

}  // namespace anisoloc
