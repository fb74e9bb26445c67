#pragma once

#include "anisoloc/anisotropy.hpp"

namespace anisoloc {

// Generalized Morse shape parameters. Enforces beta > 0, gamma > 0 and
// r = (2 beta + 1)/gamma > 1.
class MorseParams {
public:
    MorseParams(double beta, double gamma);

    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    double r() const { return (2.0 * beta_ + 1.0) / gamma_; }
    double l() const { return beta_ - 0.5; }

private:
    double beta_;
    double gamma_;
};

struct MorseConstants {
    double r;
    double l;
    double m;   // gamma
    double c;   // r - 1
    double C3;  // <nu> at a = 1
    double C4;
    double E3;  // C3^{gamma-1} / C4
    double E4;  // C3^gamma
    double A;   // hypervolume density per unit Area(C)
};

MorseConstants constants(const MorseParams& p);

double window_normalization(const MorseParams& p);  // N_{beta,gamma}

// W(omega) = N omega^beta exp(-omega^gamma) for omega > 0, zero otherwise.
double window_1d(const MorseParams& p, double omega);

// V_r(nu) = nu^{(gamma-1)/2} W(nu), the radial profile of the fiducial 2-D state.
double radial_state(const MorseParams& p, double nu);

// Anisotropic fiducial vector V_H(omega) = |P|^{-1/2} V_r(||Q^T omega||).
double fiducial_freq(const MorseParams& p, const AnisotropySpec& spec, const Vec2& omega);

// argmax of radial_state; equals ((2 beta + gamma - 1)/(2 gamma))^{1/gamma}.
double peak_frequency(const MorseParams& p);

}  // namespace anisoloc
