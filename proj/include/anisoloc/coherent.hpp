#pragma once

#include <complex>
#include <functional>

#include "anisoloc/anisotropy.hpp"
#include "anisoloc/morse.hpp"

namespace anisoloc {

using cplx = std::complex<double>;

// xi = (a, theta, b). theta is normalised into [0, 2 pi).
struct LocalIndex {
    double a;
    double theta;
    Vec2 b;

    LocalIndex(double a, double theta, const Vec2& b);
};

// xi_I = (a, b) with b >= 0.
struct RadialIndex {
    double a;
    double b;

    RadialIndex(double a, double b);
};

// e^{-j b^T nu ||nu||^{gamma-1}}
cplx generalized_shift_phase(const MorseParams& p, const Vec2& nu, const Vec2& b);

// Frequency-domain operators acting on functions of omega.
using FreqFunction = std::function<cplx(const Vec2&)>;

FreqFunction fiducial_function(const MorseParams& p, const AnisotropySpec& spec);
// G(omega) -> s G(s omega), s = a^{1/gamma}
FreqFunction apply_dilation(FreqFunction g, const MorseParams& p, double a);
// Frequency image of g(x) -> g(r~_{-theta,H} x)
FreqFunction apply_transformed_rotation(FreqFunction g, const AnisotropySpec& spec, double theta);
// G(omega) -> G(omega) e^{-j b^T nu ||nu||^{gamma-1}}, nu = Q^T omega
FreqFunction apply_generalized_shift(FreqFunction g, const MorseParams& p, const AnisotropySpec& spec,
                                     const Vec2& b);

// Coherent state V_{H;xi}(omega), built as shift(dilate(rotate(V_H))).
cplx coherent_state_freq(const MorseParams& p, const AnisotropySpec& spec, const LocalIndex& xi,
                         const Vec2& omega);

// Same state from the closed form e^{-j nu^T b nu^{gamma-1}} a^{1/gamma} |P|^{-1/2} V_r(a^{1/gamma} ||r_{-theta} nu||).
cplx coherent_state_closed_form(const MorseParams& p, const AnisotropySpec& spec, const LocalIndex& xi,
                                const Vec2& omega);

// Angle-averaged state of the radial index: asymptotic J0 envelope
// cos(nu^gamma b - pi/4) / sqrt(pi nu^gamma b |P| / 2). Requires b > 0.
double radial_coherent_state_freq(const MorseParams& p, const AnisotropySpec& spec, const RadialIndex& xi,
                                  const Vec2& omega);

// <1> = r/2 for every xi and spec.
double energy(const MorseParams& p, const AnisotropySpec& spec, const LocalIndex& xi);

// <nu> = C3 a^{-1/gamma}
double mean_frequency(const MorseParams& p, const LocalIndex& xi);

struct MeanPosition {
    Vec2 y;  // C4 a^{1/gamma - 1} b
    Vec2 x;  // Q y
};

MeanPosition mean_position(const MorseParams& p, const AnisotropySpec& spec, const LocalIndex& xi);

}  // namespace anisoloc
