#pragma once

// Independent reference computations used by tests and the acceptance suite.
// They share no numerical code with the library beyond the function under test.

#include <cstdint>
#include <functional>
#include <vector>

#include "anisoloc/anisotropy.hpp"
#include "anisoloc/coherent.hpp"
#include "anisoloc/grid.hpp"
#include "anisoloc/morse.hpp"
#include "anisoloc/region.hpp"

namespace anisoloc::checks {

// Adaptive Gauss-Kronrod (61-point) on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-13);

// Upper radius beyond which nu^{2 beta + gamma} e^{-2 a nu^gamma} is below 1e-16 of its peak.
double radial_cutoff(const MorseParams& p, double a);

// Golden-section maximiser on [lo, hi].
double golden_argmax(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-12);

// Moments by 2-D quadrature over the transformed frequency plane (GK in nu, trapezoid in angle).
struct MomentOracle {
    double energy;          // (2 pi)^{-2} Int |V|^2 d^2 omega
    double mean_frequency;  // Int nu |V|^2 / Int |V|^2
    Vec2 mean_y;            // Re{ j Int V* dV/dnu } / Int |V|^2
};

MomentOracle moments_by_quadrature(const MorseParams& p, const AnisotropySpec& spec, const LocalIndex& xi);

// Int_0^inf nu^{1 - 2 gamma} V_r(nu)^2 dnu (= 1/C_H).
double inverse_admissibility_by_quadrature(const MorseParams& p);

// Region volume in d^2x d^2omega / (2 pi)^2, integrating y_max(nu)^2/2 over nu.
double hypervolume_by_quadrature(const MorseParams& p, const ConcentrationLevel& C);

// Monte Carlo estimate of the raw d^2x d^2omega volume of D_H(C).
double phase_volume_monte_carlo(const MorseParams& p, const ConcentrationLevel& C, const AnisotropySpec& spec,
                                std::size_t samples, std::uint64_t seed);

// Gamma(r+n)/(Gamma(n+1) Gamma(r-1)) Int_0^{(C-1)/(C+1)} x^n (1-x)^{r-2} dx.
double eigenvalue_by_quadrature(int n, double r, double C);

// (2 pi)^{-1} Int Psi_n Psi_k nu dnu.
double eigen_inner_product(const MorseParams& p, int n, int k);

// Isotropic space-domain profile (2 pi)^{-1} Int Psi_n(nu) J0(nu y) nu dnu.
double hankel_eigenfunction(const MorseParams& p, int n, double y);

// e^{-1} crossing of the mean circular autocorrelation along one axis (lag units of the grid).
double correlation_length(const std::vector<RealGrid>& fields, bool along_x);

// Six-point Lagrange interpolation of a uniformly sampled sequence.
double lagrange6(const std::vector<double>& samples, double x0, double h, double x);

}  // namespace anisoloc::checks
