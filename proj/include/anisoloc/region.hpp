#pragma once

#include <cstddef>
#include <vector>

#include "anisoloc/morse.hpp"

namespace anisoloc {

// C >= 1; C = 1 is the single-point region.
class ConcentrationLevel {
public:
    explicit ConcentrationLevel(double C);
    double value() const { return C_; }
    // Endpoints of the admissible a-interval, C -/+ sqrt(C^2 - 1).
    double a_lo() const;
    double a_hi() const;
    // sqrt(2 a C - 1 - a^2), or 0 outside [a_lo, a_hi].
    double b_max(double a) const;

private:
    double C_;
};

// a^2 + b^2 + 1 <= 2 a C
bool index_region_contains(const ConcentrationLevel& C, double a, double b);

struct NuBounds {
    double nu_min;
    double nu_max;
};

NuBounds nu_bounds(const MorseParams& p, const ConcentrationLevel& C);

double area_C(const ConcentrationLevel& C);

// A(beta, gamma) Area(C): volume in the measure d^2x d^2omega / (2 pi)^2.
double hypervolume(const MorseParams& p, const ConcentrationLevel& C);

// Same region measured in d^2x d^2omega.
double phase_space_volume(const MorseParams& p, const ConcentrationLevel& C);

struct RegionPullback {
    double a;
    double b;
};

// (y, nu) -> (a, b) with a = (C3/nu)^gamma, b = E3 y / nu^{gamma-1}.
RegionPullback pullback(const MorseParams& p, double y, double nu);

bool phase_region_contains(const MorseParams& p, const ConcentrationLevel& C, double y, double nu);

struct RegionDiagnostic {
    bool pullback_inside;
    bool printed_inside;  // (y nu E3)^2 + (nu^gamma - C E4)^2 <= E4^2 (C^2 - 1)
    double pullback_margin;  // 2aC - a^2 - b^2 - 1
    double printed_margin;   // normalised by nu^{2 gamma}
    bool agree() const { return pullback_inside == printed_inside; }
};

RegionDiagnostic phase_region_diagnostic(const MorseParams& p, const ConcentrationLevel& C, double y,
                                         double nu);

struct BoundaryPoint {
    double y;
    double nu;
};

// n points on the upper boundary (b >= 0) ordered by increasing nu.
std::vector<BoundaryPoint> region_boundary_samples(const MorseParams& p, const ConcentrationLevel& C,
                                                   std::size_t n);

}  // namespace anisoloc
