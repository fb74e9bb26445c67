#pragma once

#include "anisoloc/anisotropy.hpp"
#include "anisoloc/execution.hpp"
#include "anisoloc/grid.hpp"
#include "anisoloc/morse.hpp"
#include "anisoloc/region.hpp"

namespace anisoloc {

struct EigenSpec {
    int n;
    MorseParams p;
    AnisotropySpec spec;
    ConcentrationLevel C;

    EigenSpec(int n, const MorseParams& p, const AnisotropySpec& spec, const ConcentrationLevel& C);
};

// lambda_{n,r}(C) = I_{x0}(n+1, r-1), x0 = (C-1)/(C+1).
double eigenvalue(int n, double r, const ConcentrationLevel& C);

// A_n with A_n^2 = pi gamma 2^r n! / Gamma(n + r): unit norm under (2 pi)^{-1} Int |Psi|^2 nu dnu.
double eigenfunction_normalization(int n, const MorseParams& p);

// Psi_n(nu) = sqrt(2) A_n nu^l e^{-nu^gamma} L_n^{r-1}(2 nu^gamma); positive near nu = 0.
double radial_eigenfunction(int n, const MorseParams& p, double nu);

// Psi^(A)(omega) = Psi_n(||Q^T omega||)
double aniso_eigenfunction_freq(const EigenSpec& eig, const Vec2& omega);

// Samples of Psi^(A) on a frequency lattice.
RealGrid eigenfunction_frequency_grid(const EigenSpec& eig, const GridGeometry& freq,
                                      Execution exec = Execution::Parallel);

// Space-domain eigenfunction on `space` (even nx, ny) by inverse FT of the sampled spectrum.
// Requires pi/d_i >= 3 nu_max(C) ||P e_i|| on both axes.
ComplexGrid eigenfunction_space_grid(const EigenSpec& eig, const GridGeometry& space,
                                     Execution exec = Execution::Parallel);

// Centred grid that satisfies the sampling precondition with a 4/3 margin and spans
// 32/nu_min transformed length units on each axis.
GridGeometry default_space_grid(const EigenSpec& eig);

}  // namespace anisoloc
