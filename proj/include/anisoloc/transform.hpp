#pragma once

#include <optional>
#include <vector>

#include "anisoloc/coherent.hpp"
#include "anisoloc/execution.hpp"
#include "anisoloc/grid.hpp"
#include "anisoloc/index_quadrature.hpp"

namespace anisoloc {

struct CoefficientSlice {
    std::vector<LocalIndex> xi;
    std::vector<cplx> values;
};

// Each state's transformed band [<nu>/3, 3 <nu>] must be representable on the frequency
// lattice dual to `space`; throws PreconditionError otherwise.
void check_state_band(const GridGeometry& space, const MorseParams& p, const AnisotropySpec& spec, double a);

// w(xi) = (2 pi)^{-2} Sum_k conj(V_xi(omega_k)) G(omega_k) domega, one state at a time
// through coherent_state_freq. Serial reference path.
CoefficientSlice analyze(const ComplexGrid& g, const MorseParams& p, const AnisotropySpec& spec,
                         const std::vector<LocalIndex>& xi);
CoefficientSlice analyze(const RealGrid& g, const MorseParams& p, const AnisotropySpec& spec,
                         const std::vector<LocalIndex>& xi);

// Coefficients on every node of an index quadrature; slices[i] lives on nodes[i].bgrid.
struct LatticeCoefficients {
    GridGeometry space;
    IndexQuadrature nodes;
    std::vector<ComplexGrid> slices;
};

LatticeCoefficients analyze_lattice(const ComplexGrid& g, const MorseParams& p, const AnisotropySpec& spec,
                                    const IndexQuadrature& nodes, Execution exec = Execution::Parallel);

struct Reconstruction {
    ComplexGrid field;
    std::optional<double> relative_error;  // L2, against the reference when supplied
};

// Riemann-sum inversion g = C_H/(2 pi) Sum w(xi) v_xi a^{-3} da d^2b dtheta on `space`.
Reconstruction synthesize(const LatticeCoefficients& coeffs, const MorseParams& p, const AnisotropySpec& spec,
                          const GridGeometry& space, const ComplexGrid* reference = nullptr,
                          Execution exec = Execution::Parallel);

// |w(a, theta, b)|^2 with b on g's own sample grid, one slice per (a, theta), a-major.
std::vector<RealGrid> scalogram(const ComplexGrid& g, const MorseParams& p, const AnisotropySpec& spec,
                                const std::vector<double>& a_list, const std::vector<double>& theta_list,
                                Execution exec = Execution::Parallel);

// Coherent state on a space grid (inverse FT of the closed form on the dual lattice).
ComplexGrid coherent_state_grid(const MorseParams& p, const AnisotropySpec& spec, const LocalIndex& xi,
                                const GridGeometry& space);

// Closed-form spectrum on a frequency lattice.
ComplexGrid coherent_state_freq_grid(const MorseParams& p, const AnisotropySpec& spec, const LocalIndex& xi,
                                     const GridGeometry& freq);

}  // namespace anisoloc
