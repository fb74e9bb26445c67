#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "anisoloc/anisotropy.hpp"
#include "anisoloc/execution.hpp"
#include "anisoloc/grid.hpp"
#include "anisoloc/morse.hpp"
#include "anisoloc/region.hpp"

namespace anisoloc {

// Transformed coordinates of every sample of a frequency lattice.
struct SpectralPlane {
    GridGeometry freq;
    std::vector<double> nu;      // ||Q^T omega_k||
    std::vector<double> kappa1;  // components of nu_vec ||nu||^{gamma-1}
    std::vector<double> kappa2;
    double cell;                 // domega_1 domega_2

    SpectralPlane(const GridGeometry& freq, const MorseParams& p, const AnisotropySpec& spec);
};

// One (a, theta) node of an index quadrature with its b-sampling.
struct ScaleNode {
    double a;
    double theta;
    double weight;                 // C_H/(2 pi) * theta measure * a-weight * a^{-3}
    GridGeometry bgrid;            // b_1 along x, b_2 along y
    std::vector<double> bweights;  // area weight per b sample, row-major like bgrid
};

using IndexQuadrature = std::vector<ScaleNode>;

// Uniformly log-spaced scales a_k = a_lo e^{k h}, with per-scale b boxes.
struct IndexLattice {
    double a_lo = 0.01;
    double a_hi = 100.0;
    double log_step = 1.0;       // h
    std::size_t n_theta = 1;     // states are theta-invariant; each angle receives 2 pi / n_theta
    double b_step_factor = 0.2;  // b spacing = factor * a
    double b_extent = 4.0;       // half-width = b_extent * a^{1 - 1/gamma}

    std::vector<double> scales() const;
};

IndexQuadrature lattice_index_quadrature(const MorseParams& p, const IndexLattice& lattice);

// Sampling of the 4-D region A(C): Gauss-Legendre in a, Cartesian b-grid of spacing
// b_step_factor * a clipped to the disk |b| <= b_max(a) with sub-cell coverage weights.
struct DiskSampling {
    std::size_t n_a = 32;
    double b_step_factor = 0.2;
    std::size_t subcells = 4;
};

IndexQuadrature disk_index_quadrature(const MorseParams& p, const ConcentrationLevel& C,
                                      const DiskSampling& s);

// Radial modulus of the state at scale a on each sample: a^{1/gamma} |P|^{-1/2} V_r(a^{1/gamma} nu).
std::vector<double> state_modulus(const SpectralPlane& plane, const MorseParams& p, const AnisotropySpec& spec,
                                  double a);

// w(b) = (2 pi)^{-2} Sum_k conj(V_xi(omega_k)) G_k domega on node.bgrid.
ComplexGrid analyze_node(const SpectralPlane& plane, const std::vector<std::complex<double>>& G,
                         const MorseParams& p, const AnisotropySpec& spec, const ScaleNode& node,
                         Execution exec = Execution::Parallel);

// out_k += node.weight * Sum_b bweight(b) w(b) V_xi(omega_k).
void synthesize_node(const SpectralPlane& plane, const ComplexGrid& w, const MorseParams& p,
                     const AnisotropySpec& spec, const ScaleNode& node,
                     std::vector<std::complex<double>>& out, Execution exec = Execution::Parallel);

}  // namespace anisoloc
