#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "anisoloc/execution.hpp"
#include "anisoloc/grid.hpp"
#include "anisoloc/index_quadrature.hpp"
#include "anisoloc/morse.hpp"
#include "anisoloc/region.hpp"

namespace anisoloc {

// C_H = (r - 1)/(4 pi). Throws DivergenceError when beta <= (gamma - 1)/2.
double admissibility_constant(double beta, double gamma);
double admissibility_constant(const MorseParams& p);

// C_{H,A} = (r - 1)/2 for the radial operator.
double radial_normalization(double r);

// Angular dependence of the b-integrand of the radial kernel.
//   DifferenceFrequency: (1/2) cos((u1 - u2) b), the non-oscillating part of the
//                        product of the two J0 envelopes (default).
//   AsPrinted:           cos(u1 b - pi/4) cos(u2 b - pi/4), the literal product.
enum class KernelForm { DifferenceFrequency, AsPrinted };

struct QuadratureSpec {
    std::size_t n_a = 64;
    std::size_t n_b = 64;
    std::size_t n_nu = 256;
    double nu_lo = 0.0;
    double nu_hi = 0.0;
};

// n_nu = 256 on [nu_min/4, 2.5 nu_max], n_a = n_b = 64.
QuadratureSpec default_quadrature(const MorseParams& p, const ConcentrationLevel& C);
void validate_quadrature(const QuadratureSpec& q, const MorseParams& p, const ConcentrationLevel& C);

// K(nu1, nu2): the (a, b) integral over A_r(C) with a-weight a^{r-2} da and
// (a, b) Gauss-Legendre orders from q.
double radial_kernel(const MorseParams& p, const ConcentrationLevel& C, double nu1, double nu2,
                     const QuadratureSpec& q, KernelForm form = KernelForm::DifferenceFrequency);

struct KernelMatrix {
    std::vector<double> nodes;
    std::vector<double> weights;
    Eigen::MatrixXd M;  // sqrt(w_i nu_i / 2pi) K_ij sqrt(w_j nu_j / 2pi)
    double beta;
    double gamma;
    double C;
    QuadratureSpec q;
    KernelForm form;

    // sqrt(w_i nu_i / 2pi)
    Eigen::VectorXd sqrt_measure() const;
};

KernelMatrix build_kernel_matrix(const MorseParams& p, const ConcentrationLevel& C, const QuadratureSpec& q,
                                 KernelForm form = KernelForm::DifferenceFrequency,
                                 Execution exec = Execution::Parallel);

struct SpectralPair {
    double lambda;
    Eigen::VectorXd vector;   // unit eigenvector of M
    Eigen::VectorXd samples;  // function samples at the nodes; positive near nu = 0
};

// Top-N eigenpairs of M in descending order.
std::vector<SpectralPair> kernel_spectrum(const KernelMatrix& K, std::size_t N);

// Cosine between a Nystrom eigenvector and sqrt(w nu / 2pi) Psi_n sampled at the nodes.
double eigenvector_alignment(const KernelMatrix& K, const SpectralPair& pair, int n);

// Full four-dimensional localisation operator applied to spectrum samples G on a frequency lattice:
// C_H / (2 pi) Int_A <V_xi, G> V_xi(omega) a^{-3} da d^2b dtheta.
ComplexGrid apply_full_operator(const ComplexGrid& G, const MorseParams& p, const AnisotropySpec& spec,
                                const IndexQuadrature& region, Execution exec = Execution::Parallel);

ComplexGrid apply_full_operator(const ComplexGrid& G, const MorseParams& p, const AnisotropySpec& spec,
                                const ConcentrationLevel& C, const DiskSampling& sampling = {},
                                Execution exec = Execution::Parallel);

}  // namespace anisoloc
