#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "anisoloc/checks/oracles.hpp"
#include "anisoloc/eigensystem.hpp"
#include "anisoloc/errors.hpp"
#include "anisoloc/localisation_operator.hpp"
#include "anisoloc/transform.hpp"

using namespace anisoloc;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
const MorseParams kP(8.0, 3.0);
}  // namespace

TEST_CASE("admissibility constant") {
    CHECK(1.0 / admissibility_constant(kP) ==
          Approx(checks::inverse_admissibility_by_quadrature(kP)).epsilon(1e-8));
    CHECK(admissibility_constant(kP) == Approx((17.0 / 3.0 - 1.0) / (4 * kPi)).epsilon(1e-15));
    for (double beta : {0.5, 3.0}) CHECK(admissibility_constant(beta, 1.0) == Approx(beta / (2 * kPi)).epsilon(1e-14));
    CHECK_THROWS_AS(admissibility_constant(1.0, 3.0), DivergenceError);
    CHECK_THROWS_AS(admissibility_constant(0.5, 2.0), DivergenceError);
    CHECK_THROWS_AS(admissibility_constant(0.2, 2.0), DivergenceError);
}

TEST_CASE("radial normalization") {
    CHECK(radial_normalization(17.0 / 3.0) == Approx(7.0 / 3.0).epsilon(1e-15));
    CHECK(radial_normalization(2.0) == 0.5);
    CHECK_THROWS_AS(radial_normalization(1.0), DomainError);
    CHECK_THROWS_AS(radial_normalization(0.5), DomainError);
}

TEST_CASE("quadrature spec validation") {
    const ConcentrationLevel C(2.0);
    QuadratureSpec q = default_quadrature(kP, C);
    CHECK(q.n_nu == 256);
    CHECK_NOTHROW(validate_quadrature(q, kP, C));
    q.n_a = 16;
    CHECK_THROWS_AS(validate_quadrature(q, kP, C), DomainError);
    q = default_quadrature(kP, C);
    q.nu_hi = nu_bounds(kP, C).nu_max;
    CHECK_THROWS_AS(validate_quadrature(q, kP, C), DomainError);
}

TEST_CASE("radial kernel symmetry and degenerate region") {
    const ConcentrationLevel C(2.0);
    const QuadratureSpec q = default_quadrature(kP, C);
    for (auto form : {KernelForm::DifferenceFrequency, KernelForm::AsPrinted})
        for (auto [a, b] : {std::pair{0.9, 1.7}, {1.2, 2.2}, {0.5, 1.0}})
            CHECK(std::fabs(radial_kernel(kP, C, a, b, q, form) - radial_kernel(kP, C, b, a, q, form)) <=
                  1e-12 * std::fabs(radial_kernel(kP, C, a, a, q, form)));
    CHECK(radial_kernel(kP, ConcentrationLevel(1.0), 1.3, 1.5, q) == 0.0);
}

TEST_CASE("kernel matrix structure and spectrum") {
    const ConcentrationLevel C(2.0);
    const KernelMatrix K = build_kernel_matrix(kP, C, default_quadrature(kP, C));
    CHECK((K.M - K.M.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * K.M.cwiseAbs().maxCoeff());
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(K.M, Eigen::EigenvaluesOnly).eigenvalues();
    CHECK(ev.minCoeff() >= -1e-8 * ev.maxCoeff());
    CHECK(ev.maxCoeff() < 1.0 + 1e-6);
    double analytic = 0.0;
    for (int n = 0; n < 200; ++n) analytic += eigenvalue(n, kP.r(), C);
    CHECK(K.M.trace() == Approx(analytic).epsilon(0.01));
    const auto pairs = kernel_spectrum(K, 4);
    for (int n = 0; n < 4; ++n) {
        const auto& pr = pairs[static_cast<std::size_t>(n)];
        CHECK(pr.lambda == Approx(eigenvalue(n, kP.r(), C)).epsilon(0.01));
        CHECK(pr.lambda > -1e-6);
        CHECK(eigenvector_alignment(K, pr, n) >= 0.999);
        if (n > 0) CHECK(pr.lambda < pairs[static_cast<std::size_t>(n - 1)].lambda);
    }
    CHECK_THROWS_AS(kernel_spectrum(K, 1000), DomainError);
}

TEST_CASE("kernel spectrum converges under refinement") {
    const ConcentrationLevel C(2.0);
    QuadratureSpec q = default_quadrature(kP, C);
    q.n_nu = 128;
    const auto coarse = kernel_spectrum(build_kernel_matrix(kP, C, q), 4);
    q.n_nu = 256;
    const auto fine = kernel_spectrum(build_kernel_matrix(kP, C, q), 4);
    for (std::size_t n = 0; n < 4; ++n) CHECK(fine[n].lambda == Approx(coarse[n].lambda).epsilon(1e-3));
    // Refining n_a, n_b moves toward the analytic value (within 1e-4 noise).
    QuadratureSpec lo = default_quadrature(kP, C), hi = lo;
    lo.n_a = lo.n_b = 32;
    const double e_lo = std::fabs(kernel_spectrum(build_kernel_matrix(kP, C, lo), 1)[0].lambda - eigenvalue(0, kP.r(), C));
    const double e_hi = std::fabs(kernel_spectrum(build_kernel_matrix(kP, C, hi), 1)[0].lambda - eigenvalue(0, kP.r(), C));
    CHECK(e_hi <= e_lo + 1e-4);
}

TEST_CASE("full operator: linearity and approximate eigen-relation") {
    const AnisotropySpec spec = AnisotropySpec::from_p_entries(1.0, 0.0, 0.5);
    const ConcentrationLevel C(3.0);
    const GridGeometry space = centered_geometry(128, 128, 0.5, 1.0);
    const GridGeometry freq = frequency_geometry(space);
    const EigenSpec eig(0, kP, spec, C);
    const ComplexGrid psi = to_complex(eigenfunction_frequency_grid(eig, freq));
    DiskSampling ds;
    ds.n_a = 32;
    ds.b_step_factor = 0.2;
    const ComplexGrid out = apply_full_operator(psi, kP, spec, C, ds);
    const double lam = eigenvalue(0, kP.r(), C);
    ComplexGrid scaled = psi;
    for (auto& v : scaled.values) v *= lam;
    CHECK(relative_l2_error(out, scaled) <= 0.05);

    // Linearity on a coarser sampling.
    ds.n_a = 32;
    ds.b_step_factor = 0.5;
    const ComplexGrid g2 = coherent_state_freq_grid(kP, spec, LocalIndex(1.0, 0.0, Vec2(0.5, 0.0)), freq);
    ComplexGrid mix = psi;
    const std::complex<double> alpha(0.7, -0.3);
    for (std::size_t k = 0; k < mix.values.size(); ++k) mix.values[k] = alpha * psi.values[k] + g2.values[k];
    const ComplexGrid a = apply_full_operator(psi, kP, spec, C, ds);
    const ComplexGrid b = apply_full_operator(g2, kP, spec, C, ds);
    const ComplexGrid m = apply_full_operator(mix, kP, spec, C, ds);
    ComplexGrid lin = a;
    for (std::size_t k = 0; k < lin.values.size(); ++k) lin.values[k] = alpha * a.values[k] + b.values[k];
    CHECK(relative_l2_error(m, lin) <= 1e-10);
}

TEST_CASE("full operator rejects a grid that misses the band") {
    const ConcentrationLevel C(3.0);
    const GridGeometry space = centered_geometry(16, 16, 4.0, 4.0);
    const ComplexGrid g(frequency_geometry(space));
    CHECK_THROWS_AS(apply_full_operator(g, kP, AnisotropySpec(), C), PreconditionError);
}
