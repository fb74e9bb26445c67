// Wall-clock comparison of the serial reference path and the OpenMP kernels.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "anisoloc/eigensystem.hpp"
#include "anisoloc/localisation_operator.hpp"
#include "anisoloc/transform.hpp"

using namespace anisoloc;

namespace {

double best_of(int reps, const std::function<void()>& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const std::string& name, int reps, const std::function<void(Execution)>& f) {
    const double s = best_of(reps, [&] { f(Execution::Serial); });
    const double p = best_of(reps, [&] { f(Execution::Parallel); });
    std::printf("%-28s %10.4f %10.4f %8.2fx\n", name.c_str(), s, p, s / p);
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
    const MorseParams p(8.0, 3.0);
    const AnisotropySpec spec = AnisotropySpec::from_p_entries(1.0, 0.2, 0.5);
    const ConcentrationLevel C(2.0);

    std::printf("threads=%d reps=%d\n", omp_get_max_threads(), reps);
    std::printf("%-28s %10s %10s %9s\n", "kernel", "serial_s", "parallel_s", "speedup");

    QuadratureSpec q = default_quadrature(p, C);
    q.n_nu = 256;
    row("build_kernel_matrix n=256", reps,
        [&](Execution e) { (void)build_kernel_matrix(p, C, q, KernelForm::DifferenceFrequency, e); });

    const EigenSpec eig(3, p, spec, C);
    const GridGeometry eg = default_space_grid(eig);
    row("eigenfunction_space_grid", reps, [&](Execution e) { (void)eigenfunction_space_grid(eig, eg, e); });

    const GridGeometry geom = centered_geometry(128, 128, 0.5, 0.5);
    const ComplexGrid g = coherent_state_grid(p, spec, LocalIndex(1.0, 0.0, Vec2(0.3, 0.1)), geom);
    IndexLattice lat;
    lat.a_lo = 0.1;
    lat.a_hi = 10.0;
    const IndexQuadrature iq = lattice_index_quadrature(p, lat);
    const LatticeCoefficients w = analyze_lattice(g, p, spec, iq);
    row("analyze_lattice 128^2", reps, [&](Execution e) { (void)analyze_lattice(g, p, spec, iq, e); });
    row("synthesize 128^2", reps, [&](Execution e) { (void)synthesize(w, p, spec, geom, nullptr, e); });

    const GridGeometry space = centered_geometry(64, 64, 0.5, 1.0);
    const ComplexGrid G = to_complex(eigenfunction_frequency_grid(EigenSpec(0, p, spec, C), frequency_geometry(space)));
    DiskSampling ds;
    ds.b_step_factor = 0.5;
    row("apply_full_operator 64^2", 1, [&](Execution e) { (void)apply_full_operator(G, p, spec, C, ds, e); });
    return 0;
}
