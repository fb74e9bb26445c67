#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>

#include "anisoloc/eigensystem.hpp"
#include "anisoloc/localisation_operator.hpp"
#include "anisoloc/transform.hpp"

// The OpenMP kernels must reproduce the serial reference bit for bit.
using namespace anisoloc;

namespace {
const MorseParams kP(8.0, 3.0);
const AnisotropySpec kSpec = AnisotropySpec::from_p_entries(1.0, 0.2, 0.5);

template <class T>
bool identical(const std::vector<T>& a, const std::vector<T>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(T)) == 0;
}
}  // namespace

TEST_CASE("kernel matrix") {
    const ConcentrationLevel C(2.0);
    QuadratureSpec q = default_quadrature(kP, C);
    q.n_nu = 64;
    const KernelMatrix a = build_kernel_matrix(kP, C, q, KernelForm::DifferenceFrequency, Execution::Serial);
    const KernelMatrix b = build_kernel_matrix(kP, C, q, KernelForm::DifferenceFrequency, Execution::Parallel);
    CHECK(a.M == b.M);
}

TEST_CASE("eigenfunction grids") {
    const EigenSpec eig(2, kP, kSpec, ConcentrationLevel(2.0));
    const GridGeometry g = default_space_grid(eig);
    CHECK(identical(eigenfunction_space_grid(eig, g, Execution::Serial).values,
                    eigenfunction_space_grid(eig, g, Execution::Parallel).values));
    CHECK(identical(eigenfunction_frequency_grid(eig, frequency_geometry(g), Execution::Serial).values,
                    eigenfunction_frequency_grid(eig, frequency_geometry(g), Execution::Parallel).values));
}

TEST_CASE("lattice analysis and synthesis") {
    const GridGeometry geom = centered_geometry(64, 64, 0.5, 0.5);
    const ComplexGrid g = coherent_state_grid(kP, kSpec, LocalIndex(1.0, 0.0, Vec2(0.3, 0.1)), geom);
    IndexLattice lat;
    lat.a_lo = 0.3;
    lat.a_hi = 3.0;
    const IndexQuadrature q = lattice_index_quadrature(kP, lat);
    const LatticeCoefficients ws = analyze_lattice(g, kP, kSpec, q, Execution::Serial);
    const LatticeCoefficients wp = analyze_lattice(g, kP, kSpec, q, Execution::Parallel);
    for (std::size_t n = 0; n < q.size(); ++n) CHECK(identical(ws.slices[n].values, wp.slices[n].values));
    const Reconstruction rs = synthesize(ws, kP, kSpec, geom, &g, Execution::Serial);
    const Reconstruction rp = synthesize(ws, kP, kSpec, geom, &g, Execution::Parallel);
    CHECK(identical(rs.field.values, rp.field.values));
    CHECK(*rs.relative_error == *rp.relative_error);
    const auto ss = scalogram(g, kP, kSpec, {0.8, 1.2}, {0.0}, Execution::Serial);
    const auto sp = scalogram(g, kP, kSpec, {0.8, 1.2}, {0.0}, Execution::Parallel);
    for (std::size_t k = 0; k < ss.size(); ++k) CHECK(identical(ss[k].values, sp[k].values));
}

TEST_CASE("full operator") {
    const ConcentrationLevel C(2.0);
    const GridGeometry space = centered_geometry(64, 64, 0.5, 1.0);
    const ComplexGrid G = to_complex(eigenfunction_frequency_grid(EigenSpec(0, kP, kSpec, C), frequency_geometry(space)));
    DiskSampling ds;
    ds.b_step_factor = 0.5;
    CHECK(identical(apply_full_operator(G, kP, kSpec, C, ds, Execution::Serial).values,
                    apply_full_operator(G, kP, kSpec, C, ds, Execution::Parallel).values));
}
