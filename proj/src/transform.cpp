#include "anisoloc/transform.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "anisoloc/errors.hpp"
#include "anisoloc/fft.hpp"
#include "anisoloc/localisation_operator.hpp"

namespace anisoloc {

void check_state_band(const GridGeometry& space, const MorseParams& p, const AnisotropySpec& spec, double a) {
    const double centre = constants(p).C3 * std::pow(a, -1.0 / p.gamma());
    const double limit = transformed_band_limit(space, spec);
    const double step = transformed_frequency_step(space, spec);
    if (3.0 * centre > limit || centre / 3.0 < step) {
        std::ostringstream msg;
        msg << "state at a = " << a << " occupies transformed band [" << centre / 3.0 << ", " << 3.0 * centre
            << "] but the grid resolves [" << step << ", " << limit << "]";
        throw PreconditionError(msg.str());
    }
}

CoefficientSlice analyze(const ComplexGrid& g, const MorseParams& p, const AnisotropySpec& spec,
                         const std::vector<LocalIndex>& xi) {
    for (const LocalIndex& x : xi) check_state_band(g.geom, p, spec, x.a);
    const ComplexGrid G = forward_ft(g);
    const double pref = G.geom.dx * G.geom.dy / (4.0 * std::numbers::pi * std::numbers::pi);
    CoefficientSlice out{xi, std::vector<cplx>(xi.size())};
    for (std::size_t i = 0; i < xi.size(); ++i) {
        cplx s = 0.0;
        for (std::size_t iy = 0; iy < G.geom.ny; ++iy)
            for (std::size_t ix = 0; ix < G.geom.nx; ++ix) {
                const cplx Gk = G.at(ix, iy);
                if (Gk == 0.0) continue;
                s += std::conj(coherent_state_freq(p, spec, xi[i], G.geom.point(ix, iy))) * Gk;
            }
        out.values[i] = pref * s;
    }
    return out;
}

CoefficientSlice analyze(const RealGrid& g, const MorseParams& p, const AnisotropySpec& spec,
                         const std::vector<LocalIndex>& xi) {
    return analyze(to_complex(g), p, spec, xi);
}

LatticeCoefficients analyze_lattice(const ComplexGrid& g, const MorseParams& p, const AnisotropySpec& spec,
                                    const IndexQuadrature& nodes, Execution exec) {
    const ComplexGrid G = forward_ft(g);
    const SpectralPlane plane(G.geom, p, spec);
    LatticeCoefficients out{g.geom, nodes, {}};
    out.slices.reserve(nodes.size());
    for (const ScaleNode& node : nodes) out.slices.push_back(analyze_node(plane, G.values, p, spec, node, exec));
    return out;
}

Reconstruction synthesize(const LatticeCoefficients& coeffs, const MorseParams& p, const AnisotropySpec& spec,
                          const GridGeometry& space, const ComplexGrid* reference, Execution exec) {
    if (coeffs.nodes.empty()) throw DomainError("synthesize: empty index set");
    if (coeffs.slices.size() != coeffs.nodes.size()) throw DomainError("synthesize: slice/node count mismatch");
    const GridGeometry fg = frequency_geometry(space);
    const SpectralPlane plane(fg, p, spec);
    ComplexGrid S(fg);
    for (std::size_t i = 0; i < coeffs.nodes.size(); ++i)
        synthesize_node(plane, coeffs.slices[i], p, spec, coeffs.nodes[i], S.values, exec);
    Reconstruction rec{inverse_ft(S, space), std::nullopt};
    if (reference != nullptr) rec.relative_error = relative_l2_error(rec.field, *reference);
    return rec;
}

std::vector<RealGrid> scalogram(const ComplexGrid& g, const MorseParams& p, const AnisotropySpec& spec,
                                const std::vector<double>& a_list, const std::vector<double>& theta_list,
                                Execution exec) {
    if (a_list.empty() || theta_list.empty()) throw DomainError("scalogram: empty a or theta list");
    for (double a : a_list) {
        if (!(a > 0.0)) throw DomainError("scalogram: scales must be positive");
        check_state_band(g.geom, p, spec, a);
    }
    const ComplexGrid G = forward_ft(g);
    const SpectralPlane plane(G.geom, p, spec);
    std::vector<RealGrid> out;
    for (double a : a_list)
        for (double theta : theta_list) {
            const LocalIndex xi(a, theta, Vec2::Zero());
            ScaleNode node{a, xi.theta, 0.0, g.geom, std::vector<double>(g.geom.size(), g.geom.dx * g.geom.dy)};
            const ComplexGrid w = analyze_node(plane, G.values, p, spec, node, exec);
            RealGrid s(g.geom);
            for (std::size_t k = 0; k < s.values.size(); ++k) s.values[k] = std::norm(w.values[k]);
            out.push_back(std::move(s));
        }
    return out;
}

ComplexGrid coherent_state_freq_grid(const MorseParams& p, const AnisotropySpec& spec, const LocalIndex& xi,
                                     const GridGeometry& freq) {
    validate_geometry(freq);
    ComplexGrid out(freq);
    const auto ny = static_cast<long>(freq.ny);
#pragma omp parallel for schedule(static)
    for (long iy = 0; iy < ny; ++iy)
        for (std::size_t ix = 0; ix < freq.nx; ++ix)
            out.at(ix, static_cast<std::size_t>(iy)) =
                coherent_state_closed_form(p, spec, xi, freq.point(ix, static_cast<std::size_t>(iy)));
    return out;
}

ComplexGrid coherent_state_grid(const MorseParams& p, const AnisotropySpec& spec, const LocalIndex& xi,
                                const GridGeometry& space) {
    return inverse_ft(coherent_state_freq_grid(p, spec, xi, frequency_geometry(space)), space);
}

}  // namespace anisoloc
