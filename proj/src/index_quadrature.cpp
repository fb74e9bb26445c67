#include "anisoloc/index_quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "anisoloc/errors.hpp"
#include "anisoloc/localisation_operator.hpp"
#include "anisoloc/quadrature.hpp"

namespace anisoloc {

namespace {

using CMat = Eigen::MatrixXcd;
using cplx = std::complex<double>;

constexpr double kPruneRel = 1e-12;
constexpr std::size_t kChunk = 2048;

std::vector<double> axis(const GridGeometry& g, bool x_axis) {
    const std::size_t n = x_axis ? g.nx : g.ny;
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = x_axis ? g.x(i) : g.y(i);
    return v;
}

// Indices of samples where the state modulus is significant, in ascending order.
std::vector<std::size_t> support(const std::vector<double>& R, double peak) {
    std::vector<std::size_t> idx;
    const double thr = kPruneRel * peak;
    for (std::size_t k = 0; k < R.size(); ++k)
        if (R[k] > thr) idx.push_back(k);
    return idx;
}

double state_peak(const MorseParams& p, const AnisotropySpec& spec, double a) {
    const double s = std::pow(a, 1.0 / p.gamma());
    return s * radial_state(p, peak_frequency(p)) / std::sqrt(spec.detP());
}

// Odd b-axis centred at 0 with at least 9 samples.
GridGeometry centred_b_grid(double half_width, double step) {
    std::size_t nb = static_cast<std::size_t>(std::ceil(half_width / step - 1e-12));
    if (nb < 4) {
        nb = 4;
        step = half_width / 4.0;
    }
    const double o = -static_cast<double>(nb) * step;
    return {2 * nb + 1, 2 * nb + 1, step, step, Vec2(o, o)};
}

}  // namespace

SpectralPlane::SpectralPlane(const GridGeometry& f, const MorseParams& p, const AnisotropySpec& spec)
    : freq(f), nu(f.size()), kappa1(f.size()), kappa2(f.size()), cell(f.dx * f.dy) {
    const Mat2 qt = spec.Q().transpose();
    const double g = p.gamma();
    for (std::size_t iy = 0; iy < f.ny; ++iy)
        for (std::size_t ix = 0; ix < f.nx; ++ix) {
            const std::size_t k = iy * f.nx + ix;
            const Vec2 v = qt * f.point(ix, iy);
            const double n = v.norm();
            const double scale = n > 0.0 ? std::pow(n, g - 1.0) : 0.0;
            nu[k] = n;
            kappa1[k] = v.x() * scale;
            kappa2[k] = v.y() * scale;
        }
}

std::vector<double> IndexLattice::scales() const {
    if (!(a_lo > 0.0) || !(a_hi >= a_lo) || !(log_step > 0.0))
        throw DomainError("IndexLattice: need 0 < a_lo <= a_hi and log_step > 0");
    if (n_theta == 0 || !(b_step_factor > 0.0) || !(b_extent > 0.0))
        throw DomainError("IndexLattice: n_theta, b_step_factor and b_extent must be positive");
    std::vector<double> a;
    const double span = std::log(a_hi / a_lo);
    const auto n = static_cast<std::size_t>(std::floor(span / log_step + 1e-9));
    for (std::size_t k = 0; k <= n; ++k) a.push_back(a_lo * std::exp(static_cast<double>(k) * log_step));
    return a;
}

IndexQuadrature lattice_index_quadrature(const MorseParams& p, const IndexLattice& lattice) {
    const double ch = admissibility_constant(p);
    const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(lattice.n_theta);
    IndexQuadrature q;
    for (double a : lattice.scales()) {
        const double half = lattice.b_extent * std::pow(a, 1.0 - 1.0 / p.gamma());
        const GridGeometry bg = centred_b_grid(half, lattice.b_step_factor * a);
        for (std::size_t m = 0; m < lattice.n_theta; ++m) {
            ScaleNode node{a, static_cast<double>(m) * dtheta,
                           ch / (2.0 * std::numbers::pi) * dtheta * lattice.log_step * a / (a * a * a), bg,
                           std::vector<double>(bg.size(), bg.dx * bg.dy)};
            q.push_back(std::move(node));
        }
    }
    return q;
}

IndexQuadrature disk_index_quadrature(const MorseParams& p, const ConcentrationLevel& C, const DiskSampling& s) {
    if (s.n_a == 0 || !(s.b_step_factor > 0.0) || s.subcells == 0)
        throw DomainError("DiskSampling: counts and step factor must be positive");
    IndexQuadrature q;
    if (C.value() == 1.0) return q;
    const double ch = admissibility_constant(p);
    const quadrature::Rule ra = quadrature::gauss_legendre(s.n_a, C.a_lo(), C.a_hi());
    for (std::size_t i = 0; i < s.n_a; ++i) {
        const double a = ra.nodes[i];
        const double bm = C.b_max(a);
        if (!(bm > 0.0)) continue;
        const GridGeometry bg = centred_b_grid(bm, s.b_step_factor * a);
        std::vector<double> bw(bg.size(), 0.0);
        const double h = bg.dx;
        const auto ns = static_cast<double>(s.subcells);
        for (std::size_t iy = 0; iy < bg.ny; ++iy)
            for (std::size_t ix = 0; ix < bg.nx; ++ix) {
                std::size_t inside = 0;
                for (std::size_t u = 0; u < s.subcells; ++u)
                    for (std::size_t v = 0; v < s.subcells; ++v) {
                        const double bx = bg.x(ix) + h * ((static_cast<double>(u) + 0.5) / ns - 0.5);
                        const double by = bg.y(iy) + h * ((static_cast<double>(v) + 0.5) / ns - 0.5);
                        if (bx * bx + by * by <= bm * bm) ++inside;
                    }
                bw[iy * bg.nx + ix] = h * h * static_cast<double>(inside) / (ns * ns);
            }
        // theta integrates to 2 pi against the C_H/(2 pi) constant.
        q.push_back({a, 0.0, ch * ra.weights[i] / (a * a * a), bg, std::move(bw)});
    }
    return q;
}

std::vector<double> state_modulus(const SpectralPlane& plane, const MorseParams& p, const AnisotropySpec& spec,
                                  double a) {
    const double s = std::pow(a, 1.0 / p.gamma());
    const double f = s / std::sqrt(spec.detP());
    std::vector<double> R(plane.nu.size());
    for (std::size_t k = 0; k < R.size(); ++k) R[k] = f * radial_state(p, s * plane.nu[k]);
    return R;
}

ComplexGrid analyze_node(const SpectralPlane& plane, const std::vector<cplx>& G, const MorseParams& p,
                         const AnisotropySpec& spec, const ScaleNode& node, Execution exec) {
    if (G.size() != plane.nu.size()) throw DomainError("analyze_node: spectrum size mismatch");
    const std::vector<double> R = state_modulus(plane, p, spec, node.a);
    const std::vector<std::size_t> idx = support(R, state_peak(p, spec, node.a));
    const std::vector<double> b1 = axis(node.bgrid, true), b2 = axis(node.bgrid, false);
    const auto n1 = static_cast<Eigen::Index>(b1.size()), n2 = static_cast<Eigen::Index>(b2.size());
    const double pref = plane.cell / (4.0 * std::numbers::pi * std::numbers::pi);

    const std::size_t nchunks = (idx.size() + kChunk - 1) / kChunk;
    std::vector<CMat> partial(nchunks);
    const auto nc = static_cast<long>(nchunks);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
    for (long c = 0; c < nc; ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = std::min(idx.size(), lo + kChunk);
        const auto m = static_cast<Eigen::Index>(hi - lo);
        CMat e1(n1, m), e2c(m, n2);
        for (Eigen::Index j = 0; j < m; ++j) {
            const std::size_t k = idx[lo + static_cast<std::size_t>(j)];
            const cplx coef = pref * R[k] * G[k];
            for (Eigen::Index i = 0; i < n1; ++i) e1(i, j) = std::polar(1.0, b1[static_cast<std::size_t>(i)] * plane.kappa1[k]);
            for (Eigen::Index i = 0; i < n2; ++i)
                e2c(j, i) = coef * std::polar(1.0, b2[static_cast<std::size_t>(i)] * plane.kappa2[k]);
        }
        partial[static_cast<std::size_t>(c)].noalias() = e1 * e2c;
    }
    CMat W = CMat::Zero(n1, n2);
    for (const CMat& part : partial) W += part;  // fixed chunk order

    ComplexGrid out(node.bgrid);
    for (Eigen::Index j = 0; j < n2; ++j)
        for (Eigen::Index i = 0; i < n1; ++i)
            out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = W(i, j);
    return out;
}

void synthesize_node(const SpectralPlane& plane, const ComplexGrid& w, const MorseParams& p,
                     const AnisotropySpec& spec, const ScaleNode& node, std::vector<cplx>& out, Execution exec) {
    if (out.size() != plane.nu.size()) throw DomainError("synthesize_node: output size mismatch");
    if (!(w.geom == node.bgrid)) throw DomainError("synthesize_node: coefficient grid does not match node");
    const std::vector<double> R = state_modulus(plane, p, spec, node.a);
    const std::vector<std::size_t> idx = support(R, state_peak(p, spec, node.a));
    const std::vector<double> b1 = axis(node.bgrid, true), b2 = axis(node.bgrid, false);
    const auto n1 = static_cast<Eigen::Index>(b1.size()), n2 = static_cast<Eigen::Index>(b2.size());

    CMat U(n1, n2);
    for (Eigen::Index j = 0; j < n2; ++j)
        for (Eigen::Index i = 0; i < n1; ++i) {
            const std::size_t s = static_cast<std::size_t>(j) * node.bgrid.nx + static_cast<std::size_t>(i);
            U(i, j) = node.bweights[s] * w.values[s];
        }

    const std::size_t nchunks = (idx.size() + kChunk - 1) / kChunk;
    const auto nc = static_cast<long>(nchunks);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
    for (long c = 0; c < nc; ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = std::min(idx.size(), lo + kChunk);
        const auto m = static_cast<Eigen::Index>(hi - lo);
        CMat e1(n1, m), e2(n2, m);
        for (Eigen::Index j = 0; j < m; ++j) {
            const std::size_t k = idx[lo + static_cast<std::size_t>(j)];
            for (Eigen::Index i = 0; i < n1; ++i) e1(i, j) = std::polar(1.0, -b1[static_cast<std::size_t>(i)] * plane.kappa1[k]);
            for (Eigen::Index i = 0; i < n2; ++i) e2(i, j) = std::polar(1.0, -b2[static_cast<std::size_t>(i)] * plane.kappa2[k]);
        }
        const CMat V = U * e2;  // n1 x m
        for (Eigen::Index j = 0; j < m; ++j) {
            const std::size_t k = idx[lo + static_cast<std::size_t>(j)];
            const cplx s = (e1.col(j).array() * V.col(j).array()).sum();
            out[k] += node.weight * R[k] * s;
        }
    }
}

}  // namespace anisoloc
