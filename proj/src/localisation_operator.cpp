#include "anisoloc/localisation_operator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "anisoloc/eigensystem.hpp"
#include "anisoloc/errors.hpp"
#include "anisoloc/quadrature.hpp"

namespace anisoloc {

namespace {

constexpr double kPi = std::numbers::pi;

// Tensor (a, b) rule over A_r(C): per a-node, the a-weight a^{r-2} w_a and scaled b-nodes.
struct RegionRule {
    std::vector<double> a;
    std::vector<double> wa;                // includes a^{r-2}
    std::vector<std::vector<double>> b;    // per a
    std::vector<std::vector<double>> wb;
};

RegionRule region_rule(const MorseParams& p, const ConcentrationLevel& C, const QuadratureSpec& q) {
    RegionRule rr;
    if (C.value() == 1.0) return rr;
    const quadrature::Rule ra = quadrature::gauss_legendre(q.n_a, C.a_lo(), C.a_hi());
    const quadrature::Rule rb = quadrature::gauss_legendre(q.n_b, 0.0, 1.0);
    const double r = p.r();
    for (std::size_t i = 0; i < q.n_a; ++i) {
        const double a = ra.nodes[i];
        const double bm = C.b_max(a);
        rr.a.push_back(a);
        rr.wa.push_back(ra.weights[i] * std::pow(a, r - 2.0));
        std::vector<double> b(q.n_b), wb(q.n_b);
        for (std::size_t j = 0; j < q.n_b; ++j) {
            b[j] = bm * rb.nodes[j];
            wb[j] = bm * rb.weights[j];
        }
        rr.b.push_back(std::move(b));
        rr.wb.push_back(std::move(wb));
    }
    return rr;
}

// C_{H,A} N^2 (2/pi): the constant in front of (nu1 nu2)^l Int Int.
double kernel_prefactor(const MorseParams& p) {
    const double n = window_normalization(p);
    return radial_normalization(p.r()) * n * n * 2.0 / kPi;
}

double b_factor(KernelForm form, double u1, double u2, double b) {
    if (form == KernelForm::DifferenceFrequency) return 0.5 * std::cos((u1 - u2) * b);
    return std::cos(u1 * b - 0.25 * kPi) * std::cos(u2 * b - 0.25 * kPi);
}

}  // namespace

double admissibility_constant(double beta, double gamma) {
    if (!(gamma > 0.0) || !(beta > 0.0)) throw DomainError("admissibility_constant: beta, gamma must be positive");
    if (!(beta > 0.5 * (gamma - 1.0))) {
        std::ostringstream msg;
        msg << "admissibility_constant: Int nu^{1-2 gamma} V_r(nu)^2 dnu diverges at the origin for beta = " << beta
            << " <= (gamma - 1)/2 = " << 0.5 * (gamma - 1.0);
        throw DivergenceError(msg.str());
    }
    const double r = (2.0 * beta + 1.0) / gamma;
    return (r - 1.0) / (4.0 * kPi);
}

double admissibility_constant(const MorseParams& p) { return admissibility_constant(p.beta(), p.gamma()); }

double radial_normalization(double r) {
    if (!(r > 1.0)) throw DomainError("radial_normalization: need r > 1");
    return 0.5 * (r - 1.0);
}

QuadratureSpec default_quadrature(const MorseParams& p, const ConcentrationLevel& C) {
    const NuBounds nb = nu_bounds(p, C);
    QuadratureSpec q;
    q.nu_lo = 0.25 * nb.nu_min;
    q.nu_hi = 2.5 * nb.nu_max;
    return q;
}

void validate_quadrature(const QuadratureSpec& q, const MorseParams& p, const ConcentrationLevel& C) {
    if (q.n_a < 32 || q.n_b < 32) throw DomainError("QuadratureSpec: n_a and n_b must be >= 32");
    if (q.n_nu < 2) throw DomainError("QuadratureSpec: n_nu must be >= 2");
    if (!(q.nu_lo > 0.0)) throw DomainError("QuadratureSpec: nu_lo must be positive");
    const double nu_max = nu_bounds(p, C).nu_max;
    if (!(q.nu_hi > nu_max) || !(q.nu_hi > q.nu_lo)) {
        std::ostringstream msg;
        msg << "QuadratureSpec: nu_hi = " << q.nu_hi << " must exceed nu_max(C) = " << nu_max;
        throw DomainError(msg.str());
    }
}

double radial_kernel(const MorseParams& p, const ConcentrationLevel& C, double nu1, double nu2,
                     const QuadratureSpec& q, KernelForm form) {
    if (!(nu1 > 0.0) || !(nu2 > 0.0)) throw DomainError("radial_kernel: nu1, nu2 must be positive");
    if (q.n_a == 0 || q.n_b == 0) throw DomainError("radial_kernel: empty quadrature");
    const RegionRule rr = region_rule(p, C, q);
    const double g = p.gamma();
    const double u1 = std::pow(nu1, g), u2 = std::pow(nu2, g);
    double s = 0.0;
    for (std::size_t i = 0; i < rr.a.size(); ++i) {
        double sb = 0.0;
        for (std::size_t j = 0; j < rr.b[i].size(); ++j) sb += rr.wb[i][j] * b_factor(form, u1, u2, rr.b[i][j]);
        s += rr.wa[i] * std::exp(-rr.a[i] * (u1 + u2)) * sb;
    }
    return kernel_prefactor(p) * std::pow(nu1 * nu2, p.l()) * s;
}

Eigen::VectorXd KernelMatrix::sqrt_measure() const {
    Eigen::VectorXd s(static_cast<Eigen::Index>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i)
        s[static_cast<Eigen::Index>(i)] = std::sqrt(weights[i] * nodes[i] / (2.0 * kPi));
    return s;
}

KernelMatrix build_kernel_matrix(const MorseParams& p, const ConcentrationLevel& C, const QuadratureSpec& q,
                                 KernelForm form, Execution exec) {
    validate_quadrature(q, p, C);
    KernelMatrix K{{}, {}, {}, p.beta(), p.gamma(), C.value(), q, form};
    const quadrature::Rule rn = quadrature::gauss_legendre(q.n_nu, q.nu_lo, q.nu_hi);
    K.nodes = rn.nodes;
    K.weights = rn.weights;
    const std::size_t n = q.n_nu;
    const RegionRule rr = region_rule(p, C, q);
    const std::size_t na = rr.a.size();
    const double g = p.gamma();

    std::vector<double> u(n), front(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = std::pow(K.nodes[i], g);
        front[i] = std::sqrt(K.weights[i] * K.nodes[i] / (2.0 * kPi)) * std::pow(K.nodes[i], p.l());
    }
    // e^{-a u_i} sqrt(w_a) table, row per node.
    std::vector<double> ea(n * na);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < na; ++k) ea[i * na + k] = std::sqrt(rr.wa[k]) * std::exp(-rr.a[k] * u[i]);

    const double pref = kernel_prefactor(p);
    K.M = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const auto ni = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
    for (long il = 0; il < ni; ++il) {
        const auto i = static_cast<std::size_t>(il);
        for (std::size_t j = 0; j <= i; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < na; ++k) {
                const double e = ea[i * na + k] * ea[j * na + k];
                if (e == 0.0) continue;
                double sb = 0.0;
                const std::vector<double>& b = rr.b[k];
                const std::vector<double>& wb = rr.wb[k];
                for (std::size_t m = 0; m < b.size(); ++m) sb += wb[m] * b_factor(form, u[i], u[j], b[m]);
                s += e * sb;
            }
            const double v = pref * front[i] * front[j] * s;
            K.M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
            K.M(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
        }
    }
    return K;
}

std::vector<SpectralPair> kernel_spectrum(const KernelMatrix& K, std::size_t N) {
    const auto n = static_cast<std::size_t>(K.M.rows());
    if (N > n) throw DomainError("kernel_spectrum: requested more eigenpairs than nodes");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K.M);
    if (es.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "kernel_spectrum: symmetric eigensolver failed (n = " << n << ", max|M| = " << K.M.cwiseAbs().maxCoeff()
            << ", asymmetry = " << (K.M - K.M.transpose()).cwiseAbs().maxCoeff() << ")";
        throw NumericalError(msg.str());
    }
    const Eigen::VectorXd sm = K.sqrt_measure();
    std::vector<SpectralPair> out;
    for (std::size_t k = 0; k < N; ++k) {
        const auto col = static_cast<Eigen::Index>(n - 1 - k);  // ascending order from the solver
        Eigen::VectorXd v = es.eigenvectors().col(col);
        const double vmax = v.cwiseAbs().maxCoeff();
        for (Eigen::Index i = 0; i < v.size(); ++i)
            if (std::fabs(v[i]) > 1e-6 * vmax) {
                if (v[i] < 0.0) v = -v;
                break;
            }
        out.push_back({es.eigenvalues()[col], v, v.cwiseQuotient(sm)});
    }
    return out;
}

double eigenvector_alignment(const KernelMatrix& K, const SpectralPair& pair, int n) {
    const MorseParams p(K.beta, K.gamma);
    const Eigen::VectorXd sm = K.sqrt_measure();
    Eigen::VectorXd ref(sm.size());
    for (Eigen::Index i = 0; i < sm.size(); ++i)
        ref[i] = sm[i] * radial_eigenfunction(n, p, K.nodes[static_cast<std::size_t>(i)]);
    return std::fabs(ref.dot(pair.vector)) / (ref.norm() * pair.vector.norm());
}

ComplexGrid apply_full_operator(const ComplexGrid& G, const MorseParams& p, const AnisotropySpec& spec,
                                const IndexQuadrature& region, Execution exec) {
    validate_geometry(G.geom);
    const SpectralPlane plane(G.geom, p, spec);
    ComplexGrid out(G.geom);
    for (const ScaleNode& node : region) {
        const ComplexGrid w = analyze_node(plane, G.values, p, spec, node, exec);
        synthesize_node(plane, w, p, spec, node, out.values, exec);
    }
    return out;
}

ComplexGrid apply_full_operator(const ComplexGrid& G, const MorseParams& p, const AnisotropySpec& spec,
                                const ConcentrationLevel& C, const DiskSampling& sampling, Execution exec) {
    const NuBounds nb = nu_bounds(p, C);
    // The lattice dual to G must represent the transformed band [nu_min/2, 2 nu_max].
    const double limit = std::min(std::fabs(G.geom.origin.x()) / spec.P().col(0).norm(),
                                  std::fabs(G.geom.origin.y()) / spec.P().col(1).norm());
    const double step = std::max(G.geom.dx * spec.Q().row(0).norm(), G.geom.dy * spec.Q().row(1).norm());
    if (limit < 2.0 * nb.nu_max || step > 0.5 * nb.nu_min) {
        std::ostringstream msg;
        msg << "apply_full_operator: frequency lattice does not cover the transformed band [" << 0.5 * nb.nu_min << ", "
            << 2.0 * nb.nu_max << "] (band limit " << limit << ", step " << step << ")";
        throw PreconditionError(msg.str());
    }
    return apply_full_operator(G, p, spec, disk_index_quadrature(p, C, sampling), exec);
}

}  // namespace anisoloc
