#include "anisoloc/checks/oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "anisoloc/eigensystem.hpp"

namespace anisoloc::checks {

namespace {
constexpr double kPi = std::numbers::pi;
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, rel_tol, &err);
}

double radial_cutoff(const MorseParams& p, double a) {
    const double g = p.gamma();
    const double e = 2.0 * p.beta() + g;
    auto logf = [&](double nu) { return e * std::log(nu) - 2.0 * a * std::pow(nu, g); };
    const double peak = std::pow(e / (2.0 * a * g), 1.0 / g);
    double hi = peak;
    while (logf(hi) > logf(peak) - 37.0) hi *= 1.1;  // e^{-37} < 1e-16
    return hi;
}

double golden_argmax(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

MomentOracle moments_by_quadrature(const MorseParams& p, const AnisotropySpec& spec, const LocalIndex& xi) {
    const double g = p.gamma();
    const double s = std::pow(xi.a, 1.0 / g);
    const double e = p.beta() + 0.5 * (g - 1.0);
    const double detp = spec.detP();
    const Mat2 pt = spec.P().transpose();
    constexpr int n_phi = 32;
    // Angular sums at radius nu of |V|^2 and Re{j V* dV/dnu_l}.
    auto ring = [&](double nu, int which) {
        double acc = 0.0;
        for (int k = 0; k < n_phi; ++k) {
            const double phi = 2.0 * kPi * k / n_phi;
            const Vec2 nv(nu * std::cos(phi), nu * std::sin(phi));
            const cplx V = coherent_state_freq(p, spec, xi, pt * nv);
            if (which <= 1) {
                acc += std::norm(V);
                continue;
            }
            // Analytic derivative of e^{-j phase(nu)} M(nu).
            const int l = which - 2;
            const double t = s * nu;
            const double M = s * radial_state(p, t) / std::sqrt(detp);
            const double dM = M * (e / t - g * std::pow(t, g - 1.0)) * s * nv[l] / nu;
            const double dphase = xi.b[l] * std::pow(nu, g - 1.0) + xi.b.dot(nv) * (g - 1.0) * std::pow(nu, g - 3.0) * nv[l];
            const double phase = xi.b.dot(nv) * std::pow(nu, g - 1.0);
            const cplx dV = std::polar(1.0, -phase) * cplx(dM, -M * dphase);
            acc += (cplx(0.0, 1.0) * std::conj(V) * dV).real();
        }
        return acc * 2.0 * kPi / n_phi;
    };
    const double hi = radial_cutoff(p, xi.a);
    const double norm_nu = integrate([&](double nu) { return ring(nu, 0) * nu; }, 0.0, hi);
    MomentOracle m{};
    m.energy = norm_nu * detp / (4.0 * kPi * kPi);
    m.mean_frequency = integrate([&](double nu) { return ring(nu, 1) * nu * nu; }, 0.0, hi) / norm_nu;
    for (int l = 0; l < 2; ++l)
        // b_l = 0 makes the integrand odd in nu_l: the moment vanishes by symmetry.
        m.mean_y[l] = xi.b[l] == 0.0 ? 0.0 : integrate([&](double nu) { return ring(nu, 2 + l) * nu; }, 0.0, hi, 1e-12) / norm_nu;
    return m;
}

double inverse_admissibility_by_quadrature(const MorseParams& p) {
    const double hi = radial_cutoff(p, 1.0);
    return integrate(
        [&](double nu) {
            const double v = radial_state(p, nu);
            return std::pow(nu, 1.0 - 2.0 * p.gamma()) * v * v;
        },
        0.0, hi);
}

double hypervolume_by_quadrature(const MorseParams& p, const ConcentrationLevel& C) {
    if (C.value() == 1.0) return 0.0;
    const MorseConstants k = constants(p);
    const double g = p.gamma();
    const NuBounds nb = nu_bounds(p, C);
    const double raw = 4.0 * kPi * kPi *
                       integrate(
                           [&](double nu) {
                               const double a = std::pow(k.C3 / nu, g);
                               const double bm2 = std::max(0.0, 2.0 * a * C.value() - 1.0 - a * a);
                               const double ymax2 = k.C4 * k.C4 * bm2 * std::pow(a, 2.0 / g - 2.0);
                               return nu * 0.5 * ymax2;
                           },
                           nb.nu_min, nb.nu_max, 1e-14);
    return raw / (4.0 * kPi * kPi);
}

double phase_volume_monte_carlo(const MorseParams& p, const ConcentrationLevel& C, const AnisotropySpec& spec,
                                std::size_t samples, std::uint64_t seed) {
    const MorseConstants k = constants(p);
    const double g = p.gamma();
    const NuBounds nb = nu_bounds(p, C);
    // y_max over the region: scan a.
    double ymax = 0.0;
    for (int i = 0; i <= 4000; ++i) {
        const double a = C.a_lo() + (C.a_hi() - C.a_lo()) * i / 4000.0;
        ymax = std::max(ymax, k.C4 * C.b_max(a) * std::pow(a, 1.0 / g - 1.0));
    }
    ymax *= 1.01;
    const Mat2& P = spec.P();
    const Mat2& Q = spec.Q();
    // Boxes containing {|P x| <= ymax} and {|Q^T w| <= nu_max}.
    const Vec2 xbox(ymax * Q.row(0).norm(), ymax * Q.row(1).norm());
    const Vec2 wbox(nb.nu_max * P.col(0).norm(), nb.nu_max * P.col(1).norm());
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const Vec2 x(xbox[0] * u(gen), xbox[1] * u(gen));
        const Vec2 w(wbox[0] * u(gen), wbox[1] * u(gen));
        const double y = (P * x).norm();
        const double nu = (Q.transpose() * w).norm();
        if (nu > 0.0 && phase_region_contains(p, C, y, nu)) ++hits;
    }
    const double box = 16.0 * xbox[0] * xbox[1] * wbox[0] * wbox[1];
    return box * static_cast<double>(hits) / static_cast<double>(samples);
}

double eigenvalue_by_quadrature(int n, double r, double C) {
    const double x0 = (C - 1.0) / (C + 1.0);
    if (x0 == 0.0) return 0.0;
    const double log_pref = boost::math::lgamma(r + n) - boost::math::lgamma(n + 1.0) - boost::math::lgamma(r - 1.0);
    const double I = integrate([&](double x) { return std::pow(x, n) * std::pow(1.0 - x, r - 2.0); }, 0.0, x0, 1e-15);
    return std::exp(log_pref) * I;
}

double eigen_inner_product(const MorseParams& p, int n, int k) {
    const double hi = radial_cutoff(p, 0.5) * 2.0;
    return integrate([&](double nu) { return radial_eigenfunction(n, p, nu) * radial_eigenfunction(k, p, nu) * nu; },
                     0.0, hi) /
           (2.0 * kPi);
}

double hankel_eigenfunction(const MorseParams& p, int n, double y) {
    const double hi = radial_cutoff(p, 0.5) * 2.0;
    return integrate([&](double nu) { return radial_eigenfunction(n, p, nu) * std::cyl_bessel_j(0.0, nu * y) * nu; }, 0.0,
                     hi, 1e-12) /
           (2.0 * kPi);
}

double correlation_length(const std::vector<RealGrid>& fields, bool along_x) {
    if (fields.empty()) return 0.0;
    const GridGeometry& g = fields.front().geom;
    const std::size_t n = along_x ? g.nx : g.ny;
    const std::size_t m = along_x ? g.ny : g.nx;
    std::vector<double> acf(n / 2 + 1, 0.0);
    for (const RealGrid& f : fields)
        for (std::size_t line = 0; line < m; ++line)
            for (std::size_t lag = 0; lag <= n / 2; ++lag)
                for (std::size_t i = 0; i < n; ++i) {
                    const std::size_t j = (i + lag) % n;
                    const double a = along_x ? f.at(i, line) : f.at(line, i);
                    const double b = along_x ? f.at(j, line) : f.at(line, j);
                    acf[lag] += a * b;
                }
    const double d = along_x ? g.dx : g.dy;
    const double target = std::exp(-1.0);
    for (std::size_t lag = 1; lag < acf.size(); ++lag) {
        const double r0 = acf[lag - 1] / acf[0], r1 = acf[lag] / acf[0];
        if (r1 < target) return d * (static_cast<double>(lag - 1) + (r0 - target) / (r0 - r1));
    }
    return d * static_cast<double>(n / 2);
}

double lagrange6(const std::vector<double>& s, double x0, double h, double x) {
    const double t = (x - x0) / h;
    auto i0 = static_cast<long>(std::floor(t)) - 2;
    i0 = std::clamp(i0, 0L, static_cast<long>(s.size()) - 6);
    double v = 0.0;
    for (long i = i0; i < i0 + 6; ++i) {
        double w = 1.0;
        for (long j = i0; j < i0 + 6; ++j)
            if (j != i) w *= (t - static_cast<double>(j)) / static_cast<double>(i - j);
        v += w * s[static_cast<std::size_t>(i)];
    }
    return v;
}

}  // namespace anisoloc::checks
