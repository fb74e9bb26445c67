#include "anisoloc/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "anisoloc/errors.hpp"

namespace anisoloc::specfun {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2 pi)/2

// Stirling series for x >= 10; coefficients B_{2k} / (2k (2k-1)).
double stirling(double x) {
    static constexpr double c[] = {
        1.0 / 12.0,          -1.0 / 360.0,  1.0 / 1260.0,   -1.0 / 1680.0,
        1.0 / 1188.0,        -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0,
    };
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    for (int k = 7; k >= 0; --k) series = series * inv2 + c[k];
    return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + series * inv;
}

// Continued fraction for I_x(p, q) (modified Lentz); valid for x < (p+1)/(p+q+2).
double beta_cf(double x, double p, double q) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-16;
    const double qab = p + q, qap = p + 1.0, qam = p - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 10000; ++m) {
        const int m2 = 2 * m;
        double aa = m * (q - m) * x / ((qam + m2) * (p + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(p + m) * (qab + m) * x / ((p + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) return h;
    }
    throw NumericalError("reg_inc_beta: continued fraction did not converge (x=" + std::to_string(x) +
                         ", p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")");
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("log_gamma: argument must be positive and finite, got " + std::to_string(x));
    if (x >= 10.0) return stirling(x);
    // Shift up: Gamma(x) = Gamma(x + k) / (x (x+1) ... (x+k-1)).
    double prod = 1.0;
    double z = x;
    while (z < 10.0) {
        prod *= z;
        z += 1.0;
    }
    return stirling(z) - std::log(prod);
}

double log_beta(double p, double q) { return log_gamma(p) + log_gamma(q) - log_gamma(p + q); }

double laguerre(int n, double c, double x) {
    if (n < 0) throw DomainError("laguerre: order must be nonnegative");
    if (!(c > -1.0)) throw DomainError("laguerre: parameter c must exceed -1, got " + std::to_string(c));
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + c - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + c - x) * cur - (k + c) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double reg_inc_beta(double x, double p, double q) {
    if (!(p > 0.0) || !(q > 0.0))
        throw DomainError("reg_inc_beta: p and q must be positive");
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("reg_inc_beta: x must lie in [0, 1], got " + std::to_string(x));
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double log_front = p * std::log(x) + q * std::log1p(-x) - log_beta(p, q);
    if (x < (p + 1.0) / (p + q + 2.0)) return std::exp(log_front) * beta_cf(x, p, q) / p;
    return 1.0 - std::exp(log_front) * beta_cf(1.0 - x, q, p) / q;
}

}  // namespace anisoloc::specfun
