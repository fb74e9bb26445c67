#include "anisoloc/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "anisoloc/errors.hpp"

namespace anisoloc::quadrature {

Rule gauss_legendre(std::size_t n, double lo, double hi) {
    if (n == 0) throw DomainError("gauss_legendre: need at least one node");
    if (!(hi > lo)) throw DomainError("gauss_legendre: empty interval");
    Rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / static_cast<double>(k);
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::fabs(dz) < 1e-16) break;
        }
        // Recompute the derivative at the converged root.
        double p0 = 1.0, p1 = 0.0;
        for (std::size_t k = 1; k <= n; ++k) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / static_cast<double>(k);
        }
        dp = n * (z * p0 - p1) / (z * z - 1.0);
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = mid - half * z;
        rule.nodes[n - 1 - i] = mid + half * z;
        rule.weights[i] = rule.weights[n - 1 - i] = half * w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = mid;
    return rule;
}

}  // namespace anisoloc::quadrature
