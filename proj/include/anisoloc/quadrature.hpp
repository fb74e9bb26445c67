#pragma once

#include <cstddef>
#include <vector>

namespace anisoloc::quadrature {

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [lo, hi]. Nodes ascending.
Rule gauss_legendre(std::size_t n, double lo = -1.0, double hi = 1.0);

template <class F>
double integrate(const Rule& rule, F&& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(rule.nodes[i]);
    return s;
}

}  // namespace anisoloc::quadrature
