#pragma once

#include "anisoloc/grid.hpp"

namespace anisoloc {

// Samples of the continuous transform G(omega) = Int g(x) e^{-j omega.x} d^2x on
// frequency_geometry(g.geom). Requires even nx, ny. The space origin may be arbitrary.
ComplexGrid forward_ft(const ComplexGrid& g);
ComplexGrid forward_ft(const RealGrid& g);

// g(x) = (2 pi)^{-2} Sum G(omega_k) e^{j omega_k.x} domega on `space`; G must sit on
// frequency_geometry(space).
ComplexGrid inverse_ft(const ComplexGrid& G, const GridGeometry& space);

// Plain unnormalised 2-D DFT (sign -1 forward, +1 backward), row-major y outer.
void dft2(std::vector<std::complex<double>>& data, std::size_t nx, std::size_t ny, int sign);

}  // namespace anisoloc
