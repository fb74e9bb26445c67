#pragma once

#include <string>
#include <vector>

#include "anisoloc/grid.hpp"

namespace anisoloc {

struct Figure1Panel {
    double epsilon;           // P = diag(1, epsilon)
    std::string space_path;   // complex space-domain grid
    std::string freq_path;    // real frequency-domain grid
    std::string space_csv;    // slices through the origin along both axes
    std::string freq_csv;
};

// Panel geometry shared by all three epsilons.
GridGeometry figure1_space_geometry();

// n = 0 eigenfunctions for (beta, gamma) = (8, 3), P = diag(1, eps), eps in {0.15, 0.5, 1}.
std::vector<Figure1Panel> figure1_reproduction(const std::string& out_dir);

}  // namespace anisoloc
