#include "anisoloc/figure1.hpp"

#include <filesystem>

#include "anisoloc/eigensystem.hpp"
#include "anisoloc/errors.hpp"
#include "anisoloc/fft.hpp"
#include "anisoloc/gridio.hpp"

namespace anisoloc {

namespace {

std::string tag(double eps) {
    if (eps == 0.15) return "0.15";
    if (eps == 0.5) return "0.5";
    if (eps == 1.0) return "1";
    return io::format_real(eps);
}

// Rows: coordinate, value along axis 1 through the origin, value along axis 2 through the origin.
template <class T, class F>
std::string slices(const Grid<T>& g, F&& value) {
    const std::size_t cx = g.geom.nx / 2, cy = g.geom.ny / 2;
    std::vector<std::vector<double>> rows;
    const std::size_t n = std::min(g.geom.nx, g.geom.ny);
    for (std::size_t i = 0; i < n; ++i)
        rows.push_back({g.geom.x(i), value(g.at(i, cy)), value(g.at(cx, i))});
    return io::csv({"coordinate", "axis1", "axis2"}, rows);
}

}  // namespace

GridGeometry figure1_space_geometry() { return centered_geometry(512, 512, 0.25, 0.25); }

std::vector<Figure1Panel> figure1_reproduction(const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir))
        throw FormatError("figure1: cannot create output directory '" + out_dir + "'");
    const MorseParams p(8.0, 3.0);
    const GridGeometry space = figure1_space_geometry();
    const GridGeometry freq = frequency_geometry(space);
    std::vector<Figure1Panel> panels;
    for (double eps : {0.15, 0.5, 1.0}) {
        const EigenSpec eig(0, p, AnisotropySpec::from_p_entries(1.0, 0.0, eps), ConcentrationLevel(2.0));
        const RealGrid F = eigenfunction_frequency_grid(eig, freq);
        const ComplexGrid S = eigenfunction_space_grid(eig, space);
        const std::filesystem::path dir(out_dir);
        Figure1Panel panel{eps,
                           (dir / ("fig1_space_eps" + tag(eps) + ".agrd")).string(),
                           (dir / ("fig1_freq_eps" + tag(eps) + ".agrd")).string(),
                           (dir / ("fig1_space_eps" + tag(eps) + "_slices.csv")).string(),
                           (dir / ("fig1_freq_eps" + tag(eps) + "_slices.csv")).string()};
        io::write_grid(panel.space_path, S);
        io::write_grid(panel.freq_path, F);
        io::write_text(panel.space_csv, slices(S, [](const std::complex<double>& v) { return v.real(); }));
        io::write_text(panel.freq_csv, slices(F, [](double v) { return v; }));
        panels.push_back(panel);
    }
    return panels;
}

}  // namespace anisoloc
