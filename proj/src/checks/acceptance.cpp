#include "anisoloc/checks/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <unistd.h>

#include "anisoloc/checks/oracles.hpp"
#include "anisoloc/coherent.hpp"
#include "anisoloc/eigensystem.hpp"
#include "anisoloc/errors.hpp"
#include "anisoloc/fft.hpp"
#include "anisoloc/fields.hpp"
#include "anisoloc/figure1.hpp"
#include "anisoloc/gridio.hpp"
#include "anisoloc/localisation_operator.hpp"
#include "anisoloc/region.hpp"
#include "anisoloc/transform.hpp"

namespace anisoloc::checks {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double v) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(2) << v;
    return s.str();
}

std::string fix(double v, int digits = 6) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

template <class F>
CriterionResult timed(int id, std::string title, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r{id, std::move(title), false, "", 0.0};
    try {
        body(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// Sum over the grid of coord^2 |v|^2 / Sum |v|^2 along one axis.
template <class T, class F>
double second_moment(const Grid<T>& g, bool axis2, F&& mag2) {
    double num = 0.0, den = 0.0;
    for (std::size_t iy = 0; iy < g.geom.ny; ++iy)
        for (std::size_t ix = 0; ix < g.geom.nx; ++ix) {
            const double c = axis2 ? g.geom.y(iy) : g.geom.x(ix);
            const double m = mag2(g.at(ix, iy));
            num += c * c * m;
            den += m;
        }
    return num / den;
}

}  // namespace

CriterionResult criterion_moments() {
    return timed(1, "Moment closed forms", [](CriterionResult& r) {
        const AnisotropySpec spec = AnisotropySpec::from_p_entries(1.0, 0.3, 0.6);
        double worst = 0.0;
        std::string where;
        for (auto [beta, gamma] : {std::pair{2.0, 1.0}, {4.0, 2.0}, {8.0, 3.0}}) {
            const MorseParams p(beta, gamma);
            for (double a : {0.5, 1.0, 2.0}) {
                const LocalIndex xi(a, 0.7, Vec2(0.35, -0.2));
                const MomentOracle q = moments_by_quadrature(p, spec, xi);
                const MeanPosition mp = mean_position(p, spec, xi);
                const double errs[] = {rel(q.energy, energy(p, spec, xi)),
                                       rel(q.mean_frequency, mean_frequency(p, xi)), rel(q.mean_y[0], mp.y[0]),
                                       rel(q.mean_y[1], mp.y[1])};
                for (double e : errs)
                    if (e > worst) {
                        worst = e;
                        where = "(" + fix(beta, 0) + "," + fix(gamma, 0) + "), a=" + fix(a, 1);
                    }
            }
        }
        r.passed = worst <= 1e-6;
        r.detail = "max rel err " + sci(worst) + " at " + where + " (tol 1e-6)";
    });
}

CriterionResult criterion_hypervolume() {
    return timed(2, "Hypervolume A(beta,gamma) Area(C)", [](CriterionResult& r) {
        double worst = 0.0, ratio_spread = 0.0;
        for (auto [beta, gamma] : {std::pair{8.0, 3.0}, {4.0, 2.0}}) {
            const MorseParams p(beta, gamma);
            const double A = constants(p).A;
            for (double c : {1.5, 2.0, 4.0}) {
                const ConcentrationLevel C(c);
                worst = std::max(worst, rel(hypervolume_by_quadrature(p, C), hypervolume(p, C)));
                ratio_spread = std::max(ratio_spread, rel(hypervolume(p, C) / area_C(C), A));
            }
        }
        const double area1 = area_C(ConcentrationLevel(1.0));
        r.passed = worst <= 1e-6 && area1 == 0.0 && ratio_spread <= 1e-10;
        r.detail = "max rel err " + sci(worst) + " (tol 1e-6); Area(1) = " + sci(area1) + "; A ratio spread " +
                   sci(ratio_spread) + " (tol 1e-10)";
    });
}

CriterionResult criterion_eigenvalues() {
    return timed(3, "Eigenvalues I_x0(n+1, r-1)", [](CriterionResult& r) {
        double worst = 0.0;
        bool monotone_n = true, monotone_c = true, unit_limit = true, zero_at_one = true;
        for (double rr : {3.0, 17.0 / 3.0}) {
            for (double c : {1.5, 3.0, 10.0})
                for (int n = 0; n <= 10; ++n) {
                    const double lam = eigenvalue(n, rr, ConcentrationLevel(c));
                    worst = std::max(worst, rel(lam, eigenvalue_by_quadrature(n, rr, c)));
                    if (n > 0 && !(lam < eigenvalue(n - 1, rr, ConcentrationLevel(c)))) monotone_n = false;
                }
            for (int n = 0; n <= 10; ++n) {
                double prev = eigenvalue(n, rr, ConcentrationLevel(1.0));
                if (prev != 0.0) zero_at_one = false;
                for (double c : {1.1, 1.5, 2.0, 3.0, 10.0, 100.0}) {
                    const double lam = eigenvalue(n, rr, ConcentrationLevel(c));
                    if (!(lam > prev)) monotone_c = false;
                    prev = lam;
                }
                if (!(1.0 - eigenvalue(n, rr, ConcentrationLevel(1e6)) < 1e-6)) unit_limit = false;
            }
        }
        const double lam0 = eigenvalue(0, 17.0 / 3.0, ConcentrationLevel(3.0));
        const double exact = 1.0 - std::pow(2.0, -14.0 / 3.0);
        const double e0 = rel(lam0, exact);
        r.passed = worst <= 1e-10 && e0 <= 1e-13 && monotone_n && monotone_c && unit_limit && zero_at_one;
        r.detail = "max rel err vs quadrature " + sci(worst) + " (tol 1e-10); lambda0(C=3) = " + fix(lam0, 9) +
                   " vs 1-2^(-14/3) (rel " + sci(e0) + "); decreasing in n: " + (monotone_n ? "yes" : "no") +
                   ", increasing in C: " + (monotone_c ? "yes" : "no") + ", lambda(C=1)=0: " +
                   (zero_at_one ? "yes" : "no") + ", lambda(C=1e6)->1: " + (unit_limit ? "yes" : "no");
    });
}

CriterionResult criterion_operator_spectrum() {
    return timed(4, "Nystrom operator spectrum", [](CriterionResult& r) {
        const MorseParams p(8.0, 3.0);
        const ConcentrationLevel C(2.0);
        const KernelMatrix K = build_kernel_matrix(p, C, default_quadrature(p, C));
        const auto pairs = kernel_spectrum(K, 4);
        double worst = 0.0, min_align = 1.0;
        std::ostringstream d;
        for (int n = 0; n < 4; ++n) {
            const double lam = eigenvalue(n, p.r(), C);
            const double e = rel(pairs[static_cast<std::size_t>(n)].lambda, lam);
            const double al = eigenvector_alignment(K, pairs[static_cast<std::size_t>(n)], n);
            worst = std::max(worst, e);
            min_align = std::min(min_align, al);
            d << "n=" << n << ": " << fix(pairs[static_cast<std::size_t>(n)].lambda, 6) << " vs " << fix(lam, 6) << "; ";
        }
        r.passed = worst <= 0.01 && min_align >= 0.999;
        r.detail = d.str() + "max rel err " + sci(worst) + " (tol 1e-2), min alignment " + fix(min_align, 7) +
                   " (tol 0.999)";
    });
}

CriterionResult criterion_anisotropy_covariance() {
    return timed(5, "Anisotropic eigenfunction covariance", [](CriterionResult& r) {
        const MorseParams p(8.0, 3.0);
        const ConcentrationLevel C(2.0);
        const EigenSpec iso(0, p, AnisotropySpec(), C);
        // Isotropic reference on a grid twice as fine; y1 = x1 lands on its nodes.
        const GridGeometry fine = centered_geometry(1024, 1024, 0.125, 0.125);
        const ComplexGrid psi_i = eigenfunction_space_grid(iso, fine);
        double worst_freq = 0.0, worst_space = 0.0;
        for (double eps : {0.15, 0.5}) {
            const AnisotropySpec spec = AnisotropySpec::from_p_entries(1.0, 0.0, eps);
            const EigenSpec eig(0, p, spec, C);
            const GridGeometry space = centered_geometry(512, 1024, 0.25, 0.25);
            const GridGeometry freq = frequency_geometry(space);
            const RealGrid F = eigenfunction_frequency_grid(eig, freq);
            double fmax = 0.0;
            for (double v : F.values) fmax = std::max(fmax, std::fabs(v));
            for (std::size_t iy = 0; iy < freq.ny; ++iy)
                for (std::size_t ix = 0; ix < freq.nx; ++ix) {
                    const Vec2 w = freq.point(ix, iy);
                    const double ref = aniso_eigenfunction_freq(iso, spec.Q().transpose() * w);
                    worst_freq = std::max(worst_freq, std::fabs(F.at(ix, iy) - ref) / fmax);
                }
            const ComplexGrid psi_h = eigenfunction_space_grid(eig, space);
            double hmax = 0.0;
            for (const auto& v : psi_h.values) hmax = std::max(hmax, std::abs(v));
            for (std::size_t ix = 0; ix < space.nx; ++ix) {
                // Column of the fine isotropic grid at y1 = x1.
                const double x1 = space.x(ix);
                const auto fx = static_cast<std::size_t>(std::lround((x1 - fine.origin.x()) / fine.dx));
                std::vector<double> column(fine.ny);
                for (std::size_t j = 0; j < fine.ny; ++j) column[j] = psi_i.at(fx, j).real();
                for (std::size_t iy = 0; iy < space.ny; ++iy) {
                    const double y2 = eps * space.y(iy);
                    const double ref = spec.detP() * lagrange6(column, fine.origin.y(), fine.dy, y2);
                    worst_space = std::max(worst_space, std::abs(psi_h.at(ix, iy) - ref) / hmax);
                }
            }
        }
        r.passed = worst_freq <= 1e-12 && worst_space <= 1e-3;
        r.detail = "frequency identity max err " + sci(worst_freq) + " (tol 1e-12); space |P| psi_I(Px) max err " +
                   sci(worst_space) + " of peak (tol 1e-3)";
    });
}

CriterionResult criterion_resolution_of_identity() {
    return timed(6, "Resolution of identity (desk scale)", [](CriterionResult& r) {
        const MorseParams p(8.0, 3.0);
        const AnisotropySpec spec = AnisotropySpec::from_p_entries(1.0, 0.0, 0.5);
        const GridGeometry space = centered_geometry(256, 256, 0.5, 0.5);
        ComplexGrid g(space);
        const std::vector<std::pair<LocalIndex, double>> parts = {{LocalIndex(1.0, 0.0, Vec2(0.0, 0.0)), 1.0},
                                                                  {LocalIndex(0.7, 0.0, Vec2(0.5, -0.3)), 0.7},
                                                                  {LocalIndex(1.5, 0.0, Vec2(-0.4, 0.3)), -0.5}};
        for (const auto& [xi, wgt] : parts) {
            const ComplexGrid v = coherent_state_grid(p, spec, xi, space);
            for (std::size_t k = 0; k < g.values.size(); ++k) g.values[k] += wgt * v.values[k];
        }
        auto run = [&](double h, double delta) {
            IndexLattice lat;
            lat.a_lo = 0.01;
            lat.a_hi = 100.0;
            lat.log_step = h;
            lat.b_step_factor = delta;
            lat.b_extent = 4.0;
            const LatticeCoefficients w = analyze_lattice(g, p, spec, lattice_index_quadrature(p, lat));
            return *synthesize(w, p, spec, space, &g).relative_error;
        };
        const double e1 = run(1.0, 0.2);
        const double e2 = run(0.5, 0.1);
        r.passed = e1 <= 0.05 && e2 < e1;
        r.detail = "L2 rel err " + fix(100.0 * e1, 3) + "% at default sampling (tol 5%), " + fix(100.0 * e2, 3) +
                   "% at doubled density";
    });
}

CriterionResult criterion_figure1() {
    return timed(7, "Figure 1 reproduction", [](CriterionResult& r) {
        const std::filesystem::path dir =
            std::filesystem::temp_directory_path() / ("anisoloc_fig1_" + std::to_string(::getpid()));
        const auto panels = figure1_reproduction(dir.string());
        const MorseParams p(8.0, 3.0);
        std::vector<ComplexGrid> space;
        std::vector<RealGrid> freq;
        for (const auto& panel : panels) {
            space.push_back(std::get<ComplexGrid>(io::read_grid(panel.space_path)));
            freq.push_back(std::get<RealGrid>(io::read_grid(panel.freq_path)));
        }
        // Isotropic Morse n = 0 wavelet evaluated directly on |omega|.
        const GridGeometry fg = freq.back().geom;
        ComplexGrid iso_f(fg);
        double iso_err_f = 0.0, fmax = 0.0;
        for (std::size_t iy = 0; iy < fg.ny; ++iy)
            for (std::size_t ix = 0; ix < fg.nx; ++ix) {
                const double v = radial_eigenfunction(0, p, fg.point(ix, iy).norm());
                iso_f.at(ix, iy) = v;
                fmax = std::max(fmax, std::fabs(v));
                iso_err_f = std::max(iso_err_f, std::fabs(freq.back().at(ix, iy) - v));
            }
        iso_err_f /= fmax;
        const ComplexGrid iso_s = inverse_ft(iso_f, space.back().geom);
        double iso_err_s = 0.0, smax = 0.0;
        for (std::size_t k = 0; k < iso_s.values.size(); ++k) {
            smax = std::max(smax, std::abs(iso_s.values[k]));
            iso_err_s = std::max(iso_err_s, std::abs(space.back().values[k] - iso_s.values[k]));
        }
        iso_err_s /= smax;
        // Independent Hankel-transform values along the x1 axis.
        double hankel_err = 0.0;
        const GridGeometry sg = space.back().geom;
        for (std::size_t ix = sg.nx / 2; ix < sg.nx; ix += 8) {
            const double h = hankel_eigenfunction(p, 0, std::fabs(sg.x(ix)));
            hankel_err = std::max(hankel_err, std::abs(space.back().at(ix, sg.ny / 2) - h));
        }
        hankel_err /= smax;
        auto m2 = [](const std::complex<double>& v) { return std::norm(v); };
        auto m2r = [](double v) { return v * v; };
        const double sx_ref = second_moment(space.back(), true, m2);
        const double fw_ref = second_moment(freq.back(), true, m2r);
        double worst = 0.0;
        std::ostringstream d;
        for (std::size_t i = 0; i + 1 < panels.size(); ++i) {
            const double eps = panels[i].epsilon;
            const double rs = second_moment(space[i], true, m2) / sx_ref;
            const double rf = second_moment(freq[i], true, m2r) / fw_ref;
            worst = std::max({worst, rel(rs, 1.0 / (eps * eps)), rel(rf, eps * eps)});
            d << "eps=" << eps << ": x2 ratio " << fix(rs, 3) << " (1/eps^2=" << fix(1.0 / (eps * eps), 3)
              << "), w2 ratio " << fix(rf, 5) << "; ";
        }
        std::filesystem::remove_all(dir);
        r.passed = panels.size() == 3 && iso_err_f <= 1e-12 && iso_err_s <= 1e-12 && hankel_err <= 1e-6 && worst <= 0.05;
        r.detail = "6 grids parsed; P=I vs isotropic wavelet: freq " + sci(iso_err_f) + ", space " + sci(iso_err_s) +
                   ", Hankel " + sci(hankel_err) + "; " + d.str() + "max ratio err " + sci(worst) + " (tol 5e-2)";
    });
}

CriterionResult criterion_admissibility() {
    return timed(8, "Admissibility constant", [](CriterionResult& r) {
        double worst = 0.0;
        for (auto [beta, gamma] : {std::pair{8.0, 3.0}, {4.0, 2.0}}) {
            const MorseParams p(beta, gamma);
            const double q = inverse_admissibility_by_quadrature(p);
            worst = std::max(worst, rel(q, 1.0 / admissibility_constant(p)));
        }
        int diverged = 0;
        for (double gamma : {3.0, 2.0}) {
            try {
                admissibility_constant(0.5 * (gamma - 1.0), gamma);
            } catch (const DivergenceError&) {
                ++diverged;
            }
        }
        r.passed = worst <= 1e-8 && diverged == 2;
        r.detail = "max rel err of 4 pi/(r-1) vs quadrature " + sci(worst) + " (tol 1e-8); divergence reported " +
                   std::to_string(diverged) + "/2";
    });
}

CriterionResult criterion_field_generator() {
    return timed(9, "Anisotropic field generator", [](CriterionResult& r) {
        const double eps = 0.01, scale = 1.0;
        const CovarianceSpec c(CovarianceFamily::GaussianDecay, scale, AnisotropySpec::from_entries(1.0, 0.0, eps * eps));
        const GridGeometry geom{128, 128, 0.1 * scale, 10.0 * scale, Vec2::Zero()};
        std::vector<RealGrid> fields;
        for (std::uint64_t seed = 1; seed <= 50; ++seed) fields.push_back(generate(c, geom, seed));
        const double lx = correlation_length(fields, true);
        const double ly = correlation_length(fields, false);
        const double ratio = ly / lx;
        r.passed = std::fabs(ratio * eps - 1.0) <= 0.2;
        r.detail = "correlation lengths x1 " + fix(lx, 4) + ", x2 " + fix(ly, 3) + "; ratio " + fix(ratio, 3) +
                   " vs 1/eps = 100 (tol 20%)";
    });
}

const std::vector<Criterion>& acceptance_criteria() {
    static const std::vector<Criterion> all = {
        {1, criterion_moments},           {2, criterion_hypervolume},
        {3, criterion_eigenvalues},       {4, criterion_operator_spectrum},
        {5, criterion_anisotropy_covariance}, {6, criterion_resolution_of_identity},
        {7, criterion_figure1},           {8, criterion_admissibility},
        {9, criterion_field_generator},
    };
    return all;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream s;
    s << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << ": " << r.detail << " ("
      << std::fixed << std::setprecision(1) << r.seconds << " s)";
    return s.str();
}

std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::vector<int>& only) {
    std::vector<CriterionResult> results;
    for (const Criterion& c : acceptance_criteria()) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        results.push_back(c.run());
        out << format_result(results.back()) << std::endl;
    }
    return results;
}

}  // namespace anisoloc::checks
