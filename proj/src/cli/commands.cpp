#include "anisoloc/cli.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "anisoloc/checks/acceptance.hpp"
#include "anisoloc/coherent.hpp"
#include "anisoloc/eigensystem.hpp"
#include "anisoloc/errors.hpp"
#include "anisoloc/fields.hpp"
#include "anisoloc/figure1.hpp"
#include "anisoloc/gridio.hpp"
#include "anisoloc/localisation_operator.hpp"
#include "anisoloc/region.hpp"
#include "anisoloc/transform.hpp"

namespace anisoloc::cli {

namespace {

namespace fs = std::filesystem;
using io::format_real;

const std::vector<std::string> kSubcommands = {"moments",         "state", "region", "eigenfun", "eigval",
                                               "kernel-spectrum", "cwt",   "icwt",   "genfield", "selfcheck",
                                               "figure1"};

AnisotropySpec spec_of(const RunConfig& c) {
    const bool any_h = c.h11 || c.h12 || c.h22;
    const bool any_p = c.p11 || c.p12 || c.p22;
    if (any_h && any_p) throw DomainError("give H entries (--h11/--h12/--h22) or P entries (--p11/--p12/--p22), not both");
    if (any_p) return AnisotropySpec::from_p_entries(c.p11.value_or(1.0), c.p12.value_or(0.0), c.p22.value_or(1.0));
    if (any_h) return AnisotropySpec::from_entries(c.h11.value_or(1.0), c.h12.value_or(0.0), c.h22.value_or(1.0));
    return AnisotropySpec();
}

bool grid_given(const RunConfig& c) { return c.nx != 0 || c.ny != 0 || c.dx != 0.0 || c.dy != 0.0; }

GridGeometry space_of(const RunConfig& c) {
    if (c.nx == 0 || c.ny == 0 || !(c.dx > 0.0) || !(c.dy > 0.0))
        throw DomainError("grid: --nx, --ny, --dx, --dy must all be given and positive");
    return centered_geometry(c.nx, c.ny, c.dx, c.dy);
}

IndexLattice lattice_of(const RunConfig& c) {
    IndexLattice lat;
    lat.a_lo = c.a_lo;
    lat.a_hi = c.a_hi;
    lat.log_step = c.log_step;
    lat.b_step_factor = c.b_step;
    lat.b_extent = c.b_extent;
    return lat;
}

KernelForm form_of(const std::string& s) {
    if (s == "difference") return KernelForm::DifferenceFrequency;
    if (s == "as-printed") return KernelForm::AsPrinted;
    throw DomainError("--kernel-form must be 'difference' or 'as-printed', got '" + s + "'");
}

QuadratureSpec quadrature_of(const RunConfig& c, const MorseParams& p, const ConcentrationLevel& C) {
    QuadratureSpec q = default_quadrature(p, C);
    q.n_nu = c.n_nu;
    q.n_a = c.n_a;
    q.n_b = c.n_b;
    return q;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

void require_out(const RunConfig& c) { require(!c.out.empty(), c.subcommand + ": --out is required"); }

std::string slice_name(std::size_t k) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "slice_%04zu.agrd", k);
    return buf;
}

std::vector<std::vector<double>> read_csv_rows(const std::string& path, std::size_t columns) {
    std::ifstream f(path);
    if (!f) throw FormatError("cannot open '" + path + "'");
    std::string line;
    std::getline(f, line);  // header
    std::vector<std::vector<double>> rows;
    std::size_t lineno = 1;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw FormatError(path + ":" + std::to_string(lineno) + ": not a number: '" + cell + "'");
            }
        }
        if (row.size() != columns)
            throw FormatError(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(columns) +
                              " columns, found " + std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.out.empty())
        out << text;
    else
        io::write_text(c.out, text);
}

// ---- subcommands ----

int cmd_moments(const RunConfig& c, std::ostream& out) {
    const MorseParams p(c.beta, c.gamma);
    const AnisotropySpec spec = spec_of(c);
    const MorseConstants k = constants(p);
    const LocalIndex xi(c.a, c.theta, Vec2(c.b1, c.b2));
    const MeanPosition mp = mean_position(p, spec, xi);
    out << "beta=" << format_real(p.beta()) << "\n"
        << "gamma=" << format_real(p.gamma()) << "\n"
        << "r=" << format_real(k.r) << "\n"
        << "omega0=" << format_real(peak_frequency(p)) << "\n"
        << "C3=" << format_real(k.C3) << "\n"
        << "C4=" << format_real(k.C4) << "\n"
        << "E3=" << format_real(k.E3) << "\n"
        << "E4=" << format_real(k.E4) << "\n"
        << "A=" << format_real(k.A) << "\n"
        << "C_H=" << format_real(admissibility_constant(p)) << "\n"
        << "C_HA=" << format_real(radial_normalization(p.r())) << "\n"
        << "energy=" << format_real(energy(p, spec, xi)) << "\n"
        << "mean_frequency=" << format_real(mean_frequency(p, xi)) << "\n"
        << "mean_y1=" << format_real(mp.y[0]) << "\n"
        << "mean_y2=" << format_real(mp.y[1]) << "\n"
        << "mean_x1=" << format_real(mp.x[0]) << "\n"
        << "mean_x2=" << format_real(mp.x[1]) << "\n";
    return kOk;
}

int cmd_state(const RunConfig& c, std::ostream& out) {
    const MorseParams p(c.beta, c.gamma);
    const GridGeometry freq = frequency_geometry(space_of(c));
    const ComplexGrid g = coherent_state_freq_grid(p, spec_of(c), LocalIndex(c.a, c.theta, Vec2(c.b1, c.b2)), freq);
    io::write_grid(c.out, g);
    out << "wrote " << c.out << " (" << freq.nx << "x" << freq.ny << " frequency grid)\n";
    return kOk;
}

int cmd_region(const RunConfig& c, std::ostream& out) {
    const MorseParams p(c.beta, c.gamma);
    if (c.boundary != 0) {
        require(c.C.size() == 1, "region --boundary takes a single --C value");
        const auto pts = region_boundary_samples(p, ConcentrationLevel(c.C[0]), c.boundary);
        std::vector<std::vector<double>> rows;
        for (const auto& b : pts) rows.push_back({b.y, b.nu});
        emit(c, io::csv({"y", "nu"}, rows), out);
        return kOk;
    }
    for (double cv : c.C) {
        const ConcentrationLevel C(cv);
        const NuBounds nb = nu_bounds(p, C);
        out << "C=" << format_real(cv) << "\n"
            << "nu_min=" << format_real(nb.nu_min) << "\n"
            << "nu_max=" << format_real(nb.nu_max) << "\n"
            << "area=" << format_real(area_C(C)) << "\n"
            << "hypervolume=" << format_real(hypervolume(p, C)) << "\n"
            << "phase_space_volume=" << format_real(phase_space_volume(p, C)) << "\n";
    }
    return kOk;
}

int cmd_eigenfun(const RunConfig& c, std::ostream& out) {
    const MorseParams p(c.beta, c.gamma);
    const EigenSpec eig(c.n, p, spec_of(c), ConcentrationLevel(c.C[0]));
    const GridGeometry space = grid_given(c) ? space_of(c) : default_space_grid(eig);
    const ComplexGrid psi = eigenfunction_space_grid(eig, space);
    const RealGrid F = eigenfunction_frequency_grid(eig, frequency_geometry(space));
    io::write_grid(c.out + "_freq.agrd", F);
    io::write_grid(c.out + "_space.agrd", psi);
    out << "lambda=" << format_real(eigenvalue(c.n, p.r(), eig.C)) << "\n"
        << "freq=" << c.out << "_freq.agrd\n"
        << "space=" << c.out << "_space.agrd\n";
    return kOk;
}

int cmd_eigval(const RunConfig& c, std::ostream& out) {
    const MorseParams p(c.beta, c.gamma);
    std::vector<std::vector<double>> rows;
    for (double cv : c.C)
        for (int n = 0; n <= c.nmax; ++n) rows.push_back({double(n), cv, eigenvalue(n, p.r(), ConcentrationLevel(cv))});
    emit(c, io::csv({"n", "C", "lambda"}, rows), out);
    return kOk;
}

int cmd_kernel_spectrum(const RunConfig& c, std::ostream& out) {
    const MorseParams p(c.beta, c.gamma);
    std::vector<std::vector<double>> rows;
    for (double cv : c.C) {
        const ConcentrationLevel C(cv);
        const KernelMatrix K = build_kernel_matrix(p, C, quadrature_of(c, p, C), form_of(c.kernel_form));
        if (!c.dump_kernel.empty()) {
            const std::size_t n = K.nodes.size();
            RealGrid m(GridGeometry{n, n, 1.0, 1.0, Vec2::Zero()});
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.at(j, i) = K.M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            io::write_grid(c.C.size() == 1 ? c.dump_kernel : c.dump_kernel + "_C" + format_real(cv) + ".agrd", m);
        }
        const auto pairs = kernel_spectrum(K, static_cast<std::size_t>(c.nmax) + 1);
        for (int n = 0; n <= c.nmax; ++n) {
            const auto& pr = pairs[static_cast<std::size_t>(n)];
            const double lam = eigenvalue(n, p.r(), C);
            rows.push_back({double(n), cv, pr.lambda, lam, std::fabs(pr.lambda - lam) / lam,
                            eigenvector_alignment(K, pr, n)});
        }
    }
    emit(c, io::csv({"n", "C", "lambda_hat", "lambda", "rel_error", "alignment"}, rows), out);
    return kOk;
}

int cmd_cwt(const RunConfig& c, std::ostream& out) {
    const MorseParams p(c.beta, c.gamma);
    const AnisotropySpec spec = spec_of(c);
    const ComplexGrid g = io::read_complex_grid(c.in);
    const IndexQuadrature q = lattice_index_quadrature(p, lattice_of(c));
    const LatticeCoefficients w = analyze_lattice(g, p, spec, q);
    fs::create_directories(c.out);
    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < q.size(); ++k) {
        io::write_grid((fs::path(c.out) / slice_name(k)).string(), w.slices[k]);
        rows.push_back({double(k), q[k].a, q[k].theta, q[k].weight, q[k].bweights.front()});
    }
    io::write_text((fs::path(c.out) / "index.csv").string(), io::csv({"slice", "a", "theta", "weight", "bweight"}, rows));
    out << "wrote " << q.size() << " slices and index.csv to " << c.out << "\n";
    return kOk;
}

int cmd_icwt(const RunConfig& c, std::ostream& out) {
    const MorseParams p(c.beta, c.gamma);
    const AnisotropySpec spec = spec_of(c);
    std::optional<ComplexGrid> reference;
    if (!c.reference.empty()) reference = io::read_complex_grid(c.reference);
    const GridGeometry space = !c.like.empty() ? io::read_complex_grid(c.like).geom : reference->geom;
    const auto rows = read_csv_rows((fs::path(c.in) / "index.csv").string(), 5);
    require(!rows.empty(), "icwt: index.csv lists no slices");
    LatticeCoefficients coeffs{space, {}, {}};
    for (const auto& r : rows) {
        ComplexGrid s = io::read_complex_grid((fs::path(c.in) / slice_name(static_cast<std::size_t>(r[0]))).string());
        ScaleNode node{r[1], r[2], r[3], s.geom, std::vector<double>(s.geom.size(), r[4])};
        coeffs.nodes.push_back(std::move(node));
        coeffs.slices.push_back(std::move(s));
    }
    const Reconstruction rec = synthesize(coeffs, p, spec, space, reference ? &*reference : nullptr);
    io::write_grid(c.out, rec.field);
    out << "wrote " << c.out << "\n";
    if (rec.relative_error) out << "relative_l2_error=" << format_real(*rec.relative_error) << "\n";
    return kOk;
}

int cmd_genfield(const RunConfig& c, std::ostream& out) {
    const CovarianceSpec cov(parse_family(c.family), c.scale, spec_of(c));
    const GridGeometry geom{c.nx, c.ny, c.dx, c.dy, Vec2::Zero()};
    io::write_grid(c.out, generate(cov, geom, c.seed));
    out << "wrote " << c.out << "\n";
    return kOk;
}

int cmd_selfcheck(const RunConfig& c, std::ostream& out) {
    const auto results = checks::run_acceptance(out, c.only);
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    out << passed << "/" << results.size() << " acceptance criteria passed\n";
    return passed == results.size() ? kOk : kNumerical;
}

int cmd_figure1(const RunConfig& c, std::ostream& out) {
    for (const auto& panel : figure1_reproduction(c.out))
        out << "eps=" << format_real(panel.epsilon) << " space=" << panel.space_path << " freq=" << panel.freq_path
            << " space_csv=" << panel.space_csv << " freq_csv=" << panel.freq_csv << "\n";
    return kOk;
}

// ---- option wiring ----

void add_morse(CLI::App* s, RunConfig& c) {
    s->add_option("--beta", c.beta, "decay exponent beta")->capture_default_str();
    s->add_option("--gamma", c.gamma, "frequency power gamma")->capture_default_str();
}

void add_aniso(CLI::App* s, RunConfig& c) {
    auto* h11 = s->add_option("--h11", c.h11, "H entry (1,1)");
    auto* h12 = s->add_option("--h12", c.h12, "H entry (1,2)");
    auto* h22 = s->add_option("--h22", c.h22, "H entry (2,2)");
    for (auto* p : {s->add_option("--p11", c.p11, "P entry (1,1)"), s->add_option("--p12", c.p12, "P entry (1,2)"),
                    s->add_option("--p22", c.p22, "P entry (2,2)")})
        for (auto* h : {h11, h12, h22}) p->excludes(h);
}

void add_grid(CLI::App* s, RunConfig& c) {
    s->add_option("--nx", c.nx, "grid samples along x1");
    s->add_option("--ny", c.ny, "grid samples along x2");
    s->add_option("--dx", c.dx, "grid spacing along x1");
    s->add_option("--dy", c.dy, "grid spacing along x2");
}

void add_index(CLI::App* s, RunConfig& c) {
    s->add_option("--a", c.a, "scale a")->capture_default_str();
    s->add_option("--theta", c.theta, "rotation angle (radians)")->capture_default_str();
    s->add_option("--b1", c.b1, "shift b1")->capture_default_str();
    s->add_option("--b2", c.b2, "shift b2")->capture_default_str();
}

void add_lattice(CLI::App* s, RunConfig& c) {
    s->add_option("--a-lo", c.a_lo, "smallest scale")->capture_default_str();
    s->add_option("--a-hi", c.a_hi, "largest scale")->capture_default_str();
    s->add_option("--log-step", c.log_step, "log-scale step h")->capture_default_str();
    s->add_option("--b-step", c.b_step, "b spacing as a multiple of a")->capture_default_str();
    s->add_option("--b-extent", c.b_extent, "b half-width in units of a^{1-1/gamma}")->capture_default_str();
}

void add_C(CLI::App* s, RunConfig& c) {
    s->add_option("--C", c.C, "concentration level(s) C >= 1")->delimiter(',')->expected(1, -1)->capture_default_str();
}

void build_app(CLI::App& app, RunConfig& c) {
    app.require_subcommand(1);
    app.add_option("--threads", c.threads, "cap on worker threads (0 = runtime default)");

    auto* m = app.add_subcommand("moments", "shape constants and closed-form moments");
    add_morse(m, c);
    add_aniso(m, c);
    add_index(m, c);

    auto* st = app.add_subcommand("state", "coherent state on the frequency lattice of a space grid");
    add_morse(st, c);
    add_aniso(st, c);
    add_index(st, c);
    add_grid(st, c);
    st->add_option("--out", c.out, "output grid file");

    auto* rg = app.add_subcommand("region", "frequency bounds, area and hypervolume");
    add_morse(rg, c);
    add_C(rg, c);
    rg->add_option("--boundary", c.boundary, "emit n boundary samples (y, nu) as CSV");
    rg->add_option("--out", c.out, "CSV output file (default stdout)");

    auto* ef = app.add_subcommand("eigenfun", "eigenfunction grids in frequency and space");
    add_morse(ef, c);
    add_aniso(ef, c);
    add_C(ef, c);
    add_grid(ef, c);
    ef->add_option("--n", c.n, "eigenfunction order")->capture_default_str();
    ef->add_option("--out", c.out, "output prefix");

    auto* ev = app.add_subcommand("eigval", "eigenvalue table as CSV");
    add_morse(ev, c);
    add_C(ev, c);
    ev->add_option("--nmax", c.nmax, "largest order")->capture_default_str();
    ev->add_option("--out", c.out, "CSV output file (default stdout)");

    auto* ks = app.add_subcommand("kernel-spectrum", "Nystrom spectrum of the radial operator");
    add_morse(ks, c);
    add_C(ks, c);
    ks->add_option("--nmax", c.nmax, "largest order")->capture_default_str();
    ks->add_option("--n-nu", c.n_nu, "kernel nodes")->capture_default_str();
    ks->add_option("--n-a", c.n_a, "Gauss-Legendre order in a")->capture_default_str();
    ks->add_option("--n-b", c.n_b, "Gauss-Legendre order in b")->capture_default_str();
    ks->add_option("--kernel-form", c.kernel_form, "difference | as-printed")->capture_default_str();
    ks->add_option("--dump-kernel", c.dump_kernel, "write the symmetric matrix as a grid file");
    ks->add_option("--out", c.out, "CSV output file (default stdout)");

    auto* cw = app.add_subcommand("cwt", "analysis on a log-scale index lattice");
    add_morse(cw, c);
    add_aniso(cw, c);
    add_lattice(cw, c);
    cw->add_option("--in", c.in, "input grid file");
    cw->add_option("--out", c.out, "output directory");

    auto* ic = app.add_subcommand("icwt", "synthesis from cwt output");
    add_morse(ic, c);
    add_aniso(ic, c);
    ic->add_option("--in", c.in, "directory written by cwt");
    ic->add_option("--like", c.like, "grid file whose geometry the output takes");
    ic->add_option("--reference", c.reference, "grid file to measure the reconstruction error against");
    ic->add_option("--out", c.out, "output grid file");

    auto* gf = app.add_subcommand("genfield", "stationary Gaussian field with anisotropic covariance");
    add_aniso(gf, c);
    add_grid(gf, c);
    gf->add_option("--family", c.family, "gaussian-decay | exponential-decay")->capture_default_str();
    gf->add_option("--scale", c.scale, "covariance length scale")->capture_default_str();
    gf->add_option("--seed", c.seed, "random seed")->capture_default_str();
    gf->add_option("--out", c.out, "output grid file");

    auto* sc = app.add_subcommand("selfcheck", "run the acceptance suite");
    sc->add_option("--only", c.only, "criterion ids to run")->delimiter(',');

    auto* f1 = app.add_subcommand("figure1", "n = 0 eigenfunction panels for P = diag(1, eps)");
    f1->add_option("--out", c.out, "output directory");
}

}  // namespace

void validate(const RunConfig& c) {
    require(std::find(kSubcommands.begin(), kSubcommands.end(), c.subcommand) != kSubcommands.end(),
            "unknown subcommand '" + c.subcommand + "'");
    require(c.threads >= 0, "--threads must be >= 0");
    const std::string& s = c.subcommand;
    if (s == "selfcheck") {
        for (int id : c.only) require(id >= 1 && id <= 9, "--only ids must be in 1..9");
        return;
    }
    if (s == "figure1") {
        require_out(c);
        return;
    }
    if (s == "genfield") {
        require_out(c);
        const CovarianceSpec cov(parse_family(c.family), c.scale, spec_of(c));
        const GridGeometry geom{c.nx, c.ny, c.dx, c.dy, Vec2::Zero()};
        validate_geometry(geom);
        spectral_density(cov, geom);  // embedding precondition
        return;
    }
    const MorseParams p(c.beta, c.gamma);
    spec_of(c);
    require(!c.C.empty(), "--C needs at least one value");
    for (double cv : c.C) ConcentrationLevel{cv};
    if (s == "moments") {
        LocalIndex(c.a, c.theta, Vec2(c.b1, c.b2));
        admissibility_constant(p);
    } else if (s == "state") {
        require_out(c);
        LocalIndex(c.a, c.theta, Vec2(c.b1, c.b2));
        space_of(c);
    } else if (s == "region") {
        require(c.boundary == 0 || c.boundary >= 8, "--boundary needs n >= 8");
    } else if (s == "eigenfun") {
        require_out(c);
        require(c.n >= 0, "--n must be >= 0");
        if (grid_given(c)) space_of(c);
    } else if (s == "eigval") {
        require(c.nmax >= 0, "--nmax must be >= 0");
    } else if (s == "kernel-spectrum") {
        require(c.nmax >= 0, "--nmax must be >= 0");
        require(static_cast<std::size_t>(c.nmax) < c.n_nu, "--nmax must be below --n-nu");
        form_of(c.kernel_form);
        for (double cv : c.C) {
            require(cv > 1.0, "kernel-spectrum needs C > 1");
            validate_quadrature(quadrature_of(c, p, ConcentrationLevel(cv)), p, ConcentrationLevel(cv));
        }
    } else if (s == "cwt") {
        require_out(c);
        require(!c.in.empty(), "cwt: --in is required");
        lattice_index_quadrature(p, lattice_of(c));
    } else if (s == "icwt") {
        require_out(c);
        require(!c.in.empty(), "icwt: --in is required");
        require(!c.like.empty() || !c.reference.empty(), "icwt: --like or --reference is required");
    }
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        if (c.threads > 0) omp_set_num_threads(c.threads);
        const std::string& s = c.subcommand;
        if (s == "moments") return cmd_moments(c, out);
        if (s == "state") return cmd_state(c, out);
        if (s == "region") return cmd_region(c, out);
        if (s == "eigenfun") return cmd_eigenfun(c, out);
        if (s == "eigval") return cmd_eigval(c, out);
        if (s == "kernel-spectrum") return cmd_kernel_spectrum(c, out);
        if (s == "cwt") return cmd_cwt(c, out);
        if (s == "icwt") return cmd_icwt(c, out);
        if (s == "genfield") return cmd_genfield(c, out);
        if (s == "selfcheck") return cmd_selfcheck(c, out);
        if (s == "figure1") return cmd_figure1(c, out);
        err << "error: unknown subcommand '" << s << "'\n";
        return kValidation;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return kNumerical;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::invalid_argument& e) {
        err << "precondition error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "i/o error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Geometrically anisotropic localisation operators"};
    build_app(app, c);
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kValidation;
    }
    c.subcommand = app.get_subcommands().front()->get_name();
    try {
        validate(c);
    } catch (const std::exception& e) {
        err << "invalid configuration: " << e.what() << "\n";
        return kValidation;
    }
    return dispatch(c, out, err);
}

}  // namespace anisoloc::cli
