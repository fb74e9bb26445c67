#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace anisoloc::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kNumerical = 3 };

// Raw command-line values; validated as a whole before any work starts.
struct RunConfig {
    std::string subcommand;

    double beta = 8.0;
    double gamma = 3.0;
    std::optional<double> h11, h12, h22;
    std::optional<double> p11, p12, p22;

    std::vector<double> C = {2.0};
    int n = 0;
    int nmax = 3;

    // Coherent-state index.
    double a = 1.0;
    double theta = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;

    // Space grid; 0 means "choose automatically" where the subcommand allows it.
    std::size_t nx = 0, ny = 0;
    double dx = 0.0, dy = 0.0;

    // Random fields.
    std::string family = "gaussian-decay";
    double scale = 1.0;
    std::uint64_t seed = 1;

    // Transform lattice.
    double a_lo = 0.01;
    double a_hi = 100.0;
    double log_step = 1.0;
    double b_step = 0.2;
    double b_extent = 4.0;

    // Kernel quadrature.
    std::size_t n_nu = 256;
    std::size_t n_a = 64;
    std::size_t n_b = 64;
    std::string kernel_form = "difference";
    std::string dump_kernel;

    std::size_t boundary = 0;
    std::vector<int> only;

    std::string in;
    std::string like;
    std::string reference;
    std::string out;
    int threads = 0;
};

// Checks every parameter the subcommand consumes; throws DomainError / PreconditionError.
void validate(const RunConfig& cfg);

// Runs a validated configuration. Returns an exit code; errors are reported on `err`.
int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv, validates, dispatches. Usage errors return 2.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace anisoloc::cli
