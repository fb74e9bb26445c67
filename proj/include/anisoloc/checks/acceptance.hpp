#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace anisoloc::checks {

struct CriterionResult {
    int id;
    std::string title;
    bool passed;
    std::string detail;
    double seconds;
};

CriterionResult criterion_moments();
CriterionResult criterion_hypervolume();
CriterionResult criterion_eigenvalues();
CriterionResult criterion_operator_spectrum();
CriterionResult criterion_anisotropy_covariance();
CriterionResult criterion_resolution_of_identity();
CriterionResult criterion_figure1();
CriterionResult criterion_admissibility();
CriterionResult criterion_field_generator();

struct Criterion {
    int id;
    std::function<CriterionResult()> run;
};

const std::vector<Criterion>& acceptance_criteria();

// One "[PASS]"/"[FAIL]" line per criterion.
std::string format_result(const CriterionResult& r);

// Runs all criteria (or the listed ids), printing each line as it completes.
std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::vector<int>& only = {});

}  // namespace anisoloc::checks
