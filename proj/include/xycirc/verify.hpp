#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xyc {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

CriterionResult check_diagonalization();
CriterionResult check_gate_decompositions();
CriterionResult check_fourier_dft();
CriterionResult check_time_evolution();
CriterionResult check_tfd_gibbs();
CriterionResult check_critical_scaling();
CriterionResult check_log_linear_crossover();
CriterionResult check_coarse_graining(unsigned long long seed = 0xc0a5e);

/// Runs the full oracle suite, printing one pass/fail line per criterion.
/// Returns true when everything passed. The seed feeds the randomized
/// coarse-graining draws.
bool run_verification(std::ostream& out, unsigned long long seed = 0xc0a5e);

}  // namespace xyc
