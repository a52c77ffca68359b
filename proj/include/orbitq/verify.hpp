#pragma once

#include <map>
#include <string>
#include <vector>

namespace orbitq::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    std::map<std::string, double> metrics;  // named floating-point residuals
};

enum class Suite { Symbolic, Numeric, All };

/// The twelve checks behind `verify --suite ...`. Criteria 6, 8 and 12 carry
/// the floating-point work; everything else is exact arithmetic.
CriterionResult bracket_and_jacobi();          // 1
CriterionResult equivariance();                // 2
CriterionResult orbit_invariance();            // 3
CriterionResult chart_and_poisson();           // 4
CriterionResult star_commutators();            // 5
CriterionResult quantum_casimir();             // 6
CriterionResult operator_homomorphism();       // 7
CriterionResult conjugation_end_to_end();      // 8
CriterionResult classical_match();             // 9
CriterionResult skew_hermitian_matrices();     // 10
CriterionResult polarization_suite();          // 11
CriterionResult fourier_lemma();               // 12

std::vector<CriterionResult> run_suite(Suite s);
bool all_pass(const std::vector<CriterionResult>& rs);

}  // namespace orbitq::verify
