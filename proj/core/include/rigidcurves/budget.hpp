#ifndef RIGIDCURVES_BUDGET_HPP
#define RIGIDCURVES_BUDGET_HPP

#include <cstdlib>

namespace rigidcurves {

// Desk-scale resource guard. Elimination kernels refuse to run past these
// caps and raise ResourceBudget instead of grinding on open-ended input.
// RIGIDCURVE_BUDGET scales the elimination-degree cap from the environment.
struct Budget {
    int max_elim_degree = 260;  // largest univariate degree elimination may produce
    int max_field_degree = 8;   // largest number-field degree tracked exactly
    int max_series_terms = 4096;

    static Budget from_env() {
        Budget b;
        if (const char* s = std::getenv("RIGIDCURVE_BUDGET")) {
            long v = std::strtol(s, nullptr, 10);
            if (v > 0) b.max_elim_degree = static_cast<int>(v);
        }
        return b;
    }
};

const Budget& budget();

} // namespace rigidcurves

#endif
