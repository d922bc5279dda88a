#pragma once

#include <vector>

#include "heightlab/qmatrix.hpp"

namespace heightlab {

// Outcome of an exact feasibility solve for { x >= 0 : A x = b }.
// When infeasible, `farkas` holds y with y^T A <= 0 (componentwise over
// the columns of A) and y^T b > 0, certifying infeasibility.
struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> x;      // a feasible point (size = #columns)
    std::vector<Rational> farkas; // size = #rows when infeasible
};

// Phase-one simplex with exact rational pivoting; entering and leaving
// variables are chosen by Bland's rule, which guarantees termination.
FeasibilityResult solve_feasibility(const QMatrix& a,
                                    const std::vector<Rational>& b);

} // namespace heightlab
