#pragma once

#include "pairshare/numeric.hpp"
#include "pairshare/poly2.hpp"

namespace pairshare {

// Fractional-power series solution y(x) = sum coeff_e * x^(e/ramification)
// of K(x, y) = 0 at a point, produced by the Newton polygon iteration.
struct BranchExpansion {
    Rat leading_exponent;                       // p/q in lowest terms
    long ramification = 1;                      // series runs in u = x^(1/ram)
    std::vector<std::pair<long, FieldElem>> terms;  // (exponent in u, coefficient)
    bool needs_extension = false;  // a coefficient leaves the quadratic field
    Poly1 extension_poly;          // defining polynomial for the missing root
    long certified_order = 0;      // residual valuation in u of the truncation
    bool exact = false;            // the series terminates (polynomial branch)
};

// Branches of K at the given finite point (both orientations are captured by
// the polygon; segments with exponent < 1 describe x ~ c y^(1/exponent)).
// `terms` bounds the number of collected coefficients per branch.
std::vector<BranchExpansion> puiseux_branches(const Poly2& k, const FieldElem& at_x,
                                              const FieldElem& at_y, int terms);

}  // namespace pairshare
