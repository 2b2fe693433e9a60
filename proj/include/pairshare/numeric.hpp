#pragma once

#include <complex>
#include <vector>

#include "pairshare/poly1.hpp"

namespace pairshare {

using Cplx = std::complex<double>;

// all complex roots (Durand-Kerner with Newton polish); poly must be nonconstant
std::vector<Cplx> poly_roots_complex(const Poly1& p);

// reconstruct a field element close to z (basis 1, alpha); exact verification
// is the caller's job
std::optional<FieldElem> lift_elem(const Cplx& z, const FieldPtr& field,
                                   long max_den = 1000000, double tol = 1e-7);

struct RootFind {
    std::vector<std::pair<FieldElem, int>> roots;     // in-field roots with multiplicity
    std::vector<std::pair<int, Poly1>> unresolved;    // squarefree factors left over
};

// in-field roots of p, multiplicities exact via the squarefree chain;
// numeric candidates are verified by exact evaluation before acceptance
RootFind field_roots(const Poly1& p);

}  // namespace pairshare
