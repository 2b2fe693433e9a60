#pragma once

#include "pairshare/curve.hpp"

namespace pairshare {

// All functions here concern f(z) = Q(e^z) for a rational Q in w.

struct Proximity {
    double value = 0;
    double error = 0;  // quadrature error estimate
};

// m(r, Q(e^z)) by adaptive Simpson quadrature of log+|Q(e^{r e^{i theta}})|
Proximity proximity(const RatFunc& q, double r, int nodes = 256);

struct Counting {
    double n = 0;     // integrated counting function N(r)
    double nbar = 0;  // reduced
    double n1 = 0;    // excess multiplicity only
};

// exact enumeration of the solutions of Q(e^z) = value in |z| <= r
// (closed disc; the solution lattices are explicit)
Counting counting(const RatFunc& q, const Value& value, double r);

// reduced counting over the roots of an explicit solution-class polynomial in w
double counting_reduced_classes(const Poly1& classes, double r);

double characteristic(const RatFunc& q, double r, int nodes = 256);  // T = m + N

struct IdentityRow {
    double r = 0;
    double t = 0, m = 0, nbar = 0;            // T(r), m(r), reduced pole count of f
    double m_f3 = 0;                          // 3 m(r)
    double m_big = 0, n_big = 0, nbar_big = 0;  // m(r,F), N(r,F), reduced
    double m_inv = 0, n1_inv = 0, nbar_inv = 0; // of 1/F
    double sum_pairs = 0;                     // sum of shared-pair counts
    double res_i = 0, res_ii = 0, res_iii = 0, res_iv = 0;  // absolute residuals
    double rel_i = 0, rel_ii = 0, rel_iii = 0, rel_iv = 0;  // relative to T(r)
    double pole_ratio = 0;                    // Nbar(r)/T(r), against 5/7
};

// both sides of the four counting identities for F = P(f,g) along an r-grid
std::vector<IdentityRow> identity_report(const RatFunc& q, const RatFunc& qt,
                                         const SharedPairSpec& spec, const Poly2& p,
                                         const Poly2& pt, const std::vector<double>& rgrid,
                                         int nodes = 256);

// Exact structure of the logarithmic-derivative data for w = e^z:
// phi  = w Q' F^2 / (Ft prod(Q - a_nu))         must be constant,
// phit = w Qt' Ft^2 / (F prod(Qt - b_nu))       must be constant,
// Psi  = F/Ft                                   must be a monomial c w^k,
// and then psi = w Psi'/Psi = k exactly.
struct PencilCheck {
    bool ok = false;
    std::string violation;
    FieldElem phi, phitilde;  // the constants
    FieldElem monomial_c;
    long monomial_k = 0;
    bool psi_zero = false;                // k = 0: the ratio F/Ft is constant
    std::optional<FieldElem> u, v;        // phi/k, phitilde/k when k != 0
    FieldElem psi0, u_norm, v_norm;       // projective data (psi : phi : phit),
                                          // scaled for build_eliminant
};

PencilCheck pencil_constants(const RatFunc& q, const RatFunc& qt,
                             const SharedPairSpec& spec, const Poly2& p, const Poly2& pt);

// F = P(q(w), qt(w)) as an exact rational function of w
RatFunc compose_pair(const Poly2& p, const RatFunc& q, const RatFunc& qt);

}  // namespace pairshare
