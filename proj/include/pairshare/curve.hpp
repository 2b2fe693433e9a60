#pragma once

#include "pairshare/sharing.hpp"

namespace pairshare {

// implicit model of the curve traced by a rational pair
struct CurveModel {
    Poly2 k;             // primitive squarefree representative, canonically scaled
    int map_degree = 0;  // d with Res = c * k^d; 1 = proper (birational); 0 = n/a
    int deg_x = 0;
    int deg_y = 0;
    std::string content_removed;  // log of stripped contents / constants
};

// result of matching K against the corner-anchored shape
// K = (x-a_l)^s y^m + A (y-b_k)^t x^n + lower tail
struct ShapeReport {
    bool matched = false;
    int lambda = -1, kappa = -1;  // pair indices of the anchored corners
    int s = 0, t = 0;
    FieldElem scale;  // A
    bool degree_bounds_ok = false;   // m,n <= 9, total <= 13, 1 <= s,t <= 4
    bool derivative_conditions_ok = false;  // all-but-one vanishing per pair
    std::vector<std::string> notes;
};

struct FiberResult {
    bool skipped = false;   // pair has an infinite coordinate
    bool monomial = false;  // K(a,y) = c (y - b)^k
    int exponent = 0;
    Poly1 extra;  // monic factor carrying any fiber points away from b
};

struct FiberCheck {
    std::vector<FiberResult> x_fibers;  // K(a_nu, y) per pair
    std::vector<FiberResult> y_fibers;  // K(x, b_nu) per pair
    bool all_monomial = false;
};

// the quadric pencil through the four pairs
struct AuxQuadratics {
    Poly2 p;   // x^2 + c2 xy + c3 x + c4 y + c5 in the standard form
    Poly2 pt;  // y^2 + ...
    bool degenerate = false;  // pair values Mobius-related: standard forms impossible
    // filled in the degenerate case:
    Poly2 p0;        // bilinear class vanishing on all pairs
    Poly2 pt0;       // complementary basis quadric (no xy term)
    std::optional<MobiusMap> relation;  // b = M(a) on the pair values
};

// K = primitive squarefree part of Res_t(x den_q - num_q, y den_qt - num_qt);
// verifies K(q, qt) = 0 exactly before returning.
CurveModel implicitize(const RatFunc& q, const RatFunc& qt);

// exact test K(q(t), qt(t)) == 0 after clearing denominators
bool on_curve(const Poly2& k, const RatFunc& q, const RatFunc& qt);

FiberCheck fiber_check(const Poly2& k, const SharedPairSpec& spec);

ShapeReport shape_check(const Poly2& k, const SharedPairSpec& spec);

AuxQuadratics aux_quadratics(const SharedPairSpec& spec);

// The combination  psi0 * P^3 Pt^3
//                  - u * (Pt P_x - P Pt_x) * Pt^3 * prod(x - a_nu)
//                  - v * (Pt P_y - P Pt_y) * P^3 * prod(y - b_nu)
// that the parameterization must annihilate when (psi0, u, v) carry the
// constant ratios of the logarithmic-derivative identity.
Poly2 build_eliminant(const Poly2& p, const Poly2& pt, const SharedPairSpec& spec,
                      const FieldElem& psi0, const FieldElem& u, const FieldElem& v);

// candidates for the curve relating two parameterizations obtained by
// eliminating the common parameter from H(u,y) and H(u,x): the resultant with
// the diagonal power (x-y)^k and contents stripped
struct EliminationCandidate {
    Poly2 k;
    int diagonal_power = 0;       // removed (x-y)^k
    std::string content_removed;  // removed univariate contents
    std::vector<std::pair<std::string, int>> fiber_signature;  // per probe value
};
std::vector<EliminationCandidate> resultant_pair(const Poly2& h, char elim);

}  // namespace pairshare
