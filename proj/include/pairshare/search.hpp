#pragma once

#include <map>

#include "pairshare/curve.hpp"
#include "pairshare/numeric.hpp"

namespace pairshare {

// sparse multivariate polynomial over the field, used for constraint systems
class MPoly {
  public:
    MPoly() : field_(Field::rationals()), arity_(0) {}
    MPoly(FieldPtr f, int arity) : field_(std::move(f)), arity_(arity) {}
    static MPoly constant(FieldPtr f, int arity, const FieldElem& c);
    static MPoly variable(FieldPtr f, int arity, int index);

    const FieldPtr& field() const { return field_; }
    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, FieldElem>& terms() const { return terms_; }
    void add_term(const std::vector<int>& exps, const FieldElem& c);

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;

    MPoly derivative(int var) const;
    // substitute a polynomial for one variable (used to plug pair coordinates in)
    MPoly subst(int var, const MPoly& value) const;

    FieldElem eval(const std::vector<FieldElem>& xs) const;
    Cplx eval(const std::vector<Cplx>& xs) const;

    std::string str(const std::vector<std::string>& names) const;

  private:
    FieldPtr field_;
    int arity_;
    std::map<std::vector<int>, FieldElem> terms_;
};

struct DegreeProfile {
    int m = 2, n = 2;      // deg_y, deg_x
    int s = 1, t = 1;      // corner exponents (corner-anchored mode)
    int kappa = 1, lambda = 1;  // which pair anchors each corner (index >= 2 free)
    bool corner_shape = true;   // false: dense coefficient grid mode
    // per-pair exempted derivative orders ("all but one"): y-chain j in [0,m),
    // x-chain l in [0,n); defaults exempt the top order of each chain
    std::vector<int> exempt_j, exempt_l;
    // tail selection: unknown coefficient cells (j,k); cells not listed are 0
    std::vector<std::pair<int, int>> free_tail;
    // dense mode: coefficient cells pinned to explicit rational values
    std::vector<std::pair<std::pair<int, int>, Rat>> fixed_cells;

    void validate() const;
};

struct ConstraintSystem {
    DegreeProfile profile;
    std::vector<std::string> unknown_names;  // a3,b3,a4,b4 then A / c_jk...
    std::vector<MPoly> equations;            // in the unknowns only
    MPoly k_template;  // K as a polynomial in (x, y, unknowns...): vars 0,1 = x,y
    int emitted = 0;
    int exempted = 0;
};

struct Candidate {
    std::vector<Cplx> assignment;
    double residual = 0;
    bool lifted = false;
    std::vector<FieldElem> exact;
    bool verified = false;
    std::string first_violation;
};

// 4(n+m-1)
long count_constraints(int m, int n);

ConstraintSystem build_constraints(const DegreeProfile& profile, const FieldPtr& field);

struct SearchOptions {
    int starts = 200;
    uint64_t seed = 1;
    double tol = 1e-10;
    int max_iter = 120;
    // optional warm start: initial points sampled around this assignment
    std::vector<Cplx> center;
    double spread = 1.0;  // sampling radius (absolute, or around the center)
};

// damped Gauss-Newton least squares, deterministic under the seed
std::vector<Candidate> numeric_search(const ConstraintSystem& system,
                                      const SearchOptions& opts);

struct VerifyReport {
    bool cond1_ok = false;      // every emitted equation vanishes exactly
    bool lift_ok = false;
    Poly2 k;                    // instantiated curve
    FiberCheck fibers;          // fiber-exclusivity report
    ShapeReport shape;
    SharedPairSpec pairs;       // instantiated pair values
};

// exact lift (height-bounded reconstruction) + exact substitution + fiber and
// shape reports on the instantiated curve
VerifyReport exact_verify(Candidate& cand, const ConstraintSystem& system,
                          long max_den = 1000000);

// instantiate the K template at an exact assignment
Poly2 instantiate_curve(const ConstraintSystem& system,
                        const std::vector<FieldElem>& assignment);
SharedPairSpec instantiate_pairs(const ConstraintSystem& system,
                                 const std::vector<FieldElem>& assignment);

}  // namespace pairshare
