#include "pairshare/search.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <sstream>

namespace pairshare {

// --------------------------------- MPoly -------------------------------------

MPoly MPoly::constant(FieldPtr f, int arity, const FieldElem& c) {
    MPoly p(std::move(f), arity);
    if (!c.is_zero()) p.terms_[std::vector<int>((size_t)arity, 0)] = c;
    return p;
}

MPoly MPoly::variable(FieldPtr f, int arity, int index) {
    MPoly p(f, arity);
    std::vector<int> e((size_t)arity, 0);
    e[index] = 1;
    p.terms_[e] = FieldElem(f, 1);
    return p;
}

void MPoly::add_term(const std::vector<int>& exps, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end())
        terms_[exps] = c;
    else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(field_, arity_);
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.field_, a.arity_);
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            std::vector<int> e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::derivative(int var) const {
    MPoly r(field_, arity_);
    for (auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        d[var] -= 1;
        r.add_term(d, c * FieldElem(field_, e[var]));
    }
    return r;
}

MPoly MPoly::subst(int var, const MPoly& value) const {
    MPoly r(field_, arity_);
    for (auto& [e, c] : terms_) {
        MPoly term = MPoly::constant(field_, arity_, c);
        std::vector<int> rest = e;
        rest[var] = 0;
        MPoly mono(field_, arity_);
        mono.terms_[rest] = FieldElem(field_, 1);
        term = term * mono;
        for (int i = 0; i < e[var]; ++i) term = term * value;
        r = r + term;
    }
    return r;
}

FieldElem MPoly::eval(const std::vector<FieldElem>& xs) const {
    FieldElem acc(field_, 0);
    for (auto& [e, c] : terms_) {
        FieldElem t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t = t * xs[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

Cplx MPoly::eval(const std::vector<Cplx>& xs) const {
    Cplx acc = 0;
    for (auto& [e, c] : terms_) {
        Cplx t = c.to_complex();
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= xs[i];
        acc += t;
    }
    return acc;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        for (size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            os << "*" << names[i];
            if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

// ------------------------------ constraints ----------------------------------

long count_constraints(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("degrees must be positive");
    return 4L * (n + m - 1);
}

void DegreeProfile::validate() const {
    if (m < 1 || m > 9 || n < 1 || n > 9)
        throw std::invalid_argument("degrees out of the [1,9] range");
    if (corner_shape && (s < 1 || s > 4 || t < 1 || t > 4))
        throw std::invalid_argument("corner exponents out of [1,4]");
    if (kappa < 0 || kappa > 3 || lambda < 0 || lambda > 3)
        throw std::invalid_argument("corner anchors out of range");
    auto chk = [&](const std::vector<int>& ex, int top, const char* what) {
        if (!ex.empty() && ex.size() != 4)
            throw std::invalid_argument("exemption lists carry one entry per pair");
        for (int v : ex)
            if (v < (what[0] == 'l' ? 1 : 0) || v >= top)
                throw std::invalid_argument("inconsistent exemption indices");
    };
    chk(exempt_j, m, "j");
    chk(exempt_l, n, "l");
}

ConstraintSystem build_constraints(const DegreeProfile& profile, const FieldPtr& field) {
    profile.validate();
    ConstraintSystem sys;
    sys.profile = profile;
    // unknowns: a3, b3, a4, b4, then the shape scale / tail coefficients
    sys.unknown_names = {"a3", "b3", "a4", "b4"};
    if (profile.corner_shape) sys.unknown_names.push_back("A");
    for (auto& [j, k] : profile.free_tail)
        sys.unknown_names.push_back("c" + std::to_string(j) + "_" + std::to_string(k));
    int nu = (int)sys.unknown_names.size();
    int arity = 2 + nu;  // vars 0,1 = x,y
    FieldPtr f = field;
    auto var = [&](int i) { return MPoly::variable(f, arity, i); };
    auto cst = [&](const Rat& r) { return MPoly::constant(f, arity, FieldElem(f, r)); };

    // pair coordinates: (0,0), (1,1), (a3,b3), (a4,b4)
    std::vector<MPoly> av = {cst(0), cst(1), var(2), var(4)};
    std::vector<MPoly> bv = {cst(0), cst(1), var(3), var(5)};

    MPoly k = MPoly(f, arity);
    int idx = 6;  // template vars: 0,1 = x,y; 2..5 = a3,b3,a4,b4; tail follows
    if (profile.corner_shape) {
        MPoly xblock = var(0) - av[profile.lambda];
        MPoly first = cst(1);
        for (int i = 0; i < profile.s; ++i) first = first * xblock;
        {
            std::vector<int> e((size_t)arity, 0);
            e[1] = profile.m;
            MPoly ym(f, arity);
            ym.add_term(e, FieldElem(f, 1));
            k = k + first * ym;
        }
        MPoly yblock = var(1) - bv[profile.kappa];
        MPoly second = var(idx++);  // the scale A
        for (int i = 0; i < profile.t; ++i) second = second * yblock;
        {
            std::vector<int> e((size_t)arity, 0);
            e[0] = profile.n;
            MPoly xn(f, arity);
            xn.add_term(e, FieldElem(f, 1));
            k = k + second * xn;
        }
    }
    for (auto& [cell, value] : profile.fixed_cells) {
        std::vector<int> e((size_t)arity, 0);
        e[0] = cell.first;
        e[1] = cell.second;
        MPoly mono(f, arity);
        mono.add_term(e, FieldElem(f, value));
        k = k + mono;
    }
    for (auto& [j, kk] : profile.free_tail) {
        std::vector<int> e((size_t)arity, 0);
        e[0] = j;
        e[1] = kk;
        MPoly mono(f, arity);
        mono.add_term(e, FieldElem(f, 1));
        k = k + mono * var(idx++);
    }
    sys.k_template = k;

    std::vector<int> ej = profile.exempt_j.empty()
                              ? std::vector<int>(4, profile.m - 1)
                              : profile.exempt_j;
    std::vector<int> el = profile.exempt_l.empty()
                              ? std::vector<int>(4, std::max(1, profile.n - 1))
                              : profile.exempt_l;
    auto drop_xy = [&](const MPoly& p) {
        MPoly r(f, nu);
        for (auto& [e, c] : p.terms()) {
            if (e[0] != 0 || e[1] != 0)
                throw std::logic_error("pair coordinates not fully substituted");
            std::vector<int> d(e.begin() + 2, e.end());
            r.add_term(d, c);
        }
        return r;
    };
    for (int pair = 0; pair < 4; ++pair) {
        MPoly dy = k;
        for (int j = 0; j < profile.m; ++j) {
            if (j != ej[pair]) {
                MPoly eq = dy.subst(0, av[pair]).subst(1, bv[pair]);
                sys.equations.push_back(drop_xy(eq));
                ++sys.emitted;
            } else {
                ++sys.exempted;
            }
            dy = dy.derivative(1);
        }
        MPoly dx = k.derivative(0);
        for (int l = 1; l < profile.n; ++l) {
            if (l != el[pair]) {
                MPoly eq = dx.subst(0, av[pair]).subst(1, bv[pair]);
                sys.equations.push_back(drop_xy(eq));
                ++sys.emitted;
            } else {
                ++sys.exempted;
            }
            dx = dx.derivative(0);
        }
    }
    return sys;
}

// ----------------------------- numeric search --------------------------------

namespace {

uint64_t splitmix(uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double unif(uint64_t& s) {  // in [-1, 1]
    return 2.0 * ((double)(splitmix(s) >> 11) / 9007199254740992.0) - 1.0;
}

double residual_inf(const std::vector<MPoly>& eqs, const std::vector<Cplx>& x) {
    double m = 0;
    for (auto& e : eqs) m = std::max(m, std::abs(e.eval(x)));
    return m;
}

double residual_l2(const std::vector<MPoly>& eqs, const std::vector<Cplx>& x) {
    double m = 0;
    for (auto& e : eqs) {
        double a = std::abs(e.eval(x));
        m += a * a;
    }
    return m;
}

}  // namespace

std::vector<Candidate> numeric_search(const ConstraintSystem& system,
                                      const SearchOptions& opts) {
    const auto& eqs = system.equations;
    int nu = (int)system.unknown_names.size();
    int ne = (int)eqs.size();
    std::vector<std::vector<MPoly>> jac((size_t)ne);
    for (int e = 0; e < ne; ++e)
        for (int u = 0; u < nu; ++u) jac[e].push_back(eqs[e].derivative(u));

    std::vector<Candidate> found;
    for (int start = 0; start < opts.starts; ++start) {
        uint64_t st = opts.seed * 0x100000001b3ULL + (uint64_t)start * 0x9e3779b9ULL + 17;
        std::vector<Cplx> x((size_t)nu);
        for (int i = 0; i < nu; ++i) {
            Cplx noise(unif(st), unif(st));
            if ((int)opts.center.size() == nu)
                x[i] = opts.center[i] + opts.spread * noise;
            else
                x[i] = opts.spread * 2.0 * noise;
        }
        double f2 = residual_l2(eqs, x);
        // Levenberg-Marquardt: the damping keeps steps local (so warm starts
        // converge to the nearby solution) and residuals never increase
        double mu = 1e-4;
        for (int it = 0; it < opts.max_iter; ++it) {
            Eigen::MatrixXcd J(ne, nu);
            Eigen::VectorXcd F(ne);
            for (int e = 0; e < ne; ++e) {
                F(e) = eqs[e].eval(x);
                for (int u = 0; u < nu; ++u) J(e, u) = jac[e][u].eval(x);
            }
            Eigen::MatrixXcd JtJ = J.adjoint() * J;
            Eigen::VectorXcd g = J.adjoint() * F;
            bool improved = false;
            for (int tries = 0; tries < 40; ++tries) {
                Eigen::MatrixXcd M = JtJ;
                for (int i = 0; i < nu; ++i) M(i, i) += mu;
                Eigen::VectorXcd delta = M.ldlt().solve(-g);
                std::vector<Cplx> trial = x;
                for (int i = 0; i < nu; ++i) trial[i] += delta(i);
                double t2 = residual_l2(eqs, trial);
                if (t2 < f2) {
                    x = trial;
                    f2 = t2;
                    mu = std::max(mu / 3.0, 1e-14);
                    improved = true;
                    break;
                }
                mu *= 4.0;
                if (mu > 1e14) break;
            }
            if (!improved) break;
            if (std::sqrt(f2) < opts.tol * 1e-3) break;
        }
        double rinf = residual_inf(eqs, x);
        if (rinf < opts.tol) {
            Candidate c;
            c.assignment = x;
            c.residual = rinf;
            found.push_back(std::move(c));
        }
    }
    // deduplicate, deterministic order
    std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
        if (a.residual != b.residual) return a.residual < b.residual;
        for (size_t i = 0; i < a.assignment.size(); ++i) {
            if (a.assignment[i].real() != b.assignment[i].real())
                return a.assignment[i].real() < b.assignment[i].real();
            if (a.assignment[i].imag() != b.assignment[i].imag())
                return a.assignment[i].imag() < b.assignment[i].imag();
        }
        return false;
    });
    std::vector<Candidate> dedup;
    for (auto& c : found) {
        bool close = false;
        for (auto& kept : dedup) {
            double d = 0;
            for (size_t i = 0; i < c.assignment.size(); ++i)
                d = std::max(d, std::abs(c.assignment[i] - kept.assignment[i]));
            if (d < 1e-6) {
                close = true;
                break;
            }
        }
        if (!close) dedup.push_back(c);
    }
    return dedup;
}

// ------------------------------ exact verify ---------------------------------

Poly2 instantiate_curve(const ConstraintSystem& system,
                        const std::vector<FieldElem>& assignment) {
    const MPoly& kt = system.k_template;
    FieldPtr f = kt.field();
    Poly2 k(f, 'x', 'y');
    for (auto& [e, c] : kt.terms()) {
        FieldElem coeff = c;
        for (size_t i = 2; i < e.size(); ++i)
            if (e[i]) coeff = coeff * assignment[i - 2].pow(e[i]);
        k.set(e[0], e[1], k.coeff(e[0], e[1]) + coeff);
    }
    return k;
}

SharedPairSpec instantiate_pairs(const ConstraintSystem& system,
                                 const std::vector<FieldElem>& assignment) {
    FieldPtr f = system.k_template.field();
    SharedPairSpec s;
    s.pairs.push_back({Value(FieldElem(f, 0)), Value(FieldElem(f, 0))});
    s.pairs.push_back({Value(FieldElem(f, 1)), Value(FieldElem(f, 1))});
    s.pairs.push_back({Value(assignment[0]), Value(assignment[1])});
    s.pairs.push_back({Value(assignment[2]), Value(assignment[3])});
    return s;
}

VerifyReport exact_verify(Candidate& cand, const ConstraintSystem& system, long max_den) {
    VerifyReport rep;
    FieldPtr f = system.k_template.field();
    std::vector<FieldElem> exact;
    for (auto& z : cand.assignment) {
        auto lifted = lift_elem(z, f, max_den, 5e-3);
        if (!lifted) {
            cand.lifted = false;
            cand.first_violation = "no small-height exact value near a coordinate";
            return rep;
        }
        exact.push_back(*lifted);
    }
    cand.lifted = true;
    cand.exact = exact;
    rep.lift_ok = true;
    rep.cond1_ok = true;
    for (size_t e = 0; e < system.equations.size(); ++e) {
        if (!system.equations[e].eval(exact).is_zero()) {
            rep.cond1_ok = false;
            cand.first_violation = "equation " + std::to_string(e) + " nonzero";
            break;
        }
    }
    cand.verified = rep.cond1_ok;
    rep.k = instantiate_curve(system, exact);
    rep.pairs = instantiate_pairs(system, exact);
    if (!rep.k.is_zero()) {
        // degenerate instances (collapsed pairs, fiber-line components) are
        // reported, not fatal
        try {
            rep.fibers = fiber_check(rep.k, rep.pairs);
            rep.shape = shape_check(rep.k, rep.pairs);
        } catch (const std::exception& e) {
            if (cand.first_violation.empty())
                cand.first_violation = std::string("degenerate instance: ") + e.what();
        }
    }
    return rep;
}

}  // namespace pairshare
