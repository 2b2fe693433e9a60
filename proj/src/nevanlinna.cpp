#include "pairshare/nevanlinna.hpp"

#include <algorithm>
#include <cmath>

#include "pairshare/numeric.hpp"

namespace pairshare {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double log_plus_abs(const RatFunc& q, double r, double theta) {
    Cplx z = std::polar(r, theta);
    Cplx w = std::exp(z);
    Cplx den = q.den().eval(w);
    Cplx num = q.num().eval(w);
    double v;
    if (std::abs(den) < 1e-280) {
        if (std::abs(num) < 1e-280) return 0.0;  // should not happen (coprime)
        throw std::domain_error("pole on the integration circle");
    }
    v = std::abs(num / den);
    if (!(v == v)) throw std::domain_error("quadrature non-convergence near a pole");
    return v > 1.0 ? std::log(v) : 0.0;
}

struct Quad {
    const RatFunc* q;
    double r;
    double abs_err = 0;
    int max_depth = 32;

    double simpson(double a, double fa, double b, double fb, double fm) const {
        return (b - a) / 6.0 * (fa + 4 * fm + fb);
    }
    double adapt(double a, double fa, double b, double fb, double m, double fm,
                 double whole, double eps, int depth, double* err) {
        double lm = (a + m) / 2, rm = (m + b) / 2;
        double flm = log_plus_abs(*q, r, lm), frm = log_plus_abs(*q, r, rm);
        double left = simpson(a, fa, m, fm, flm);
        double right = simpson(m, fm, b, fb, frm);
        double delta = left + right - whole;
        if (depth >= max_depth || std::abs(delta) < 15 * eps) {
            *err += std::abs(delta) / 15;
            return left + right + delta / 15;
        }
        double e1 = 0, e2 = 0;
        double v = adapt(a, fa, m, fm, lm, flm, left, eps / 2, depth + 1, &e1) +
                   adapt(m, fm, b, fb, rm, frm, right, eps / 2, depth + 1, &e2);
        *err += e1 + e2;
        return v;
    }
};

}  // namespace

Proximity proximity(const RatFunc& q, double r, int nodes) {
    if (r <= 0) throw std::invalid_argument("radius must be positive");
    nodes = std::max(nodes, 64);
    // panel boundaries: uniform grid plus the angles of near-circle poles
    std::vector<double> cuts;
    for (int i = 0; i <= nodes; ++i) cuts.push_back(-kPi + 2 * kPi * i / nodes);
    if (q.den().deg() >= 1) {
        for (auto& w0 : poly_roots_complex(q.den())) {
            if (std::abs(w0) < 1e-14) continue;
            double x = std::log(std::abs(w0));
            double phi = std::arg(w0);
            for (long k = -(long)(r / (2 * kPi)) - 1; k <= (long)(r / (2 * kPi)) + 1; ++k) {
                double y = phi + 2 * kPi * k;
                double dist = std::hypot(x, y);
                if (std::abs(dist - r) < 1.0 && dist > 1e-12) {
                    double th = std::atan2(y, x);
                    cuts.push_back(th);
                }
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               cuts.end());
    Quad quad{&q, r};
    double total = 0, err = 0;
    double eps = 1e-10;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        double a = cuts[i], b = cuts[i + 1];
        if (b - a < 1e-13) continue;
        double m = (a + b) / 2;
        double fa = log_plus_abs(q, r, a), fb = log_plus_abs(q, r, b),
               fm = log_plus_abs(q, r, m);
        double whole = quad.simpson(a, fa, b, fb, fm);
        double e = 0;
        total += quad.adapt(a, fa, b, fb, m, fm, whole, eps * (b - a) / (2 * kPi), 0, &e);
        err += e;
    }
    return {total / (2 * kPi), err / (2 * kPi) + 1e-12};
}

namespace {

void count_lattice(const Cplx& w0, int mult, double r, Counting& acc) {
    if (std::abs(w0) < 1e-300) return;  // w = 0 is omitted by e^z
    double x = std::log(std::abs(w0));
    double phi = std::arg(w0);
    long kmax = (long)((r + std::abs(phi)) / (2 * kPi)) + 2;
    for (long k = -kmax; k <= kmax; ++k) {
        double y = phi + 2 * kPi * k;
        double mod = std::hypot(x, y);
        if (mod > r + 1e-12) continue;
        double contrib = (mod < 1e-12) ? std::log(r) : std::log(r / mod);
        acc.n += mult * contrib;
        acc.nbar += contrib;
        acc.n1 += (mult - 1) * contrib;
    }
}

}  // namespace

Counting counting(const RatFunc& q, const Value& value, double r) {
    if (q.is_constant()) throw std::domain_error("counting needs a nonconstant function");
    Counting acc;
    Divisor d = value_divisor(q, value);
    for (auto& [cls, mult] : d.entries) {
        Poly1 cls2 = cls;
        // drop the w = 0 class exactly
        if (cls2.coeff(0).is_zero()) {
            Poly1 wvar = Poly1::variable(cls2.field(), cls2.var());
            cls2 = cls2.exact_div(wvar);
        }
        if (cls2.deg() < 1) continue;
        for (auto& w0 : poly_roots_complex(cls2)) count_lattice(w0, mult, r, acc);
    }
    // the divisor's infinity class lies outside the range of e^z
    return acc;
}

double counting_reduced_classes(const Poly1& classes, double r) {
    if (classes.deg() < 1) return 0;
    Poly1 cls = classes;
    if (cls.coeff(0).is_zero()) {
        Poly1 wvar = Poly1::variable(cls.field(), cls.var());
        cls = cls.exact_div(wvar);
    }
    if (cls.deg() < 1) return 0;
    Counting acc;
    for (auto& w0 : poly_roots_complex(cls)) count_lattice(w0, 1, r, acc);
    return acc.nbar;
}

double characteristic(const RatFunc& q, double r, int nodes) {
    return proximity(q, r, nodes).value + counting(q, Value::infinity(), r).n;
}

RatFunc compose_pair(const Poly2& p, const RatFunc& q, const RatFunc& qt) {
    char var = q.var();
    FieldPtr f = q.field();
    RatFunc acc = RatFunc::from_poly(Poly1(f, var));
    for (auto& [key, c] : p.terms()) {
        RatFunc term = RatFunc::from_poly(Poly1::constant(c, var));
        for (int i = 0; i < key.first; ++i) term = term * q;
        for (int j = 0; j < key.second; ++j) term = term * qt;
        acc = acc + term;
    }
    return acc;
}

std::vector<IdentityRow> identity_report(const RatFunc& q, const RatFunc& qt,
                                         const SharedPairSpec& spec, const Poly2& p,
                                         const Poly2& pt, const std::vector<double>& rgrid,
                                         int nodes) {
    RatFunc f_big = compose_pair(p, q, qt);
    RatFunc ft_big = compose_pair(pt, q, qt);
    if (f_big.is_zero() || ft_big.is_zero())
        throw std::domain_error("quadric combination vanishes identically on the pair");
    // shared-pair solution classes (reduced), exact in w
    std::vector<Poly1> pair_classes;
    for (auto& prr : spec.pairs) {
        PointSet none;
        PatternReport rep = multiplicity_pattern(q, qt, prr, none);
        Poly1 cls = Poly1::constant(FieldElem(q.field(), 1), q.var());
        for (auto& c : rep.classes)
            if (!c.at_inf) cls = cls * c.pointclass;
        pair_classes.push_back(cls);
    }
    std::vector<IdentityRow> rows;
    for (double r : rgrid) {
        IdentityRow row;
        row.r = r;
        double m_r = proximity(q, r, nodes).value;
        Counting poles = counting(q, Value::infinity(), r);
        row.m = m_r;
        row.nbar = poles.nbar;
        row.t = m_r + poles.n;
        row.m_f3 = 3 * m_r;
        row.m_big = proximity(f_big, r, nodes).value;
        Counting fpoles = counting(f_big, Value::infinity(), r);
        row.n_big = fpoles.n;
        row.nbar_big = fpoles.nbar;
        row.m_inv = proximity(f_big.inverse(), r, nodes).value;
        Counting fzeros = counting(f_big, Value(FieldElem(q.field(), 0)), r);
        row.n1_inv = fzeros.n1;
        row.nbar_inv = fzeros.nbar;
        row.sum_pairs = 0;
        for (auto& cls : pair_classes) row.sum_pairs += counting_reduced_classes(cls, r);
        row.res_i = row.m_inv + row.n1_inv;                    // = S(r)
        row.res_ii = row.m_big - 3 * m_r;                      // m(r,F) = 3m(r)
        row.res_iii = row.n_big - 2 * row.nbar;                // N(r,F) = 2 Nbar(r)
        row.res_iv = row.sum_pairs - (2 * row.t + m_r);        // sum = 2T + m
        double t = std::max(row.t, 1e-9);
        row.rel_i = std::abs(row.res_i) / t;
        row.rel_ii = std::abs(row.res_ii) / t;
        row.rel_iii = std::abs(row.res_iii) / t;
        row.rel_iv = std::abs(row.res_iv) / t;
        row.pole_ratio = row.nbar / t;
        rows.push_back(row);
    }
    return rows;
}

PencilCheck pencil_constants(const RatFunc& q, const RatFunc& qt,
                             const SharedPairSpec& spec, const Poly2& p, const Poly2& pt) {
    PencilCheck out;
    FieldPtr f = q.field();
    char var = q.var();
    out.phi = FieldElem(f, 0);
    out.phitilde = FieldElem(f, 0);
    out.monomial_c = FieldElem(f, 0);
    out.psi0 = FieldElem(f, 0);
    out.u_norm = FieldElem(f, 0);
    out.v_norm = FieldElem(f, 0);

    RatFunc f_big = compose_pair(p, q, qt);
    RatFunc ft_big = compose_pair(pt, q, qt);
    if (f_big.is_zero()) {
        out.violation = "P(f,g) vanishes identically";
        return out;
    }
    if (ft_big.is_zero()) {
        out.violation = "Pt(f,g) vanishes identically";
        return out;
    }
    RatFunc wvar = RatFunc::from_poly(Poly1::variable(f, var));
    auto prod_shift = [&](const RatFunc& g, bool first) {
        RatFunc acc = RatFunc::from_poly(Poly1::constant(FieldElem(f, 1), var));
        for (auto& prr : spec.pairs) {
            const Value& v = first ? prr.a : prr.b;
            if (v.is_inf()) throw std::invalid_argument("pairs must be finite");
            acc = acc * (g - RatFunc::from_poly(Poly1::constant(v.v, var)));
        }
        return acc;
    };
    RatFunc aprod = prod_shift(q, true);
    RatFunc bprod = prod_shift(qt, false);
    if (aprod.is_zero() || bprod.is_zero()) {
        out.violation = "a shared value equals the function identically";
        return out;
    }
    RatFunc phi = (wvar * q.derivative() * f_big * f_big) / (ft_big * aprod);
    RatFunc phit = (wvar * qt.derivative() * ft_big * ft_big) / (f_big * bprod);
    if (!phi.is_constant()) {
        out.violation = "phi is not constant";
        return out;
    }
    if (!phit.is_constant()) {
        out.violation = "phitilde is not constant";
        return out;
    }
    out.phi = phi.num().coeff(0) / phi.den().coeff(0);
    out.phitilde = phit.num().coeff(0) / phit.den().coeff(0);

    RatFunc psi_big = f_big / ft_big;
    // monomial c w^k: single-term numerator over a w-power denominator
    const Poly1& nn = psi_big.num();
    const Poly1& dd = psi_big.den();
    int nz = 0, top = -1;
    for (int i = 0; i <= nn.deg(); ++i)
        if (!nn.coeff(i).is_zero()) {
            ++nz;
            top = i;
        }
    bool den_mono = true;
    for (int i = 0; i < dd.deg(); ++i)
        if (!dd.coeff(i).is_zero()) den_mono = false;
    if (nz != 1 || !den_mono) {
        out.violation = "Psi = F/Ft is not a monomial";
        return out;
    }
    out.monomial_c = nn.coeff(top);
    out.monomial_k = top - dd.deg();
    out.psi_zero = (out.monomial_k == 0);
    out.ok = true;
    if (!out.psi_zero) {
        FieldElem k(f, out.monomial_k);
        out.u = out.phi / k;
        out.v = out.phitilde / k;
        out.psi0 = FieldElem(f, 1);
        out.u_norm = *out.u;
        out.v_norm = *out.v;
    } else {
        // psi vanishes identically (the constant-ratio regime); normalize the
        // eliminant coefficients by phi instead
        out.psi0 = FieldElem(f, 0);
        if (out.phi.is_zero()) {
            out.ok = false;
            out.violation = "psi and phi both vanish";
            return out;
        }
        out.u_norm = FieldElem(f, 1);
        out.v_norm = out.phitilde / out.phi;
    }
    return out;
}

}  // namespace pairshare
