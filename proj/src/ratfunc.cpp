#include "pairshare/ratfunc.hpp"

#include <algorithm>

namespace pairshare {

// ------------------------------- Divisor -------------------------------------

Poly1 Divisor::support_poly(const FieldPtr& f, char var) const {
    Poly1 acc = Poly1::constant(FieldElem(f, 1), var);
    for (auto& [p, m] : entries) acc = acc * p;
    return acc;
}

Poly1 Divisor::multiplicity_poly(const FieldPtr& f, char var) const {
    Poly1 acc = Poly1::constant(FieldElem(f, 1), var);
    for (auto& [p, m] : entries)
        for (int i = 0; i < m; ++i) acc = acc * p;
    return acc;
}

bool operator==(const Divisor& a, const Divisor& b) {
    if (a.inf_mult != b.inf_mult) return false;
    // compare per-multiplicity monic products; factor granularity may differ
    auto level_poly = [](const Divisor& d, int mult) {
        Poly1 acc;
        bool init = false;
        for (auto& [p, m] : d.entries) {
            if (m != mult) continue;
            acc = init ? acc * p : p;
            init = true;
        }
        return init ? acc : Poly1();
    };
    std::vector<int> mults;
    for (auto& [p, m] : a.entries) mults.push_back(m);
    for (auto& [p, m] : b.entries) mults.push_back(m);
    std::sort(mults.begin(), mults.end());
    mults.erase(std::unique(mults.begin(), mults.end()), mults.end());
    for (int m : mults) {
        Poly1 pa = level_poly(a, m), pb = level_poly(b, m);
        if (pa.is_zero() != pb.is_zero()) return false;
        if (!pa.is_zero() && !(pa == pb)) return false;
    }
    return true;
}

void PointSet::add_class(const Poly1& p) {
    if (p.deg() < 1) return;
    Poly1 rest = p.monic();
    // keep classes pairwise coprime
    for (auto& c : classes) {
        Poly1 g = poly_gcd(rest, c);
        if (g.deg() > 0) rest = rest.exact_div(g);
        if (rest.deg() < 1) return;
    }
    classes.push_back(rest);
}

void PointSet::merge(const PointSet& other) {
    inf = inf || other.inf;
    for (auto& c : other.classes) add_class(c);
}

Poly1 PointSet::poly(const FieldPtr& f, char var) const {
    Poly1 acc = Poly1::constant(FieldElem(f, 1), var);
    for (auto& c : classes) acc = acc * c;
    return acc;
}

// ------------------------------ MobiusMap ------------------------------------

MobiusMap::MobiusMap(FieldElem a_, FieldElem b_, FieldElem c_, FieldElem d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if ((a * d - b * c).is_zero())
        throw std::invalid_argument("Mobius map needs nonzero determinant");
}

MobiusMap MobiusMap::identity(const FieldPtr& f) {
    return MobiusMap(FieldElem(f, 1), FieldElem(f, 0), FieldElem(f, 0), FieldElem(f, 1));
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(d, -b, -c, a); }

Value MobiusMap::apply(const Value& x) const {
    if (x.is_inf()) {
        if (c.is_zero()) return Value::infinity();
        return Value(a / c);
    }
    FieldElem den = c * x.v + d;
    if (den.is_zero()) return Value::infinity();
    return Value((a * x.v + b) / den);
}

// -------------------------------- RatFunc ------------------------------------

RatFunc RatFunc::normalize(const Poly1& num, const Poly1& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    Poly1 g = poly_gcd(num, den);
    Poly1 n = num, d = den;
    if (g.deg() > 0) {
        n = num.exact_div(g);
        d = den.exact_div(g);
    }
    FieldElem lc = d.lc();
    RatFunc r;
    r.num_ = n.scale(lc.inv());
    r.den_ = d.monic();
    if (r.num_.is_zero()) r.num_ = Poly1(d.field(), d.var());
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc::normalize(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc::normalize(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.is_zero()) throw std::domain_error("division by the zero function");
    return RatFunc::normalize(a.num_ * b.den_, a.den_ * b.num_);
}
RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw std::domain_error("inverse of the zero function");
    return normalize(den_, num_);
}

RatFunc RatFunc::derivative() const {
    return normalize(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Value RatFunc::eval(const Value& x) const {
    if (x.is_inf()) {
        int dn = num_.deg(), dd = den_.deg();
        if (dn > dd) return Value::infinity();
        if (dn < dd) return Value(FieldElem(field(), 0));
        return Value(num_.lc() / den_.lc());
    }
    FieldElem d = den_.eval(x.v);
    if (d.is_zero()) return Value::infinity();
    return Value(num_.eval(x.v) / d);
}

std::complex<double> RatFunc::eval(const std::complex<double>& x) const {
    return num_.eval(x) / den_.eval(x);
}

RatFunc RatFunc::compose(const RatFunc& inner) const {
    // num(inner)/den(inner), cleared by inner.den^degree
    int d = std::max(num_.deg(), den_.deg());
    const Poly1 &n = inner.num(), &dd = inner.den();
    auto lift = [&](const Poly1& p) {
        Poly1 acc(n.field(), n.var());
        for (int i = 0; i <= d; ++i) {
            FieldElem c = p.coeff(i);
            if (c.is_zero()) continue;
            Poly1 term = Poly1::constant(c, n.var());
            for (int k = 0; k < i; ++k) term = term * n;
            for (int k = i; k < d; ++k) term = term * dd;
            acc = acc + term;
        }
        return acc;
    };
    return normalize(lift(num_), lift(den_));
}

std::string RatFunc::str() const {
    if (den_.deg() == 0 && !den_.is_zero() && den_.lc().is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ------------------------------ operations -----------------------------------

Divisor value_divisor(const RatFunc& q, const Value& a) {
    if (q.is_constant()) throw std::domain_error("value divisor of a constant function");
    Divisor d;
    Poly1 w;  // polynomial whose roots are the finite solutions
    if (a.is_inf()) {
        w = q.den();
    } else {
        w = q.num() - q.den().scale(a.v);
    }
    int deg = q.degree();
    if (!w.is_zero() && w.deg() > 0) {
        for (auto& [m, f] : squarefree_decomposition(w)) d.entries.emplace_back(f, m);
    }
    int wdeg = w.is_zero() ? 0 : w.deg();
    if (wdeg < deg) d.inf_mult = deg - wdeg;
    if (d.total_degree() != deg) throw std::logic_error("fiber count mismatch");
    return d;
}

CriticalValues critical_values(const RatFunc& q, char value_var) {
    if (q.is_constant()) throw std::domain_error("critical values of a constant function");
    const Poly1 &n = q.num(), &d = q.den();
    char tv = q.var();
    char av = value_var ? value_var : (tv == 'y' ? 'x' : 'y');
    Poly1 w = n.derivative() * d - n * d.derivative();
    CriticalValues out;
    out.inf_critical = false;
    // inf is a critical value iff some pole is multiple (incl. the pole at t=inf)
    if (poly_gcd(d, d.derivative()).deg() > 0) out.inf_critical = true;
    if (n.deg() - d.deg() >= 2) out.inf_critical = true;

    FieldPtr f = q.field();
    Poly1 one = Poly1::constant(FieldElem(f, 1), av);
    Poly1 cv = one;
    if (!w.is_zero() && w.deg() > 0) {
        // Res_t(w(t), a*den(t) - num(t)) as a polynomial in the value variable
        Poly2 W = Poly2::from_poly1(w, av, true);            // (t, av)
        Poly2 G = Poly2::from_poly1(d, av, true);            // den as (t, av)
        Poly2 A = Poly2::variable(f, av, tv, av);
        G = A * G - Poly2::from_poly1(n, av, true);
        Poly2 res = poly2_resultant(W, G, tv);
        Poly1 r = res.to_poly1();
        r.set_var(av);
        if (!r.is_zero() && r.deg() > 0) cv = squarefree_part(r).monic();
    }
    // value attained at t=inf with multiplicity >= 2: degree of num - a*den
    // drops by >= 2 from degree(Q)
    int deg = q.degree();
    Value at_inf = q.eval(Value::infinity());
    if (!at_inf.is_inf()) {
        Poly1 drop = q.num() - q.den().scale(at_inf.v);
        int ddeg = drop.is_zero() ? 0 : drop.deg();
        if (deg - ddeg >= 2) {
            Poly1 root = Poly1::variable(f, av) - Poly1::constant(at_inf.v, av);
            if (cv.eval(at_inf.v) != FieldElem(f, 0) || cv.deg() == 0)
                cv = (cv.deg() == 0 ? root : cv * root);
        }
    }
    out.polynomial = cv.deg() > 0 ? squarefree_part(cv).monic() : one;
    return out;
}

RatFunc mobius_apply(const MobiusMap& m, const RatFunc& q) {
    return RatFunc::normalize(q.num().scale(m.a) + q.den().scale(m.b),
                              q.num().scale(m.c) + q.den().scale(m.d));
}

RatFunc mobius_precompose(const RatFunc& q, const MobiusMap& m) {
    FieldPtr f = q.field();
    char v = q.var();
    Poly1 mn = Poly1(f, v, {m.b, m.a});  // a t + b
    Poly1 md = Poly1(f, v, {m.d, m.c});  // c t + d
    RatFunc inner = RatFunc::normalize(mn, md);
    RatFunc out = q.compose(inner);
    if (out.degree() != q.degree() && !q.is_constant())
        throw std::logic_error("Mobius precomposition changed the degree");
    return out;
}

std::pair<std::pair<Value, Value>, std::pair<Value, Value>> asymptotic_values(
    const RatFunc& q, const RatFunc& qt) {
    Value zero(FieldElem(q.field(), 0));
    return {{q.eval(Value::infinity()), qt.eval(Value::infinity())},
            {q.eval(zero), qt.eval(zero)}};
}

}  // namespace pairshare
