#include "pairshare/poly1.hpp"

#include <sstream>

namespace pairshare {

namespace {
char join_var(const Poly1& a, const Poly1& b) {
    if (a.var() == b.var()) return a.var();
    if (a.is_constant()) return b.var();
    if (b.is_constant()) return a.var();
    throw std::invalid_argument("univariate operation on distinct variables");
}
FieldPtr join_field(const Poly1& a, const Poly1& b) {
    if (Field::same(a.field(), b.field())) return a.field();
    if (a.field()->is_rational_field()) return b.field();
    if (b.field()->is_rational_field()) return a.field();
    throw std::invalid_argument("mixing distinct quadratic extensions");
}
}  // namespace

Poly1 Poly1::from_rats(const std::vector<Rat>& coeffs, char var, FieldPtr f) {
    std::vector<FieldElem> v;
    v.reserve(coeffs.size());
    for (const auto& r : coeffs) v.emplace_back(f, r);
    return Poly1(f, var, std::move(v));
}

void Poly1::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem Poly1::lc() const {
    if (c_.empty()) return FieldElem(field_, 0);
    return c_.back();
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
    Poly1 r(join_field(a, b), join_var(a, b));
    size_t n = std::max(a.c_.size(), b.c_.size());
    r.c_.resize(n, FieldElem(r.field_, 0));
    for (size_t i = 0; i < n; ++i) r.c_[i] = a.coeff((int)i) + b.coeff((int)i);
    r.trim();
    return r;
}

Poly1 operator-(const Poly1& a, const Poly1& b) { return a + (-b); }

Poly1 Poly1::operator-() const {
    Poly1 r(field_, var_);
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(-x);
    return r;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
    Poly1 r(join_field(a, b), join_var(a, b));
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, FieldElem(r.field_, 0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

bool operator==(const Poly1& a, const Poly1& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

Poly1 Poly1::scale(const FieldElem& k) const {
    Poly1 r(field_, var_);
    if (k.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(x * k);
    r.trim();
    return r;
}

Poly1 Poly1::shift_up(int k) const {
    if (is_zero()) return *this;
    Poly1 r(field_, var_);
    r.c_.assign(c_.size() + k, FieldElem(field_, 0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

std::pair<Poly1, Poly1> Poly1::divrem(const Poly1& num, const Poly1& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly1 q(join_field(num, den), join_var(num, den));
    Poly1 r = num;
    r.var_ = q.var_;
    FieldElem dlc = den.lc();
    int dd = den.deg();
    if (r.deg() >= dd) q.c_.assign(r.deg() - dd + 1, FieldElem(q.field_, 0));
    while (!r.is_zero() && r.deg() >= dd) {
        FieldElem f = r.lc() / dlc;
        int k = r.deg() - dd;
        q.c_[k] = q.c_[k] + f;
        for (int i = 0; i <= dd; ++i) r.c_[k + i] = r.c_[k + i] - f * den.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly1 Poly1::exact_div(const Poly1& d) const {
    auto [q, r] = divrem(*this, d);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Poly1 Poly1::derivative() const {
    Poly1 r(field_, var_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * FieldElem(field_, (long)i));
    r.trim();
    return r;
}

Poly1 Poly1::monic() const {
    if (is_zero()) return *this;
    return scale(lc().inv());
}

FieldElem Poly1::eval(const FieldElem& x) const {
    FieldElem acc(field_, 0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> Poly1::eval(const std::complex<double>& x) const {
    std::complex<double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

Poly1 Poly1::compose(const Poly1& inner) const {
    Poly1 acc(inner.field(), inner.var());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + Poly1::constant(*it, inner.var());
    return acc;
}

Poly1 Poly1::translate(const FieldElem& a) const {
    Poly1 x = Poly1::variable(field_, var_);
    Poly1 shifted = x + Poly1::constant(a, var_);
    return compose(shifted);
}

std::string Poly1::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        const FieldElem& k = c_[i];
        if (k.is_zero()) continue;
        std::string ks = k.str();
        bool compound = !k.is_rational() || (i > 0 && (ks == "1" || ks == "-1"));
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << (k.is_rational() ? ks : "(" + ks + ")");
            continue;
        }
        if (k.is_rational()) {
            if (ks == "1") {
            } else if (ks == "-1")
                os << "-";
            else
                os << ks << "*";
        } else {
            os << "(" << ks << ")*";
        }
        (void)compound;
        os << var_;
        if (i > 1) os << "^" << i;
    }
    std::string s = os.str();
    // tidy "+-" produced by negative leading rationals
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '+' && i + 1 < s.size() && s[i + 1] == '-') {
            out += '-';
            ++i;
        } else
            out += s[i];
    }
    return out;
}

Poly1 poly_gcd(const Poly1& p, const Poly1& q) {
    Poly1 a = p, b = q;
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    while (!b.is_zero()) {
        auto [quot, rem] = Poly1::divrem(a, b);
        (void)quot;
        a = b;
        b = rem;
    }
    return a.monic();
}

FieldElem poly_resultant(const Poly1& p, const Poly1& q) {
    // over a field the classic Euclidean recursion is exact and cheap:
    // Res(A,B) = lc(B)^(degA-degR) * (-1)^(degA*degB) * Res(B,R), R = A mod B
    if (p.is_zero() || q.is_zero()) return FieldElem(p.field(), 0);
    int m = p.deg(), n = q.deg();
    if (m == 0 && n == 0) return FieldElem(p.field(), 1);
    if (n == 0) return q.lc().pow(m);
    if (m == 0) return p.lc().pow(n);
    auto [quot, r] = Poly1::divrem(p, q);
    (void)quot;
    FieldElem sign = FieldElem(p.field(), (m * n) % 2 ? -1 : 1);
    if (r.is_zero()) return FieldElem(p.field(), 0);
    return sign * q.lc().pow(m - r.deg()) * poly_resultant(q, r);
}

FieldElem poly_discriminant(const Poly1& p) {
    if (p.deg() < 1) throw std::domain_error("discriminant needs degree >= 1");
    if (p.deg() == 1) return FieldElem(p.field(), 1);
    FieldElem res = poly_resultant(p, p.derivative());
    long d = p.deg();
    FieldElem sign(p.field(), ((d * (d - 1) / 2) % 2) ? -1 : 1);
    return sign * res / p.lc();
}

std::vector<std::pair<int, Poly1>> squarefree_decomposition(const Poly1& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<std::pair<int, Poly1>> out;
    Poly1 f = p.monic();
    if (f.deg() == 0) return out;
    Poly1 g = poly_gcd(f, f.derivative());
    Poly1 w = f.exact_div(g);  // product of distinct factors
    int mult = 1;
    while (w.deg() > 0) {
        Poly1 y = poly_gcd(w, g);
        Poly1 fac = w.exact_div(y);
        if (fac.deg() > 0) out.emplace_back(mult, fac.monic());
        g = g.exact_div(y);
        w = y;
        ++mult;
    }
    return out;
}

Poly1 squarefree_part(const Poly1& p) {
    Poly1 acc = Poly1::constant(FieldElem(p.field(), 1), p.var());
    for (auto& [m, f] : squarefree_decomposition(p)) {
        (void)m;
        acc = acc * f;
    }
    return acc;
}

}  // namespace pairshare
