#include "pairshare/poly2.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pairshare {

namespace {

FieldPtr join_field2(const FieldPtr& a, const FieldPtr& b) {
    if (Field::same(a, b)) return a;
    if (a->is_rational_field()) return b;
    if (b->is_rational_field()) return a;
    throw std::invalid_argument("mixing distinct quadratic extensions");
}

// ---- dense polynomial over a coefficient ring, used by the PRS machinery ----

template <class C>
struct DP {
    std::vector<C> c;  // c[i] multiplies elim^i
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    int deg() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    const C& lc() const { return c.back(); }
};

template <class C>
DP<C> dp_sub(const DP<C>& a, const DP<C>& b) {
    DP<C> r = a;
    if (r.c.size() < b.c.size()) {
        C z = (a.c.empty() ? b.c.front().zero_like() : a.c.front().zero_like());
        r.c.resize(b.c.size(), z);
    }
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    r.trim();
    return r;
}

template <class C>
DP<C> dp_scale(const DP<C>& a, const C& k) {
    DP<C> r;
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.push_back(x * k);
    r.trim();
    return r;
}

template <class C>
DP<C> dp_shift_scale(const DP<C>& a, const C& k, int s) {
    DP<C> r;
    if (a.is_zero()) return r;
    r.c.assign(a.c.size() + s, k.zero_like());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i + s] = a.c[i] * k;
    r.trim();
    return r;
}

// pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B
template <class C>
DP<C> dp_prem(const DP<C>& A, const DP<C>& B) {
    DP<C> R = A;
    int d = A.deg() - B.deg();
    int e = d + 1;
    const C& blc = B.lc();
    while (!R.is_zero() && R.deg() >= B.deg()) {
        DP<C> t = dp_shift_scale(B, R.lc(), R.deg() - B.deg());
        R = dp_sub(dp_scale(R, blc), t);
        --e;
    }
    // normalize the total lc(B) power to d+1
    for (int i = 0; i < e; ++i) R = dp_scale(R, blc);
    return R;
}

Poly1 ring_gcd(const Poly1& a, const Poly1& b) { return poly_gcd(a, b); }
Poly2 ring_gcd(const Poly2& a, const Poly2& b) { return poly2_gcd(a, b); }

template <class C>
C ring_pow(const C& b, long e) {
    C acc = b.one_like(), x = b;
    while (e) {
        if (e & 1) acc = acc * x;
        x = x * x;
        e >>= 1;
    }
    return acc;
}

template <class C>
C dp_content(const DP<C>& a) {
    C g = a.c.front().zero_like();
    for (const auto& x : a.c) {
        if (x.is_zero()) continue;
        g = g.is_zero() ? x : ring_gcd(g, x);
    }
    return g;
}

template <class C>
bool ring_is_unit_one(const C& x) {
    return x == x.one_like();
}

// Resultant by primitive PRS with exact tracking of extracted factors.
// Contents are removed from every remainder (controls coefficient growth the
// way the subresultant scheme does) and reinstated through an exponent ledger;
// the final division is exact because the resultant lives in C.
template <class C>
C prs_resultant(DP<C> A, DP<C> B, const C& one) {
    if (A.is_zero() || B.is_zero()) return one.zero_like();
    if (A.deg() == 0 && B.deg() == 0) return one;
    if (B.deg() == 0) return ring_pow(B.lc(), A.deg());
    if (A.deg() == 0) return ring_pow(A.lc(), B.deg());
    bool negate = false;
    if (A.deg() < B.deg()) {
        if ((A.deg() & 1) && (B.deg() & 1)) negate = true;
        std::swap(A, B);
    }
    std::vector<std::pair<C, long>> ledger;
    auto push = [&](const C& fac, long e) {
        if (e != 0 && !ring_is_unit_one(fac)) ledger.emplace_back(fac, e);
    };
    {
        C ca = dp_content(A);
        push(ca, B.deg());
        if (!ring_is_unit_one(ca))
            for (auto& x : A.c) x = x.exact_div(ca);
        C cb = dp_content(B);
        push(cb, A.deg());
        if (!ring_is_unit_one(cb))
            for (auto& x : B.c) x = x.exact_div(cb);
    }
    C terminal = one;
    for (;;) {
        long a = A.deg(), b = B.deg();
        long delta = a - b;
        DP<C> R = dp_prem(A, B);
        if (R.is_zero()) return one.zero_like();
        long r = R.deg();
        if ((a & 1) && (b & 1)) negate = !negate;
        // Res(A,B) = (-1)^(ab) lc(B)^(a - r - (delta+1)b) Res(B,R)
        push(B.lc(), a - r - (delta + 1) * b);
        if (r > 0) {
            C cr = dp_content(R);
            push(cr, b);
            if (!ring_is_unit_one(cr))
                for (auto& x : R.c) x = x.exact_div(cr);
        }
        A = B;
        B = R;
        if (B.deg() == 0) {
            push(B.lc(), A.deg());
            break;
        }
    }
    C num = terminal, den = one;
    for (auto& [fac, e] : ledger) {
        if (e > 0)
            num = num * ring_pow(fac, e);
        else
            den = den * ring_pow(fac, -e);
    }
    C res = ring_is_unit_one(den) ? num : num.exact_div(den);
    return negate ? (res.zero_like() - res) : res;
}

}  // namespace

// ------------------------------- Poly2 --------------------------------------

Poly2 Poly2::constant(const FieldElem& v, char vx, char vy) {
    Poly2 p(v.field(), vx, vy);
    if (!v.is_zero()) p.m_[{0, 0}] = v;
    return p;
}

Poly2 Poly2::variable(FieldPtr f, char which, char vx, char vy) {
    Poly2 p(std::move(f), vx, vy);
    if (which == vx)
        p.m_[{1, 0}] = FieldElem(p.field_, 1);
    else if (which == vy)
        p.m_[{0, 1}] = FieldElem(p.field_, 1);
    else
        throw std::invalid_argument("variable not in this polynomial ring");
    return p;
}

Poly2 Poly2::from_poly1(const Poly1& p, char other_var, bool p_is_first) {
    char vx = p_is_first ? p.var() : other_var;
    char vy = p_is_first ? other_var : p.var();
    Poly2 out(p.field(), vx, vy);
    for (int i = 0; i <= p.deg(); ++i) {
        if (p.coeff(i).is_zero()) continue;
        Key k = p_is_first ? Key{i, 0} : Key{0, i};
        out.m_[k] = p.coeff(i);
    }
    return out;
}

int Poly2::deg_x() const {
    int d = 0;
    for (auto& [k, v] : m_) d = std::max(d, k.first);
    return m_.empty() ? -1 : d;
}

int Poly2::deg_y() const {
    int d = 0;
    for (auto& [k, v] : m_) d = std::max(d, k.second);
    return m_.empty() ? -1 : d;
}

int Poly2::total_deg() const {
    int d = -1;
    for (auto& [k, v] : m_) d = std::max(d, k.first + k.second);
    return d;
}

FieldElem Poly2::coeff(int j, int k) const {
    auto it = m_.find({j, k});
    if (it == m_.end()) return FieldElem(field_, 0);
    return it->second;
}

void Poly2::set(int j, int k, const FieldElem& v) {
    if (v.is_zero())
        m_.erase({j, k});
    else
        m_[{j, k}] = v;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
    if (a.vx_ != b.vx_ || a.vy_ != b.vy_) {
        if (a.is_constant() || b.is_constant()) {
            // adopt the non-constant operand's variables
            const Poly2& host = a.is_constant() ? b : a;
            Poly2 ca = a, cb = b;
            ca.vx_ = cb.vx_ = host.vx_;
            ca.vy_ = cb.vy_ = host.vy_;
            return ca + cb;
        }
        throw std::invalid_argument("bivariate operation on distinct variable pairs");
    }
    Poly2 r(join_field2(a.field_, b.field_), a.vx_, a.vy_);
    r.m_ = a.m_;
    for (auto& [k, v] : b.m_) {
        auto it = r.m_.find(k);
        if (it == r.m_.end())
            r.m_[k] = v;
        else {
            it->second = it->second + v;
            if (it->second.is_zero()) r.m_.erase(it);
        }
    }
    return r;
}

Poly2 Poly2::operator-() const {
    Poly2 r(field_, vx_, vy_);
    for (auto& [k, v] : m_) r.m_[k] = -v;
    return r;
}

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 operator*(const Poly2& a, const Poly2& b) {
    char vx = a.vx_, vy = a.vy_;
    if (a.vx_ != b.vx_ || a.vy_ != b.vy_) {
        if (a.is_constant()) {
            vx = b.vx_;
            vy = b.vy_;
        } else if (b.is_constant()) {
            vx = a.vx_;
            vy = a.vy_;
        } else
            throw std::invalid_argument("bivariate operation on distinct variable pairs");
    }
    Poly2 r(join_field2(a.field_, b.field_), vx, vy);
    for (auto& [ka, va] : a.m_)
        for (auto& [kb, vb] : b.m_) {
            Poly2::Key k{ka.first + kb.first, ka.second + kb.second};
            FieldElem prod = va * vb;
            auto it = r.m_.find(k);
            if (it == r.m_.end()) {
                if (!prod.is_zero()) r.m_[k] = prod;
            } else {
                it->second = it->second + prod;
                if (it->second.is_zero()) r.m_.erase(it);
            }
        }
    return r;
}

bool operator==(const Poly2& a, const Poly2& b) {
    if (a.m_.size() != b.m_.size()) return false;
    auto ia = a.m_.begin();
    auto ib = b.m_.begin();
    for (; ia != a.m_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

Poly2 Poly2::scale(const FieldElem& k) const {
    Poly2 r(field_, vx_, vy_);
    if (k.is_zero()) return r;
    for (auto& [key, v] : m_) r.m_[key] = v * k;
    return r;
}

Poly2 Poly2::pow(int e) const {
    Poly2 acc = one_like(), x = *this;
    while (e) {
        if (e & 1) acc = acc * x;
        x = x * x;
        e >>= 1;
    }
    return acc;
}

Poly2 Poly2::derivative_x() const {
    Poly2 r(field_, vx_, vy_);
    for (auto& [k, v] : m_)
        if (k.first > 0) r.m_[{k.first - 1, k.second}] = v * FieldElem(field_, k.first);
    return r;
}

Poly2 Poly2::derivative_y() const {
    Poly2 r(field_, vx_, vy_);
    for (auto& [k, v] : m_)
        if (k.second > 0) r.m_[{k.first, k.second - 1}] = v * FieldElem(field_, k.second);
    return r;
}

FieldElem Poly2::eval(const FieldElem& x, const FieldElem& y) const {
    FieldElem acc(field_, 0);
    for (auto& [k, v] : m_) acc = acc + v * x.pow(k.first) * y.pow(k.second);
    return acc;
}

Poly1 Poly2::subst_x(const FieldElem& x, char var_out) const {
    char v = var_out ? var_out : vy_;
    std::vector<FieldElem> cs((size_t)std::max(0, deg_y() + 1), FieldElem(field_, 0));
    for (auto& [k, c] : m_) cs[k.second] = cs[k.second] + c * x.pow(k.first);
    return Poly1(field_, v, std::move(cs));
}

Poly1 Poly2::subst_y(const FieldElem& y, char var_out) const {
    char v = var_out ? var_out : vx_;
    std::vector<FieldElem> cs((size_t)std::max(0, deg_x() + 1), FieldElem(field_, 0));
    for (auto& [k, c] : m_) cs[k.first] = cs[k.first] + c * y.pow(k.second);
    return Poly1(field_, v, std::move(cs));
}

std::vector<Poly1> Poly2::coeffs_in_y() const {
    std::vector<Poly1> out((size_t)std::max(0, deg_y() + 1), Poly1(field_, vx_));
    for (auto& [k, v] : m_) {
        Poly1 mono(field_, vx_, [&] {
            std::vector<FieldElem> c((size_t)k.first + 1, FieldElem(field_, 0));
            c[k.first] = v;
            return c;
        }());
        out[k.second] = out[k.second] + mono;
    }
    return out;
}

std::vector<Poly1> Poly2::coeffs_in_x() const {
    std::vector<Poly1> out((size_t)std::max(0, deg_x() + 1), Poly1(field_, vy_));
    for (auto& [k, v] : m_) {
        Poly1 mono(field_, vy_, [&] {
            std::vector<FieldElem> c((size_t)k.second + 1, FieldElem(field_, 0));
            c[k.second] = v;
            return c;
        }());
        out[k.first] = out[k.first] + mono;
    }
    return out;
}

Poly2 Poly2::from_coeffs_in_y(const std::vector<Poly1>& cs, FieldPtr f, char vx, char vy) {
    Poly2 out(std::move(f), vx, vy);
    for (size_t k = 0; k < cs.size(); ++k)
        for (int j = 0; j <= cs[k].deg(); ++j)
            if (!cs[k].coeff(j).is_zero()) out.m_[{j, (int)k}] = cs[k].coeff(j);
    return out;
}

Poly1 Poly2::to_poly1() const {
    if (deg_y() <= 0) return subst_y(FieldElem(field_, 0), vx_);
    if (deg_x() <= 0) return subst_x(FieldElem(field_, 0), vy_);
    throw std::domain_error("polynomial has two active variables");
}

Poly2 Poly2::translate(const FieldElem& ax, const FieldElem& ay) const {
    // x -> x + ax first, then y -> y + ay
    auto cy = coeffs_in_y();
    for (auto& c : cy) c = c.translate(ax);
    Poly2 shifted = from_coeffs_in_y(cy, field_, vx_, vy_);
    auto cx = shifted.coeffs_in_x();
    for (auto& c : cx) c = c.translate(ay);
    Poly2 out = from_coeffs_in_y(cx, field_, vy_, vx_);  // coefficients of x-powers
    return out.swap_vars();
}

Poly2 Poly2::swap_vars() const {
    Poly2 r(field_, vy_, vx_);
    for (auto& [k, v] : m_) r.m_[{k.second, k.first}] = v;
    return r;
}

Poly2 Poly2::rename(char nvx, char nvy) const {
    if (nvx == nvy) throw std::invalid_argument("bivariate variables must differ");
    Poly2 r(field_, nvx, nvy);
    r.m_ = m_;
    return r;
}

Poly2 Poly2::exact_div(const Poly2& d) const {
    Poly2 q(field_, vx_, vy_);
    if (!divides(d, &q)) throw std::domain_error("inexact bivariate division");
    return q;
}

bool Poly2::divides(const Poly2& d, Poly2* quotient) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly2 r = *this;
    Poly2 q(join_field2(field_, d.field_), vx_, vy_);
    auto dlt = d.m_.rbegin();  // leading term under lex order
    while (!r.is_zero()) {
        auto rlt = r.m_.rbegin();
        int j = rlt->first.first - dlt->first.first;
        int k = rlt->first.second - dlt->first.second;
        if (j < 0 || k < 0) return false;
        FieldElem c = rlt->second / dlt->second;
        Poly2 mono(q.field(), vx_, vy_);
        mono.m_[{j, k}] = c;
        q = q + mono;
        r = r - mono * d;
    }
    if (quotient) *quotient = q;
    return true;
}

Poly1 Poly2::content_y() const {
    Poly1 g(field_, vx_);
    for (auto& c : coeffs_in_y()) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : poly_gcd(g, c);
    }
    return g;
}

Poly1 Poly2::content_x() const {
    Poly1 g(field_, vy_);
    for (auto& c : coeffs_in_x()) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : poly_gcd(g, c);
    }
    return g;
}

Poly2 Poly2::primitive_part(Poly1* content_removed_x, Poly1* content_removed_y) const {
    if (is_zero()) return *this;
    Poly2 out = *this;
    Poly1 cx = out.content_y();  // polynomial in vx dividing everything
    if (cx.deg() > 0) {
        auto cs = out.coeffs_in_y();
        for (auto& c : cs) c = c.is_zero() ? c : c.exact_div(cx);
        out = from_coeffs_in_y(cs, field_, vx_, vy_);
    }
    if (content_removed_x) *content_removed_x = cx;
    Poly1 cy = out.content_x();  // polynomial in vy
    if (cy.deg() > 0) {
        auto cs = out.coeffs_in_x();
        for (auto& c : cs) c = c.is_zero() ? c : c.exact_div(cy);
        Poly2 t = from_coeffs_in_y(cs, field_, vy_, vx_);
        out = t.swap_vars();
    }
    if (content_removed_y) *content_removed_y = cy;
    return out;
}

Poly2 Poly2::canonical() const {
    if (is_zero()) return *this;
    bool all_rat = true;
    for (auto& [k, v] : m_)
        if (!v.is_rational()) {
            all_rat = false;
            break;
        }
    if (!all_rat || !field_->is_rational_field()) {
        FieldElem lead = m_.rbegin()->second;
        return scale(lead.inv());
    }
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& [k, v] : m_) {
        Rat r = v.rational_value();
        mpz_class n = r.get_num(), d = r.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Rat factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (m_.rbegin()->second.rational_value() * factor < 0) factor = -factor;
    return scale(FieldElem(field_, factor));
}

std::string Poly2::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = m_.rbegin(); it != m_.rend(); ++it) {
        auto [j, k] = it->first;
        const FieldElem& c = it->second;
        std::string ks = c.str();
        if (!first) os << "+";
        first = false;
        std::string vars;
        if (j > 0) {
            vars += vx_;
            if (j > 1) vars += "^" + std::to_string(j);
        }
        if (k > 0) {
            if (!vars.empty()) vars += "*";
            vars += vy_;
            if (k > 1) vars += "^" + std::to_string(k);
        }
        if (vars.empty()) {
            os << (c.is_rational() ? ks : "(" + ks + ")");
        } else if (c.is_rational()) {
            if (ks == "1")
                os << vars;
            else if (ks == "-1")
                os << "-" << vars;
            else
                os << ks << "*" << vars;
        } else {
            os << "(" << ks << ")*" << vars;
        }
    }
    std::string s = os.str(), out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '+' && i + 1 < s.size() && s[i + 1] == '-') {
            out += '-';
            ++i;
        } else
            out += s[i];
    }
    return out;
}

// ----------------------------- elimination ----------------------------------

namespace {

// view a Poly2 as a dense polynomial in `elim` with Poly2 coefficients over
// the kept variable pair (kx, ky)
DP<Poly2> to_dp(const Poly2& p, char elim, char kx, char ky) {
    DP<Poly2> out;
    bool elim_is_x = (p.vx() == elim);
    if (!elim_is_x && p.vy() != elim) {
        // no occurrence of elim: degree-0 coefficient
        Poly2 c = p;
        if (p.is_zero()) return out;
        // re-host onto kept vars
        Poly2 hosted(p.field(), kx, ky);
        for (auto& [k, v] : p.terms()) {
            char active = (k.first > 0) ? p.vx() : p.vy();
            (void)active;
            int e1 = 0, e2 = 0;
            if (k.first > 0) {
                if (p.vx() == kx)
                    e1 = k.first;
                else if (p.vx() == ky)
                    e2 = k.first;
                else
                    throw std::invalid_argument("variable outside kept set");
            }
            if (k.second > 0) {
                if (p.vy() == kx)
                    e1 = k.second;
                else if (p.vy() == ky)
                    e2 = k.second;
                else
                    throw std::invalid_argument("variable outside kept set");
            }
            hosted.set(e1, e2, hosted.coeff(e1, e2) + v);
        }
        out.c.push_back(hosted);
        out.trim();
        return out;
    }
    char other = elim_is_x ? p.vy() : p.vx();
    int d = elim_is_x ? p.deg_x() : p.deg_y();
    out.c.assign((size_t)std::max(0, d + 1), Poly2(p.field(), kx, ky));
    for (auto& [k, v] : p.terms()) {
        int de = elim_is_x ? k.first : k.second;
        int dother = elim_is_x ? k.second : k.first;
        int e1 = 0, e2 = 0;
        if (dother > 0) {
            if (other == kx)
                e1 = dother;
            else if (other == ky)
                e2 = dother;
            else
                throw std::invalid_argument("variable outside kept set");
        }
        out.c[de].set(e1, e2, out.c[de].coeff(e1, e2) + v);
    }
    out.trim();
    return out;
}

}  // namespace

Poly2 poly2_resultant(const Poly2& a, const Poly2& b, char elim) {
    // kept variables: the non-eliminated actives of both inputs
    std::vector<char> kept;
    auto add_kept = [&](const Poly2& p) {
        if (p.vx() != elim && p.deg_x() > 0) kept.push_back(p.vx());
        if (p.vy() != elim && p.deg_y() > 0) kept.push_back(p.vy());
    };
    add_kept(a);
    add_kept(b);
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.size() > 2) throw std::invalid_argument("resultant would keep >2 variables");
    char kx, ky;
    if (kept.size() == 2) {
        kx = kept[0];
        ky = kept[1];
    } else if (kept.size() == 1) {
        kx = kept[0];
        ky = 0;
        for (char cnd : {'y', 'x', 'u', 'v', 'w', 't', 's'})
            if (cnd != kx && cnd != elim) {
                ky = cnd;
                break;
            }
    } else {
        kx = 'x';
        ky = 'y';
        if (kx == elim) kx = 'u';
        if (ky == elim) ky = 'v';
    }
    FieldPtr f = join_field2(a.field(), b.field());
    DP<Poly2> A = to_dp(a, elim, kx, ky);
    DP<Poly2> B = to_dp(b, elim, kx, ky);
    Poly2 one = Poly2::constant(FieldElem(f, 1), kx, ky);
    return prs_resultant(A, B, one);
}

Poly2 poly2_gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero()) return b.canonical();
    if (b.is_zero()) return a.canonical();
    if (a.vx() != b.vx() || a.vy() != b.vy()) {
        if (a.is_constant() || b.is_constant()) return a.one_like();
        throw std::invalid_argument("gcd on distinct variable pairs");
    }
    // recursive in vy over F[vx]; Gauss: gcd = gcd(contents) * gcd(primitive parts)
    Poly1 ca = a.content_y(), cb = b.content_y();
    Poly1 gc = poly_gcd(ca, cb);
    auto strip = [&](const Poly2& p, const Poly1& c) {
        auto cs = p.coeffs_in_y();
        for (auto& x : cs) x = x.is_zero() ? x : x.exact_div(c);
        return Poly2::from_coeffs_in_y(cs, p.field(), p.vx(), p.vy());
    };
    Poly2 A = strip(a, ca), B = strip(b, cb);
    auto as_dp = [](const Poly2& p) {
        DP<Poly1> out;
        out.c = p.coeffs_in_y();
        out.trim();
        return out;
    };
    DP<Poly1> U = as_dp(A), V = as_dp(B);
    if (U.deg() < V.deg()) std::swap(U, V);
    auto pp = [](DP<Poly1>& w) {
        Poly1 c = dp_content(w);
        if (!(c == c.one_like()))
            for (auto& x : w.c)
                if (!x.is_zero()) x = x.exact_div(c);
    };
    while (true) {
        if (V.is_zero()) break;
        if (V.deg() == 0) {
            // coprime primitive parts
            U.c.clear();
            U.c.push_back(V.c.front().one_like());
            break;
        }
        DP<Poly1> R = dp_prem(U, V);
        U = V;
        V = R;
        pp(V);
    }
    pp(U);
    Poly2 gpp = Poly2::from_coeffs_in_y(U.c, a.field(), a.vx(), a.vy());
    Poly2 gcont = Poly2::from_poly1(gc, a.vy(), true);
    gcont = gcont.rename(a.vx(), a.vy());
    return (gpp * gcont).canonical();
}

Poly2 poly2_squarefree_part(const Poly2& a) {
    if (a.is_zero()) throw std::domain_error("squarefree part of zero");
    if (a.is_constant()) return a.one_like();
    Poly2 g = poly2_gcd(a, a.derivative_x());
    g = poly2_gcd(g, a.derivative_y());
    if (g.is_constant()) return a.canonical();
    return a.exact_div(g.scale(g.terms().rbegin()->second.inv())).canonical();
}

std::vector<PolygonSegment> newton_polygon(const Poly2& k, const FieldElem& at_x,
                                           const FieldElem& at_y) {
    Poly2 t = k.translate(at_x, at_y);
    if (!t.coeff(0, 0).is_zero())
        throw std::domain_error("polynomial does not vanish at the expansion point");
    if (t.is_zero()) throw std::domain_error("zero polynomial has no Newton polygon");
    std::vector<Poly2::Key> pts;
    for (auto& [key, v] : t.terms()) pts.push_back(key);
    // Pareto frontier: minimal points under componentwise order
    std::vector<Poly2::Key> frontier;
    for (auto& p : pts) {
        bool dominated = false;
        for (auto& q : pts)
            if (q != p && q.first <= p.first && q.second <= p.second) {
                dominated = true;
                break;
            }
        if (!dominated) frontier.push_back(p);
    }
    std::sort(frontier.begin(), frontier.end());
    // frontier has strictly increasing i and strictly decreasing j; the lower
    // hull keeps vertices where the slope strictly increases
    std::vector<Poly2::Key> hull;
    for (auto& p : frontier) {
        while (hull.size() >= 2) {
            auto &a = hull[hull.size() - 2], &b = hull[hull.size() - 1];
            long cross = (long)(b.first - a.first) * (p.second - a.second) -
                         (long)(b.second - a.second) * (p.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<PolygonSegment> out;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        auto [i1, j1] = hull[i];
        auto [i2, j2] = hull[i + 1];
        PolygonSegment seg;
        seg.slope = rat(j2 - j1, i2 - i1);
        seg.exponent = rat(i2 - i1, j1 - j2);
        for (auto& p : pts) {
            long lhs = (long)(p.first - i1) * (j2 - j1) - (long)(p.second - j1) * (i2 - i1);
            bool between = p.first >= i1 && p.first <= i2;
            if (lhs == 0 && between) seg.support.push_back(p);
        }
        std::sort(seg.support.begin(), seg.support.end());
        out.push_back(std::move(seg));
    }
    return out;
}

}  // namespace pairshare
