#include "pairshare/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace pairshare {

std::vector<Cplx> poly_roots_complex(const Poly1& p) {
    if (p.deg() < 1) throw std::domain_error("root finding needs degree >= 1");
    int n = p.deg();
    std::vector<Cplx> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = p.coeff(i).to_complex();
    // scale bound
    double bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i] / c[n]));
    double radius = 1.0 + bound;
    std::vector<Cplx> z(n);
    Cplx seed(0.4, 0.9);
    Cplx acc = 1.0;
    for (int i = 0; i < n; ++i) {
        acc *= seed;
        z[i] = radius * acc / std::abs(acc) * (0.3 + 0.7 * (i + 1.0) / n);
    }
    auto eval = [&](Cplx x) {
        Cplx v = 0;
        for (int i = n; i >= 0; --i) v = v * x + c[i];
        return v;
    };
    for (int it = 0; it < 500; ++it) {
        double shift = 0;
        for (int i = 0; i < n; ++i) {
            Cplx denom = c[n];
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (std::abs(denom) < 1e-300) continue;
            Cplx d = eval(z[i]) / denom;
            z[i] -= d;
            shift = std::max(shift, std::abs(d));
        }
        if (shift < 1e-14 * (1.0 + radius)) break;
    }
    // Newton polish
    auto deriv = [&](Cplx x) {
        Cplx v = 0;
        for (int i = n; i >= 1; --i) v = v * x + (double)i * c[i];
        return v;
    };
    for (auto& r : z)
        for (int it = 0; it < 4; ++it) {
            Cplx d = deriv(r);
            if (std::abs(d) < 1e-200) break;
            r -= eval(r) / d;
        }
    return z;
}

std::optional<FieldElem> lift_elem(const Cplx& z, const FieldPtr& field, long max_den,
                                   double tol) {
    if (field->is_rational_field()) {
        if (std::abs(z.imag()) > tol * (1.0 + std::abs(z))) return std::nullopt;
        auto r = rat_reconstruct(z.real(), max_den, tol);
        if (!r) return std::nullopt;
        return FieldElem(field, *r);
    }
    Cplx alpha = field->alpha();
    double a0, a1;
    if (std::abs(alpha.imag()) > 1e-12) {
        a1 = z.imag() / alpha.imag();
        a0 = z.real() - a1 * alpha.real();
    } else {
        // real quadratic: only a rational value is recoverable from one embedding
        if (std::abs(z.imag()) > tol * (1.0 + std::abs(z))) return std::nullopt;
        a1 = 0;
        a0 = z.real();
    }
    auto r0 = rat_reconstruct(a0, max_den, tol);
    auto r1 = rat_reconstruct(a1, max_den, tol);
    if (!r0 || !r1) return std::nullopt;
    return FieldElem(field, *r0, *r1);
}

namespace {

Poly1 conj_poly(const Poly1& p) {
    std::vector<FieldElem> c;
    for (int i = 0; i <= p.deg(); ++i) c.push_back(p.coeff(i).conj());
    return Poly1(p.field(), p.var(), c);
}

// in-field roots of one squarefree factor
void factor_roots(const Poly1& f, std::vector<FieldElem>& roots, Poly1& leftover) {
    Poly1 rest = f.monic();
    for (;;) {
        if (rest.deg() < 1) break;
        if (rest.deg() == 1) {
            roots.push_back(-rest.coeff(0));
            rest = Poly1::constant(FieldElem(rest.field(), 1), rest.var());
            break;
        }
        bool found = false;
        std::vector<FieldElem> candidates;
        auto zs = poly_roots_complex(rest);
        if (rest.field()->is_rational_field()) {
            for (auto& z : zs) {
                auto c = lift_elem(z, rest.field(), 1000000, 1e-6);
                if (c) candidates.push_back(*c);
            }
        } else {
            // pair the roots with those of the conjugate polynomial:
            // a0 + a1*alpha = z, a0 + a1*conj(alpha) = w
            Cplx al = rest.field()->alpha();
            Cplx alc = -rat_d(rest.field()->c1()) - al;
            auto ws = poly_roots_complex(conj_poly(rest));
            for (auto& z : zs)
                for (auto& w : ws) {
                    Cplx a1 = (z - w) / (al - alc);
                    Cplx a0 = z - a1 * al;
                    if (std::abs(a0.imag()) > 1e-6 * (1 + std::abs(a0))) continue;
                    if (std::abs(a1.imag()) > 1e-6 * (1 + std::abs(a1))) continue;
                    auto r0 = rat_reconstruct(a0.real(), 1000000, 1e-6);
                    auto r1 = rat_reconstruct(a1.real(), 1000000, 1e-6);
                    if (!r0 || !r1) continue;
                    candidates.emplace_back(rest.field(), *r0, *r1);
                }
        }
        for (auto& cand : candidates) {
            if (!rest.eval(cand).is_zero()) continue;
            roots.push_back(cand);
            Poly1 lin = Poly1::variable(rest.field(), rest.var()) -
                        Poly1::constant(cand, rest.var());
            rest = rest.exact_div(lin);
            found = true;
            break;
        }
        if (!found) break;
    }
    if (rest.deg() >= 1) leftover = rest;
}

}  // namespace

RootFind field_roots(const Poly1& p) {
    RootFind out;
    if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
    if (p.deg() == 0) return out;
    for (auto& [mult, factor] : squarefree_decomposition(p)) {
        std::vector<FieldElem> roots;
        Poly1 leftover(p.field(), p.var());
        factor_roots(factor, roots, leftover);
        for (auto& r : roots) out.roots.emplace_back(r, mult);
        if (leftover.deg() >= 1) out.unresolved.emplace_back(mult, leftover);
    }
    return out;
}

}  // namespace pairshare
