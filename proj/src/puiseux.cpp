#include "pairshare/puiseux.hpp"

#include <algorithm>
#include <map>

namespace pairshare {

namespace {

struct RawBranch {
    long ram = 1;                    // x = sigma^ram
    std::map<long, FieldElem> terms; // sigma-exponent -> coefficient
    bool needs_ext = false;
    Poly1 ext_poly;
    long pending_exp = -1;  // sigma-exponent whose coefficient left the field
    bool exact = false;
};

// K(s^q, s^p (c + y1)) / s^N with N the minimal s-valuation
Poly2 segment_transform(const Poly2& k, long p, long q, const FieldElem& c) {
    FieldPtr f = k.field();
    char vs = k.vx(), vy = k.vy();
    std::map<Poly2::Key, FieldElem> acc;
    for (auto& [key, a] : k.terms()) {
        long i = key.first, j = key.second;
        long base = q * i + p * j;
        // (c + y1)^j
        FieldElem binom(f, 1);
        FieldElem cpow = c.pow(j);
        for (long l = 0; l <= j; ++l) {
            // C(j,l) c^(j-l) y1^l
            FieldElem coeff = a * binom * (l == j ? FieldElem(f, 1) : c.pow(j - l));
            Poly2::Key nk{(int)base, (int)l};
            auto it = acc.find(nk);
            if (it == acc.end())
                acc[nk] = coeff;
            else
                it->second = it->second + coeff;
            binom = binom * FieldElem(f, j - l) / FieldElem(f, l + 1);
        }
        (void)cpow;
    }
    long minv = -1;
    for (auto& [key, v] : acc)
        if (!v.is_zero() && (minv < 0 || key.first < minv)) minv = key.first;
    Poly2 out(f, vs, vy);
    for (auto& [key, v] : acc)
        if (!v.is_zero()) out.set(key.first - (int)minv, key.second, v);
    return out;
}

std::vector<RawBranch> expand(const Poly2& k0, const Rat& target, int depth) {
    std::vector<RawBranch> out;
    if (depth > 48) {
        out.push_back(RawBranch{});
        return out;
    }
    Poly2 k = k0;
    FieldPtr f = k.field();
    // the zero series is a solution iff y | K
    {
        Poly2 yv = Poly2::variable(f, k.vy(), k.vx(), k.vy());
        Poly2 quot;
        bool stripped = false;
        while (k.divides(yv, &quot)) {
            k = quot;
            stripped = true;
        }
        if (stripped) {
            RawBranch zb;
            zb.exact = true;
            out.push_back(zb);
        }
        if (k.is_constant()) return out;
    }
    if (k.coeff(0, 0).is_zero() == false) return out;  // no further small solutions

    for (auto& seg : newton_polygon(k, FieldElem(f, 0), FieldElem(f, 0))) {
        if (seg.exponent <= 0) continue;
        long p = seg.exponent.get_num().get_si();
        long q = seg.exponent.get_den().get_si();
        // characteristic polynomial in the leading coefficient
        long jmin = seg.support.front().second;
        for (auto& pt : seg.support) jmin = std::min(jmin, (long)pt.second);
        Poly1 phi(f, 'c');
        {
            std::vector<FieldElem> cs;
            for (auto& pt : seg.support) {
                long idx = (pt.second - jmin) / q;
                if ((size_t)idx >= cs.size()) cs.resize(idx + 1, FieldElem(f, 0));
                cs[idx] = cs[idx] + k.coeff(pt.first, pt.second);
            }
            // phi as polynomial in c^q regrouped to c: roots c with phi(c^...)
            // exponents here are in units of c^q; rebuild in c
            std::vector<FieldElem> full((cs.size() - 1) * q + 1, FieldElem(f, 0));
            for (size_t i = 0; i < cs.size(); ++i) full[i * q] = cs[i];
            phi = Poly1(f, 'c', full);
        }
        RootFind rf = field_roots(phi);
        for (auto& [mult, fac] : rf.unresolved) {
            RawBranch rb;
            rb.ram = q;
            rb.needs_ext = true;
            rb.ext_poly = fac;
            rb.pending_exp = p;
            out.push_back(std::move(rb));
            (void)mult;
        }
        for (auto& [root, mult] : rf.roots) {
            if (root.is_zero()) continue;  // c != 0 by polygon construction
            Rat sub_target = target * q - p;
            std::vector<RawBranch> subs;
            if (sub_target < 1) {
                subs.push_back(RawBranch{});
            } else {
                Poly2 k1 = segment_transform(k, p, q, root);
                subs = expand(k1, sub_target, depth + 1);
            }
            for (auto& sb : subs) {
                RawBranch rb;
                rb.ram = q * sb.ram;
                rb.terms[p * sb.ram] = root;
                for (auto& [e, cf] : sb.terms) rb.terms[p * sb.ram + e] = cf;
                rb.needs_ext = sb.needs_ext;
                rb.ext_poly = sb.ext_poly;
                if (sb.pending_exp >= 0) rb.pending_exp = p * sb.ram + sb.pending_exp;
                rb.exact = sb.exact;
                out.push_back(std::move(rb));
            }
            (void)mult;
        }
    }
    return out;
}

// in-field roots of unity of order dividing ram, for conjugate dedup
std::vector<FieldElem> units_of_order(const FieldPtr& f, long ram) {
    Poly1 cyc(f, 'c');
    std::vector<FieldElem> cs((size_t)ram + 1, FieldElem(f, 0));
    cs[0] = FieldElem(f, -1);
    cs[ram] = FieldElem(f, 1);
    cyc = Poly1(f, 'c', cs);
    std::vector<FieldElem> out;
    for (auto& [r, m] : field_roots(cyc).roots) out.push_back(r);
    return out;
}

}  // namespace

std::vector<BranchExpansion> puiseux_branches(const Poly2& k, const FieldElem& at_x,
                                              const FieldElem& at_y, int terms) {
    Poly2 k0 = k.translate(at_x, at_y);
    if (!k0.coeff(0, 0).is_zero())
        throw std::domain_error("polynomial does not vanish at the expansion point");
    FieldPtr f = k0.field();
    {
        Poly2 xv = Poly2::variable(f, k0.vx(), k0.vx(), k0.vy());
        Poly2 quot;
        if (k0.divides(xv, &quot))
            throw std::domain_error("vertical line component through the point");
    }
    Rat target = rat(terms + std::max(k0.deg_x(), 1));
    auto raw = expand(k0, target, 0);

    // drop conjugate duplicates (u -> zeta u with zeta^ram = 1 in the field)
    auto conjugate_dup = [&](const RawBranch& a, const RawBranch& b) {
        if (a.ram != b.ram || a.terms.size() != b.terms.size()) return false;
        if (a.needs_ext || b.needs_ext) return false;
        for (auto& zeta : units_of_order(f, a.ram)) {
            bool match = true;
            for (auto& [e, cf] : a.terms) {
                auto it = b.terms.find(e);
                if (it == b.terms.end() || !(it->second == cf * zeta.pow(e))) {
                    match = false;
                    break;
                }
            }
            if (match) return true;
        }
        return false;
    };
    auto nicer = [](const RawBranch& a, const RawBranch& b) {
        // deterministic representative: shorter then smaller leading coefficient
        if (a.terms.empty() || b.terms.empty()) return false;
        std::string sa = a.terms.begin()->second.str();
        std::string sb = b.terms.begin()->second.str();
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        return sa < sb;
    };
    std::vector<RawBranch> dedup;
    for (auto& rb : raw) {
        bool merged = false;
        for (auto& kept : dedup) {
            if (conjugate_dup(kept, rb)) {
                if (nicer(rb, kept)) kept = rb;
                merged = true;
                break;
            }
        }
        if (!merged) dedup.push_back(rb);
    }

    std::vector<BranchExpansion> out;
    for (auto& rb : dedup) {
        BranchExpansion be;
        be.ramification = rb.ram;
        be.needs_extension = rb.needs_ext;
        be.extension_poly = rb.ext_poly;
        be.exact = rb.exact && !rb.needs_ext;
        long lead = -1;
        if (!rb.terms.empty())
            lead = rb.terms.begin()->first;
        else if (rb.pending_exp >= 0)
            lead = rb.pending_exp;
        if (lead < 0 && rb.exact) lead = 0;  // the zero branch
        be.leading_exponent = lead <= 0 ? Rat(0) : rat(lead, rb.ram);
        int kept = 0;
        for (auto& [e, cf] : rb.terms) {
            if (kept >= terms) break;
            be.terms.emplace_back(e, cf);
            ++kept;
        }
        // certify: substitute the truncation, measure the residual valuation
        if (!rb.terms.empty() && !rb.needs_ext) {
            Poly1 ytr(f, 'u');
            std::vector<FieldElem> cs;
            for (auto& [e, cf] : be.terms) {
                if ((size_t)e >= cs.size()) cs.resize(e + 1, FieldElem(f, 0));
                cs[e] = cf;
            }
            ytr = Poly1(f, 'u', cs);
            Poly1 xpow = Poly1::variable(f, 'u');
            Poly1 res(f, 'u');
            for (auto& [key, a] : k0.terms()) {
                Poly1 term = Poly1::constant(a, 'u');
                for (int i = 0; i < key.first; ++i)
                    for (long r = 0; r < rb.ram; ++r) term = term * xpow;
                for (int j = 0; j < key.second; ++j) term = term * ytr;
                res = res + term;
            }
            if (res.is_zero()) {
                be.exact = true;
                be.certified_order = -1;
            } else {
                long v = 0;
                while (res.coeff(v).is_zero()) ++v;
                be.certified_order = v;
            }
        }
        out.push_back(std::move(be));
    }
    std::sort(out.begin(), out.end(), [](const BranchExpansion& a, const BranchExpansion& b) {
        return a.leading_exponent < b.leading_exponent;
    });
    return out;
}

}  // namespace pairshare
