#include "pairshare/curve.hpp"

#include <sstream>

namespace pairshare {

namespace {

// dense exact linear algebra over the field
using Row = std::vector<FieldElem>;
using Matrix = std::vector<Row>;

int echelon(Matrix& m, std::vector<int>& pivots, int pivot_cols = -1) {
    int rows = (int)m.size(), cols = rows ? (int)m[0].size() : 0;
    if (pivot_cols < 0) pivot_cols = cols;
    int rank = 0;
    for (int col = 0; col < pivot_cols && rank < rows; ++col) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][col].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[rank], m[pr]);
        FieldElem inv = m[rank][col].inv();
        for (int c = 0; c < cols; ++c) m[rank][c] = m[rank][c] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            FieldElem f = m[r][col];
            for (int c = 0; c < cols; ++c) m[r][c] = m[r][c] - f * m[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    return rank;
}

// solve M v = rhs exactly; nullopt when inconsistent or underdetermined
std::optional<Row> linsolve(Matrix m, Row rhs) {
    int rows = (int)m.size(), cols = rows ? (int)m[0].size() : 0;
    for (int r = 0; r < rows; ++r) m[r].push_back(rhs[r]);
    std::vector<int> pivots;
    int rank = echelon(m, pivots, cols);
    for (int r = rank; r < rows; ++r)
        if (!m[r][cols].is_zero()) return std::nullopt;  // inconsistent
    if (rank < cols) return std::nullopt;                // underdetermined
    Row sol((size_t)cols, rhs.empty() ? FieldElem() : rhs[0].zero_like());
    for (int r = 0; r < rank; ++r) sol[pivots[r]] = m[r][cols];
    return sol;
}

std::vector<Row> nullspace(Matrix m) {
    int rows = (int)m.size(), cols = rows ? (int)m[0].size() : 0;
    std::vector<int> pivots;
    int rank = echelon(m, pivots);
    std::vector<Row> basis;
    FieldElem zero = m.empty() ? FieldElem() : m[0][0].zero_like();
    for (int c = 0; c < cols; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
        Row v((size_t)cols, zero);
        v[c] = zero.one_like();
        for (int r = 0; r < rank; ++r) {
            FieldElem acc = zero;
            for (int cc = pivots[r] + 1; cc < cols; ++cc) acc = acc + m[r][cc] * v[cc];
            v[pivots[r]] = -acc;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::pair<FieldElem, FieldElem>> finite_pairs(const SharedPairSpec& spec) {
    std::vector<std::pair<FieldElem, FieldElem>> out;
    for (auto& pr : spec.pairs) {
        if (pr.a.is_inf() || pr.b.is_inf())
            throw std::invalid_argument("operation needs finite pairs");
        out.emplace_back(pr.a.v, pr.b.v);
    }
    return out;
}

// is p (monic) a pure power (x - r)^s? returns r
std::optional<FieldElem> pure_linear_power_root(const Poly1& p) {
    int s = p.deg();
    if (s < 1) return std::nullopt;
    FieldElem r = -(p.coeff(s - 1) / (p.lc() * FieldElem(p.field(), s)));
    Poly1 lin = Poly1::variable(p.field(), p.var()) - Poly1::constant(r, p.var());
    Poly1 power = Poly1::constant(p.lc(), p.var());
    for (int i = 0; i < s; ++i) power = power * lin;
    if (power == p) return r;
    return std::nullopt;
}

}  // namespace

bool on_curve(const Poly2& k, const RatFunc& q, const RatFunc& qt) {
    if (k.is_zero()) return true;
    int dx = k.deg_x(), dy = k.deg_y();
    char var = q.var();
    FieldPtr f = k.field();
    // precompute powers
    auto powers = [&](const Poly1& p, int top) {
        std::vector<Poly1> out;
        out.push_back(Poly1::constant(FieldElem(f, 1), var));
        for (int i = 1; i <= top; ++i) out.push_back(out.back() * p);
        return out;
    };
    auto nq = powers(q.num(), dx), dq = powers(q.den(), dx);
    auto nt = powers(qt.num(), dy), dt = powers(qt.den(), dy);
    Poly1 acc(f, var);
    for (auto& [key, c] : k.terms()) {
        auto [j, kk] = key;
        Poly1 term = Poly1::constant(c, var) * nq[j] * dq[dx - j] * nt[kk] * dt[dy - kk];
        acc = acc + term;
    }
    return acc.is_zero();
}

CurveModel implicitize(const RatFunc& q, const RatFunc& qt) {
    if (q.is_constant() && qt.is_constant())
        throw std::invalid_argument("implicitize needs a nonconstant pair");
    if (q.var() != qt.var()) throw std::invalid_argument("parameter variables differ");
    char t = q.var();
    char ox = (t == 'x') ? 'u' : 'x';
    char oy = (t == 'y') ? 'v' : 'y';
    FieldPtr f = q.field();
    Poly2 a = Poly2::variable(f, ox, t, ox) * Poly2::from_poly1(q.den(), ox, true) -
              Poly2::from_poly1(q.num(), ox, true);
    Poly2 b = Poly2::variable(f, oy, t, oy) * Poly2::from_poly1(qt.den(), oy, true) -
              Poly2::from_poly1(qt.num(), oy, true);
    Poly2 res = poly2_resultant(a, b, t);
    if (res.is_zero()) throw std::domain_error("identically zero resultant (malformed pair)");

    CurveModel model;
    std::ostringstream log;
    Poly1 cx, cy;
    Poly2 prim = res.primitive_part(&cx, &cy);
    if (cx.deg() > 0) log << "content(" << std::string(1, ox) << "): " << cx.str() << "; ";
    if (cy.deg() > 0) log << "content(" << std::string(1, oy) << "): " << cy.str() << "; ";
    Poly2 k = poly2_squarefree_part(prim);
    if (!on_curve(k, q, qt)) throw std::logic_error("implicit curve fails the exact check");
    // power structure Res = c * K^d
    int d = 0;
    Poly2 rest = prim;
    Poly2 quot;
    while (rest.divides(k, &quot)) {
        rest = quot;
        ++d;
    }
    if (!rest.is_constant())
        log << "extraneous factor: " << rest.canonical().str() << "; ";
    model.k = k.canonical();
    model.map_degree = d;
    model.deg_x = model.k.deg_x();
    model.deg_y = model.k.deg_y();
    model.content_removed = log.str();
    return model;
}

FiberCheck fiber_check(const Poly2& k, const SharedPairSpec& spec) {
    if (k.is_zero()) throw std::invalid_argument("zero curve polynomial");
    FiberCheck out;
    out.all_monomial = true;
    auto fiber = [&](const Poly1& f, const FieldElem& root) {
        FiberResult r;
        if (f.is_zero())
            throw std::domain_error("curve vanishes identically on a fiber line");
        Poly1 shifted = f.translate(root);  // f(v + root)
        int low = 0;
        while (low <= shifted.deg() && shifted.coeff(low).is_zero()) ++low;
        r.exponent = low;
        r.monomial = (low == shifted.deg()) && low >= 1;
        Poly1 lin = Poly1::variable(f.field(), f.var()) - Poly1::constant(root, f.var());
        Poly1 rest = f;
        for (int i = 0; i < low; ++i) rest = rest.exact_div(lin);
        r.extra = rest.monic();
        return r;
    };
    for (auto& pr : spec.pairs) {
        if (pr.a.is_inf() || pr.b.is_inf()) {
            FiberResult r;
            r.skipped = true;
            out.x_fibers.push_back(r);
            out.y_fibers.push_back(r);
            continue;
        }
        FiberResult rx = fiber(k.subst_x(pr.a.v), pr.b.v);
        FiberResult ry = fiber(k.subst_y(pr.b.v), pr.a.v);
        if (!rx.monomial || !ry.monomial) out.all_monomial = false;
        out.x_fibers.push_back(std::move(rx));
        out.y_fibers.push_back(std::move(ry));
    }
    return out;
}

ShapeReport shape_check(const Poly2& k, const SharedPairSpec& spec) {
    ShapeReport rep;
    rep.scale = FieldElem(k.field(), 0);
    auto pairs = finite_pairs(spec);
    int m = k.deg_y(), n = k.deg_x();
    rep.degree_bounds_ok = (m <= 9 && n <= 9 && k.total_deg() <= 13);

    // corner blocks: y^m coefficient = c0 (x - a_lambda)^s,
    //                x^n coefficient = c0 A (y - b_kappa)^t (after removing a
    //                possible overlap of the first block)
    auto cy = k.coeffs_in_y();
    Poly1 lead_y = cy.empty() ? Poly1(k.field(), k.vx()) : cy.back();
    do {
        if (lead_y.deg() < 1) {
            rep.notes.push_back("leading y-coefficient is constant in x (no (x-a)^s block)");
            break;
        }
        auto root = pure_linear_power_root(lead_y.monic());
        if (!root) {
            rep.notes.push_back("leading y-coefficient is not a pure linear power");
            break;
        }
        int lambda = -1;
        for (size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i].first == *root) lambda = (int)i;
        if (lambda < 0) {
            rep.notes.push_back("anchored x-root is not one of the shared a-values");
            break;
        }
        FieldElem c0 = lead_y.lc();
        int s = lead_y.deg();
        // subtract the first block, inspect the x^n coefficient
        Poly2 block1(k.field(), k.vx(), k.vy());
        Poly1 lin = Poly1::variable(k.field(), k.vx()) -
                    Poly1::constant(*root, k.vx());
        Poly1 pw = Poly1::constant(c0, k.vx());
        for (int i = 0; i < s; ++i) pw = pw * lin;
        for (int j = 0; j <= pw.deg(); ++j)
            if (!pw.coeff(j).is_zero()) block1.set(j, m, pw.coeff(j));
        Poly2 k1 = k - block1;
        auto cx1 = k1.coeffs_in_x();
        Poly1 lead_x = ((int)cx1.size() > n && n >= 0) ? cx1[n] : Poly1(k.field(), k.vy());
        if (lead_x.deg() < 1) {
            rep.notes.push_back("leading x-coefficient carries no (y-b)^t block");
            break;
        }
        auto root2 = pure_linear_power_root(lead_x.monic());
        if (!root2) {
            rep.notes.push_back("leading x-coefficient is not a pure linear power");
            break;
        }
        int kappa = -1;
        for (size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i].second == *root2) kappa = (int)i;
        if (kappa < 0) {
            rep.notes.push_back("anchored y-root is not one of the shared b-values");
            break;
        }
        int t = lead_x.deg();
        rep.lambda = lambda;
        rep.kappa = kappa;
        rep.s = s;
        rep.t = t;
        rep.scale = lead_x.lc() / c0;  // A after normalizing the first block monic
        rep.matched = (1 <= s && s <= 4 && 1 <= t && t <= 4);
        if (!rep.matched) rep.notes.push_back("corner exponents outside [1,4]");
    } while (false);

    // all-but-one derivative vanishing per pair, chains j<m and l<n
    rep.derivative_conditions_ok = true;
    for (size_t nu = 0; nu < pairs.size(); ++nu) {
        auto& [a, b] = pairs[nu];
        int nonzero_y = 0, nonzero_x = 0;
        Poly2 dy = k;
        for (int j = 0; j < m; ++j) {
            if (!dy.eval(a, b).is_zero()) ++nonzero_y;
            dy = dy.derivative_y();
        }
        Poly2 dx = k;
        for (int l = 0; l < n; ++l) {
            if (!dx.eval(a, b).is_zero()) ++nonzero_x;
            dx = dx.derivative_x();
        }
        if (nonzero_y > 1 || nonzero_x > 1) {
            rep.derivative_conditions_ok = false;
            rep.notes.push_back("pair " + std::to_string(nu) +
                                " violates the all-but-one vanishing condition");
        }
    }
    return rep;
}

AuxQuadratics aux_quadratics(const SharedPairSpec& spec) {
    auto pairs = finite_pairs(spec);
    if (pairs.size() != 4) throw std::invalid_argument("need exactly four finite pairs");
    FieldPtr f = pairs[0].first.field();
    for (auto& [a, b] : pairs) {
        if (!Field::same(f, a.field())) f = a.field();
        if (!Field::same(f, b.field())) f = b.field();
    }
    auto lift = [&](const FieldElem& x) { return FieldElem(f, 1) * x; };
    AuxQuadratics out;
    Matrix msys;
    Row rhs_p, rhs_pt;
    for (auto& [a0, b0] : pairs) {
        FieldElem a = lift(a0), b = lift(b0);
        msys.push_back({a * b, a, b, FieldElem(f, 1)});
        rhs_p.push_back(-(a * a));
        rhs_pt.push_back(-(b * b));
    }
    auto solp = linsolve(msys, rhs_p);
    auto solpt = linsolve(msys, rhs_pt);
    if (solp && solpt) {
        Poly2 p(f, 'x', 'y');
        p.set(2, 0, FieldElem(f, 1));
        p.set(1, 1, (*solp)[0]);
        p.set(1, 0, (*solp)[1]);
        p.set(0, 1, (*solp)[2]);
        p.set(0, 0, (*solp)[3]);
        Poly2 pt(f, 'x', 'y');
        pt.set(0, 2, FieldElem(f, 1));
        pt.set(1, 1, (*solpt)[0]);
        pt.set(1, 0, (*solpt)[1]);
        pt.set(0, 1, (*solpt)[2]);
        pt.set(0, 0, (*solpt)[3]);
        out.p = p;
        out.pt = pt;
        out.degenerate = false;
        return out;
    }
    // degenerate: the pair values are Mobius-related; produce the bilinear
    // class and a complementary basis quadric
    out.degenerate = true;
    auto ns = nullspace(msys);
    if (ns.empty()) throw std::logic_error("inconsistent pair system without nullspace");
    Row v = ns.front();
    Poly2 p0(f, 'x', 'y');
    p0.set(1, 1, v[0]);
    p0.set(1, 0, v[1]);
    p0.set(0, 1, v[2]);
    p0.set(0, 0, v[3]);
    out.p0 = p0.canonical();
    FieldElem det = v[1] * v[2] - v[0] * v[3];  // c3 c4 - c2 c5
    if (!det.is_zero())
        out.relation = MobiusMap(-v[1], -v[3], v[0], v[2]);
    // full quadric space {x^2, xy, y^2, x, y, 1}
    Matrix full;
    for (auto& [a0, b0] : pairs) {
        FieldElem a = lift(a0), b = lift(b0);
        full.push_back({a * a, a * b, b * b, a, b, FieldElem(f, 1)});
    }
    auto fns = nullspace(full);
    // pick a vector independent of p0 with zero xy coordinate
    Row embedded{FieldElem(f, 0), v[0], FieldElem(f, 0), v[1], v[2], v[3]};
    for (auto& w : fns) {
        Row cand = w;
        if (!cand[1].is_zero()) {
            if (v[0].is_zero()) continue;  // cannot cancel xy against p0
            FieldElem factor = cand[1] / v[0];
            for (int i = 0; i < 6; ++i) cand[i] = cand[i] - factor * embedded[i];
        }
        bool nonzero = false;
        for (auto& x : cand) nonzero = nonzero || !x.is_zero();
        if (!nonzero) continue;
        Poly2 pt0(f, 'x', 'y');
        pt0.set(2, 0, cand[0]);
        pt0.set(1, 1, cand[1]);
        pt0.set(0, 2, cand[2]);
        pt0.set(1, 0, cand[3]);
        pt0.set(0, 1, cand[4]);
        pt0.set(0, 0, cand[5]);
        out.pt0 = pt0.canonical();
        break;
    }
    return out;
}

Poly2 build_eliminant(const Poly2& p, const Poly2& pt, const SharedPairSpec& spec,
                      const FieldElem& psi0, const FieldElem& u, const FieldElem& v) {
    auto pairs = finite_pairs(spec);
    for (auto& [a, b] : pairs) {
        if (!p.eval(a, b).is_zero() || !pt.eval(a, b).is_zero())
            throw std::invalid_argument("quadrics must vanish on every shared pair");
    }
    FieldPtr f = p.field();
    char vx = p.vx(), vy = p.vy();
    Poly2 ax = Poly2::constant(FieldElem(f, 1), vx, vy);
    Poly2 by = ax;
    for (auto& [a, b] : pairs) {
        Poly2 lx(f, vx, vy), ly(f, vx, vy);
        lx.set(1, 0, FieldElem(f, 1));
        lx.set(0, 0, -a);
        ly.set(0, 1, FieldElem(f, 1));
        ly.set(0, 0, -b);
        ax = ax * lx;
        by = by * ly;
    }
    Poly2 p3 = p.pow(3), pt3 = pt.pow(3);
    Poly2 wx = pt * p.derivative_x() - p * pt.derivative_x();
    Poly2 wy = pt * p.derivative_y() - p * pt.derivative_y();
    Poly2 h = p3 * pt3;
    h = h.scale(psi0);
    h = h - (wx * pt3 * ax).scale(u);
    h = h - (wy * p3 * by).scale(v);
    return h;
}

std::vector<EliminationCandidate> resultant_pair(const Poly2& h, char elim) {
    char other = (h.vx() == elim) ? h.vy() : h.vx();
    if (other == elim) throw std::invalid_argument("eliminated variable not present");
    Poly2 hy = h;  // H(elim, other) as given
    char second = (other == 'y') ? 'x' : 'y';
    Poly2 hx = (h.vx() == elim) ? h.rename(elim, second) : h.rename(second, elim);
    Poly2 res = poly2_resultant(hy, hx, elim);
    if (res.is_zero()) throw std::domain_error("identically zero resultant");
    // strip the diagonal power (x - y)^k
    Poly2 diag(res.field(), res.vx(), res.vy());
    diag.set(1, 0, FieldElem(res.field(), 1));
    diag.set(0, 1, FieldElem(res.field(), -1));
    int dpow = 0;
    Poly2 rest = res, quot;
    while (rest.divides(diag, &quot)) {
        rest = quot;
        ++dpow;
    }
    std::ostringstream log;
    Poly1 cx, cy;
    rest = rest.primitive_part(&cx, &cy);
    if (cx.deg() > 0) log << "content(x): " << cx.str() << "; ";
    if (cy.deg() > 0) log << "content(y): " << cy.str() << "; ";

    // per probe x-value: the power k when the fiber is a pure power c (y-r)^k
    auto signature = [&](const Poly2& k) {
        std::vector<std::pair<std::string, int>> sig;
        for (long probe : {0L, 1L}) {
            Poly1 fib = k.subst_x(FieldElem(k.field(), probe));
            int expo = -1;
            if (!fib.is_zero() && fib.deg() >= 1 && pure_linear_power_root(fib.monic()))
                expo = fib.deg();
            sig.emplace_back(std::to_string(probe), expo);
        }
        return sig;
    };
    std::vector<EliminationCandidate> out;
    EliminationCandidate main;
    main.k = rest.canonical();
    main.diagonal_power = dpow;
    main.content_removed = log.str();
    main.fiber_signature = signature(main.k);
    out.push_back(main);
    Poly2 sf = poly2_squarefree_part(rest);
    if (sf != main.k) {
        EliminationCandidate extra;
        extra.k = sf;
        extra.diagonal_power = dpow;
        extra.content_removed = log.str() + "squarefree reduction; ";
        extra.fiber_signature = signature(sf);
        out.push_back(extra);
    }
    if (out.front().k.is_constant()) throw std::domain_error("no nontrivial factor remains");
    return out;
}

}  // namespace pairshare
