#include "pairshare/sharing.hpp"

#include <algorithm>

namespace pairshare {

void SharedPairSpec::validate() const {
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            if (pairs[i].a == pairs[j].a)
                throw std::invalid_argument("shared a-values must be pairwise distinct");
            if (pairs[i].b == pairs[j].b)
                throw std::invalid_argument("shared b-values must be pairwise distinct");
        }
    if (!cm_flags.empty() && cm_flags.size() != pairs.size())
        throw std::invalid_argument("cm flag count mismatch");
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::SharedCM: return "shared-CM";
        case Verdict::SharedIM: return "shared-IM-not-CM";
        default: return "not-shared";
    }
}

namespace {

Divisor restrict_divisor(const Divisor& d, const PointSet& punctures, const FieldPtr& f,
                         char var) {
    Divisor out;
    Poly1 punct = punctures.poly(f, var);
    for (auto& [p, m] : d.entries) {
        Poly1 rest = p;
        Poly1 g = poly_gcd(rest, punct);
        while (g.deg() > 0) {
            rest = rest.exact_div(g);
            g = poly_gcd(rest, punct);
        }
        if (rest.deg() > 0) out.entries.emplace_back(rest.monic(), m);
    }
    out.inf_mult = punctures.inf ? 0 : d.inf_mult;
    return out;
}

}  // namespace

PairResult check_pair(const RatFunc& q, const RatFunc& qt, const ValuePair& pair,
                      const PointSet& punctures) {
    if (q.is_constant() || qt.is_constant())
        throw std::domain_error("sharing checks need nonconstant functions");
    PairResult r;
    r.pair = pair;
    Divisor dq = value_divisor(q, pair.a);
    Divisor dqt = value_divisor(qt, pair.b);
    const FieldPtr& f = q.field();
    char var = q.var();
    r.div_q = restrict_divisor(dq, punctures, f, var);
    r.div_qt = restrict_divisor(dqt, punctures, f, var);

    Poly1 sq = r.div_q.support_poly(f, var);
    Poly1 sqt = r.div_qt.support_poly(f, var);
    Poly1 g = poly_gcd(sq, sqt);
    Poly1 only_q = g.deg() > 0 ? sq.exact_div(g) : sq;
    Poly1 only_qt = g.deg() > 0 ? sqt.exact_div(g) : sqt;
    bool inf_q = r.div_q.inf_mult > 0, inf_qt = r.div_qt.inf_mult > 0;

    r.punctures_needed.add_class(only_q);
    r.punctures_needed.add_class(only_qt);
    if (inf_q != inf_qt) r.punctures_needed.add_inf();

    if (only_q.deg() > 0 || only_qt.deg() > 0 || inf_q != inf_qt) {
        r.verdict = Verdict::NotShared;
        if (only_q.deg() > 0)
            r.witness = only_q;
        else if (only_qt.deg() > 0)
            r.witness = only_qt;
        else
            r.witness_at_inf = true;
        return r;
    }
    if (r.div_q == r.div_qt) {
        r.verdict = Verdict::SharedCM;
        if (g.deg() > 0) r.witness = g;
        r.witness_at_inf = inf_q;
    } else {
        r.verdict = Verdict::SharedIM;
        if (g.deg() > 0) r.witness = g;
    }
    r.pattern = multiplicity_pattern(q, qt, pair, punctures);
    return r;
}

PatternReport multiplicity_pattern(const RatFunc& q, const RatFunc& qt,
                                   const ValuePair& pair, const PointSet& punctures) {
    const FieldPtr& f = q.field();
    char var = q.var();
    Divisor dq = restrict_divisor(value_divisor(q, pair.a), punctures, f, var);
    Divisor dqt = restrict_divisor(value_divisor(qt, pair.b), punctures, f, var);
    PatternReport rep;
    for (auto& [pq, mq] : dq.entries)
        for (auto& [pt, mt] : dqt.entries) {
            Poly1 g = poly_gcd(pq, pt);
            if (g.deg() < 1) continue;
            PatternClass c;
            c.pointclass = g;
            c.mult_q = mq;
            c.mult_qt = mt;
            rep.classes.push_back(std::move(c));
        }
    if (dq.inf_mult > 0 && dqt.inf_mult > 0) {
        PatternClass c;
        c.at_inf = true;
        c.mult_q = dq.inf_mult;
        c.mult_qt = dqt.inf_mult;
        rep.classes.push_back(std::move(c));
    }
    std::optional<int> common_p, common_q;
    for (auto& c : rep.classes) {
        int weight = c.at_inf ? 1 : c.pointclass.deg();
        if (c.mult_q == 1 && c.mult_qt == 1) {
            rep.count_11 += weight;
        } else if (c.mult_qt == 1) {
            rep.count_p1 += weight;
            if (common_p && *common_p != c.mult_q) {
                rep.violation = true;
                rep.note = "mixed (p:1) multiplicities";
            }
            common_p = c.mult_q;
        } else if (c.mult_q == 1) {
            rep.count_1q += weight;
            if (common_q && *common_q != c.mult_qt) {
                rep.violation = true;
                rep.note = "mixed (1:q) multiplicities";
            }
            common_q = c.mult_qt;
        } else {
            rep.violation = true;
            rep.note = "class with both multiplicities > 1";
        }
    }
    rep.p = common_p;
    rep.q = common_q;
    return rep;
}

SharingCertificate sharing_certificate(const RatFunc& q, const RatFunc& qt,
                                       const SharedPairSpec& spec) {
    if (spec.pairs.empty()) throw std::invalid_argument("empty pair specification");
    spec.validate();
    SharingCertificate cert;
    cert.excluded_mobius = mobius_relation_guard(q, qt);

    // first pass: accumulate the minimal puncture set
    for (auto& pr : spec.pairs) {
        PointSet none;
        PairResult probe = check_pair(q, qt, pr, none);
        cert.punctures.merge(probe.punctures_needed);
    }
    // second pass: verdicts off the accumulated punctures
    cert.all_shared = true;
    for (size_t i = 0; i < spec.pairs.size(); ++i) {
        PairResult r = check_pair(q, qt, spec.pairs[i], cert.punctures);
        if (r.verdict == Verdict::NotShared) cert.all_shared = false;
        if (!spec.cm_flags.empty() && spec.cm_flags[i] &&
            r.verdict != Verdict::SharedCM)
            cert.cm_claims_hold = false;
        cert.pairs.push_back(std::move(r));
    }
    cert.feasible = cert.punctures.sphere_points() <= 2;
    return cert;
}

bool mobius_relation_guard(const RatFunc& q, const RatFunc& qt, MobiusMap* out) {
    if (q.is_constant() || qt.is_constant()) return false;
    if (q.degree() != qt.degree()) return false;
    const FieldPtr& f = q.field();
    // three fibers with distinct finite values on both sides
    std::vector<FieldElem> xs, ys;
    for (long t = 0; (int)xs.size() < 3 && t < 200; ++t) {
        FieldElem tv(f, rat(t));
        Value x = q.eval(tv), y = qt.eval(tv);
        if (x.is_inf() || y.is_inf()) continue;
        bool fresh = true;
        for (auto& seen : xs)
            if (seen == x.v) fresh = false;
        for (auto& seen : ys)
            if (seen == y.v) fresh = false;
        if (!fresh) continue;
        xs.push_back(x.v);
        ys.push_back(y.v);
    }
    if (xs.size() < 3) return false;
    // solve a x + b - c x y - d y = 0 through the three fibers
    // eliminate: 3x4 homogeneous system, nullspace vector (a,b,c,d)
    std::vector<std::vector<FieldElem>> rows;
    for (int i = 0; i < 3; ++i)
        rows.push_back({xs[i], FieldElem(f, 1), -(xs[i] * ys[i]), -ys[i]});
    // gaussian elimination to echelon form
    int ncols = 4, nrows = 3;
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pr = -1;
        for (int r = rank; r < nrows; ++r)
            if (!rows[r][col].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[rank], rows[pr]);
        FieldElem inv = rows[rank][col].inv();
        for (int c = 0; c < ncols; ++c) rows[rank][c] = rows[rank][c] * inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            FieldElem factor = rows[r][col];
            for (int c = 0; c < ncols; ++c)
                rows[r][c] = rows[r][c] - factor * rows[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank > 3) return false;
    // free column -> candidate vector
    std::vector<FieldElem> sol(4, FieldElem(f, 0));
    int free_col = -1;
    for (int c = 0; c < ncols; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) {
            free_col = c;
            break;
        }
    if (free_col < 0) return false;
    sol[free_col] = FieldElem(f, 1);
    for (int r = rank - 1; r >= 0; --r) {
        FieldElem acc(f, 0);
        for (int c = pivot_col[r] + 1; c < ncols; ++c)
            acc = acc + rows[r][c] * sol[c];
        sol[pivot_col[r]] = -acc;
    }
    FieldElem a = sol[0], b = sol[1], c = sol[2], d = sol[3];
    if ((a * d - b * c).is_zero()) return false;
    // verify exactly: qt * (c q + d) - (a q + b) == 0
    RatFunc lhs = qt * (RatFunc::from_poly(Poly1::constant(c, q.var())) * q +
                        RatFunc::from_poly(Poly1::constant(d, q.var()))) -
                  (RatFunc::from_poly(Poly1::constant(a, q.var())) * q +
                   RatFunc::from_poly(Poly1::constant(b, q.var())));
    if (!lhs.is_zero()) return false;
    if (out) *out = MobiusMap(a, b, c, d);
    return true;
}

bool zeros_all_multiplicity_at_least(const std::vector<PairResult>& pairs, int bound) {
    for (auto& pr : pairs)
        for (auto& c : pr.pattern.classes)
            if (c.mult_q + c.mult_qt < bound) return false;
    return true;
}

bool one_side_only_multiple(const std::vector<PairResult>& pairs) {
    for (auto& pr : pairs) {
        bool q_ok = true, qt_ok = true;
        for (auto& c : pr.pattern.classes) {
            if (c.mult_q < 2) q_ok = false;
            if (c.mult_qt < 2) qt_ok = false;
        }
        if (!q_ok && !qt_ok) return false;
    }
    return true;
}

}  // namespace pairshare
