#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pairshare/sharing.hpp"

using namespace pairshare;

namespace {
Poly1 P(std::vector<long> cs, char var = 'w') {
    std::vector<Rat> rs(cs.begin(), cs.end());
    return Poly1::from_rats(rs, var);
}
RatFunc gund_f() { return RatFunc::normalize(P({1, 1}), P({1, -2, 1})); }
RatFunc gund_g() { return RatFunc::normalize(P({1, 2, 1}), P({-8, 8})); }
RatFunc para_q(long c) { return RatFunc::normalize(P({8}, 't'), P({4, 2 * c, 1}, 't')); }
RatFunc para_qt(long c) { return RatFunc::normalize(P({0, 8}, 't'), P({4, 2 * c, 1}, 't')); }

SharedPairSpec para_spec(long c) {
    // (0,0), (8/D, -8c/D), (2/(2+c), 4/(2+c)), (2/(2-c), -4/(2-c)), D = 4-c^2
    Rat D = rat(4 - c * c);
    SharedPairSpec s;
    s.pairs.push_back({val(0), val(0)});
    s.pairs.push_back({Value(FieldElem(8 / D)), Value(FieldElem(-8 * c / D))});
    s.pairs.push_back({Value(FieldElem(rat(2, 2 + c))), Value(FieldElem(rat(4, 2 + c)))});
    s.pairs.push_back({Value(FieldElem(rat(2, 2 - c))), Value(FieldElem(rat(-4, 2 - c)))});
    return s;
}
}  // namespace

TEST_CASE("check_pair on the Gundersen pair") {
    RatFunc f = gund_f(), g = gund_g();
    PointSet punct;  // puncture at w=0
    punct.add_class(P({0, 1}).monic());

    // (-1/2, 1/4) is shared CM with witness w^2+3
    PairResult cm = check_pair(f, g, {val(-1, 2), val(1, 4)}, punct);
    CHECK(cm.verdict == Verdict::SharedCM);
    REQUIRE(cm.witness.has_value());
    CHECK(*cm.witness == P({3, 0, 1}));

    // (0,0) shared IM, not CM: divisors (w+1)+(inf) vs (w+1)^2 -- the infinity
    // class separates, so a puncture at infinity is required
    PairResult z = check_pair(f, g, {val(0), val(0)}, punct);
    CHECK(z.verdict == Verdict::NotShared);
    CHECK(z.punctures_needed.inf);
    PointSet with_inf = punct;
    with_inf.add_inf();
    PairResult z2 = check_pair(f, g, {val(0), val(0)}, with_inf);
    CHECK(z2.verdict == Verdict::SharedIM);
    REQUIRE(z2.pattern.classes.size() == 1);
    CHECK(z2.pattern.classes[0].mult_q == 1);
    CHECK(z2.pattern.classes[0].mult_qt == 2);

    // trivial CM of identical functions
    RatFunc idt = RatFunc::from_poly(P({0, 1}, 't'));
    PairResult tv = check_pair(idt, idt, {val(5), val(5)}, PointSet{});
    CHECK(tv.verdict == Verdict::SharedCM);

    // symmetry: swapping the roles flips the pattern
    PairResult sym = check_pair(g, f, {val(0), val(0)}, with_inf);
    CHECK(sym.verdict == z2.verdict);
    CHECK(sym.pattern.classes[0].mult_q == 2);
    CHECK(sym.pattern.classes[0].mult_qt == 1);
}

TEST_CASE("multiplicity patterns") {
    RatFunc f = gund_f(), g = gund_g();
    PointSet punct;
    punct.add_class(P({0, 1}));
    punct.add_inf();
    // (-1/8, -1/8): pattern (2:1) at w=-3
    auto rep = multiplicity_pattern(f, g, {val(-1, 8), val(-1, 8)}, punct);
    REQUIRE(rep.classes.size() == 1);
    CHECK(rep.classes[0].pointclass == P({3, 1}));
    CHECK(rep.classes[0].mult_q == 2);
    CHECK(rep.classes[0].mult_qt == 1);
    CHECK(rep.p == 2);
    CHECK(!rep.violation);
    // identical functions: everything (1:1) on a squarefree fiber
    RatFunc q = RatFunc::normalize(P({0, 1, 1}, 't'), P({1}, 't'));
    auto rep2 = multiplicity_pattern(q, q, {val(2), val(2)}, PointSet{});
    for (auto& c : rep2.classes) {
        CHECK(c.mult_q == 1);
        CHECK(c.mult_qt == 1);
    }
}

TEST_CASE("sharing certificate for the quadric family") {
    // c=1: punctures {0, -4}, feasible
    auto cert1 = sharing_certificate(para_q(1), para_qt(1), para_spec(1));
    CHECK(cert1.all_shared);
    CHECK(cert1.feasible);
    CHECK(!cert1.punctures.inf);
    Poly1 pp = cert1.punctures.poly(Field::rationals(), 't');
    CHECK(pp.deg() == 2);
    CHECK(pp.eval(fe(0)).is_zero());
    CHECK(pp.eval(fe(-4)).is_zero());
    // every pair shares off the punctures with a (2:1)/(1:2) pattern
    for (auto& prr : cert1.pairs) CHECK(prr.verdict != Verdict::NotShared);

    // c=3: punctures {0, -4/3, -8, -4}: four points, infeasible
    auto cert3 = sharing_certificate(para_q(3), para_qt(3), para_spec(3));
    CHECK(cert3.all_shared);
    CHECK(!cert3.feasible);
    CHECK(cert3.punctures.sphere_points() == 4);
    Poly1 p3 = cert3.punctures.poly(Field::rationals(), 't');
    for (long num : {0L, -4L, -8L}) CHECK(p3.eval(fe(num)).is_zero());
    CHECK(p3.eval(fe(-4, 3)).is_zero());

    // the infinity pair is CM on both
    SharedPairSpec inf_spec;
    inf_spec.pairs.push_back({vinf(), vinf()});
    auto icert = sharing_certificate(para_q(3), para_qt(3), inf_spec);
    CHECK(icert.pairs[0].verdict == Verdict::SharedCM);
}

TEST_CASE("gundersen full certificate: punctures {0, inf}, feasible") {
    RatFunc f = gund_f(), g = gund_g();
    SharedPairSpec s;
    s.pairs.push_back({val(0), val(0)});
    s.pairs.push_back({val(1), val(1)});
    s.pairs.push_back({val(-1, 8), val(-1, 8)});
    s.pairs.push_back({vinf(), vinf()});
    s.pairs.push_back({val(-1, 2), val(1, 4)});
    s.cm_flags = {false, false, false, false, true};
    auto cert = sharing_certificate(f, g, s);
    CHECK(cert.all_shared);
    CHECK(cert.cm_claims_hold);
    CHECK(cert.feasible);
    CHECK(cert.punctures.inf);
    REQUIRE(cert.punctures.classes.size() == 1);
    CHECK(cert.punctures.classes[0] == P({0, 1}));
    CHECK(!cert.excluded_mobius);
    // patterns (1:2),(1:2),(2:1),(2:1) for 0, 1, -1/8, inf
    auto pat = [&](int i) {
        REQUIRE(cert.pairs[i].pattern.classes.size() == 1);
        auto& c = cert.pairs[i].pattern.classes[0];
        return std::make_pair(c.mult_q, c.mult_qt);
    };
    CHECK(pat(0) == std::make_pair(1, 2));
    CHECK(pat(1) == std::make_pair(1, 2));
    CHECK(pat(2) == std::make_pair(2, 1));
    CHECK(pat(3) == std::make_pair(2, 1));
    CHECK(cert.pairs[4].verdict == Verdict::SharedCM);
}

TEST_CASE("mobius relation guard") {
    auto f = Field::rationals();
    RatFunc idt = RatFunc::from_poly(P({0, 1}, 't'));
    RatFunc mob = RatFunc::normalize(P({1, 2}, 't'), P({-1, 1}, 't'));
    MobiusMap out = MobiusMap::identity(f);
    CHECK(mobius_relation_guard(idt, mob, &out));
    CHECK(out.apply(val(0)) == val(-1));
    CHECK(!mobius_relation_guard(gund_f(), gund_g()));
    RatFunc t2 = RatFunc::from_poly(P({0, 0, 1}, 't'));
    RatFunc t3 = RatFunc::from_poly(P({0, 0, 0, 1}, 't'));
    CHECK(!mobius_relation_guard(t2, t3));
    // M o Q detection for a non-Mobius Q
    MobiusMap m(FieldElem(f, 2), FieldElem(f, 1), FieldElem(f, 1), FieldElem(f, -1));
    CHECK(mobius_relation_guard(t2, mobius_apply(m, t2)));
}

TEST_CASE("CM implies IM and puncture monotonicity") {
    RatFunc f = gund_f(), g = gund_g();
    PointSet base;
    base.add_class(P({0, 1}));
    base.add_inf();
    for (auto pr : {ValuePair{val(0), val(0)}, ValuePair{val(-1, 2), val(1, 4)}}) {
        PairResult r = check_pair(f, g, pr, base);
        CHECK(r.verdict != Verdict::NotShared);
        // enlarging punctures never flips shared -> not-shared
        PointSet bigger = base;
        bigger.add_class(P({-7, 1}));
        PairResult r2 = check_pair(f, g, pr, bigger);
        CHECK(r2.verdict != Verdict::NotShared);
    }
}

TEST_CASE("normalized pair: five pairs feasible with finite punctures in {0}") {
    // the pair after moving the CM values to infinity: the four finite pairs
    // plus (inf, inf) CM; the omitted set stays {0, inf}
    RatFunc f = RatFunc::normalize(P({2, -4, 2}), P({3, 0, 1}));
    RatFunc g = RatFunc::normalize(P({-8, 8}), P({3, 0, 1}));
    SharedPairSpec s;
    s.pairs.push_back({val(0), val(0)});
    s.pairs.push_back({val(8, 3), val(-8, 3)});
    s.pairs.push_back({val(2, 3), val(4, 3)});
    s.pairs.push_back({val(2), val(-4)});
    s.pairs.push_back({vinf(), vinf()});
    s.cm_flags = {false, false, false, false, true};
    auto cert = sharing_certificate(f, g, s);
    CHECK(cert.all_shared);
    CHECK(cert.cm_claims_hold);
    CHECK(cert.feasible);
    REQUIRE(cert.punctures.classes.size() == 1);
    CHECK(cert.punctures.classes[0] == P({0, 1}));
    CHECK(cert.punctures.inf);
    CHECK(cert.pairs[4].verdict == Verdict::SharedCM);
}
