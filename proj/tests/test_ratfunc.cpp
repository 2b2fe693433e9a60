#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pairshare/ratfunc.hpp"

using namespace pairshare;

namespace {
Poly1 P(std::vector<long> cs, char var = 'w') {
    std::vector<Rat> rs(cs.begin(), cs.end());
    return Poly1::from_rats(rs, var);
}
// Q(t) = 8/(4+2ct+t^2), Qt(t) = 8t/(4+2ct+t^2)
RatFunc para_q(long c) { return RatFunc::normalize(P({8}, 't'), P({4, 2 * c, 1}, 't')); }
RatFunc para_qt(long c) { return RatFunc::normalize(P({0, 8}, 't'), P({4, 2 * c, 1}, 't')); }
// the Gundersen pair in w = e^z
RatFunc gund_f() { return RatFunc::normalize(P({1, 1}), P({1, -2, 1})); }
RatFunc gund_g() { return RatFunc::normalize(P({1, 2, 1}), P({-8, 8})); }
}  // namespace

TEST_CASE("normalization") {
    // ((t+1)(t-1), (t-1)) -> t+1
    RatFunc r = RatFunc::normalize(P({-1, 0, 1}, 't'), P({-1, 1}, 't'));
    CHECK(r.num() == P({1, 1}, 't'));
    CHECK(r.den().deg() == 0);
    // Q of the quadric parameterization has degree 2
    CHECK(para_q(3).degree() == 2);
    // zero function
    RatFunc z = RatFunc::normalize(P({}, 't'), P({0, 1}, 't'));
    CHECK(z.is_zero());
    CHECK(z.degree() == 0);
    CHECK_THROWS(RatFunc::normalize(P({1}, 't'), P({}, 't')));
}

TEST_CASE("value divisors on the sphere") {
    RatFunc f = gund_f();
    // f - 0: simple zero at w=-1 plus a simple zero at infinity
    Divisor d0 = value_divisor(f, val(0));
    CHECK(d0.total_degree() == 2);
    CHECK(d0.inf_mult == 1);
    REQUIRE(d0.entries.size() == 1);
    CHECK(d0.entries[0].first == P({1, 1}));
    CHECK(d0.entries[0].second == 1);
    // pole divisor: (w-1)^2
    Divisor dinf = value_divisor(f, vinf());
    CHECK(dinf.inf_mult == 0);
    REQUIRE(dinf.entries.size() == 1);
    CHECK(dinf.entries[0].first == P({-1, 1}));
    CHECK(dinf.entries[0].second == 2);
    // Q(t)=t at 5
    RatFunc idf = RatFunc::from_poly(P({0, 1}, 't'));
    Divisor d5 = value_divisor(idf, val(5));
    REQUIRE(d5.entries.size() == 1);
    CHECK(d5.entries[0].first == P({-5, 1}, 't'));
    CHECK(d5.inf_mult == 0);
    CHECK_THROWS(value_divisor(RatFunc::from_poly(P({3}, 't')), val(0)));
}

TEST_CASE("critical values of the quadric parameterization") {
    // c=3: roots {0, -8/5} for Q
    auto cv = critical_values(para_q(3));
    Poly1 expect = (Poly1::variable(Field::rationals(), 'y')) *
                   (Poly1::variable(Field::rationals(), 'y') +
                    Poly1::constant(fe(8, 5), 'y'));
    CHECK(cv.polynomial == expect.monic());
    CHECK(cv.inf_critical == false);
    // c=3: roots {4/5, 4} for Qt -- and 0 is NOT a root
    auto cvt = critical_values(para_qt(3));
    CHECK(cvt.polynomial.eval(fe(4, 5)).is_zero());
    CHECK(cvt.polynomial.eval(fe(4)).is_zero());
    CHECK(!cvt.polynomial.eval(fe(0)).is_zero());
    CHECK(cvt.polynomial.deg() == 2);
    // Mobius maps have no finite critical values
    auto cvm = critical_values(RatFunc::from_poly(P({0, 1}, 't')));
    CHECK(cvm.polynomial.deg() == 0);
    CHECK(cvm.inf_critical == false);
}

TEST_CASE("mobius composition") {
    auto f = Field::rationals();
    RatFunc q = gund_f();
    // M(x) = 1/(x+1/2) maps the CM value -1/2 to infinity
    MobiusMap m(FieldElem(f, 0), FieldElem(f, 1), FieldElem(f, 1), FieldElem(f, rat(1, 2)));
    RatFunc moved = mobius_apply(m, q);
    CHECK(moved.degree() == q.degree());
    // normalized Gundersen f-side: 2(w-1)^2/(w^2+3)
    CHECK(moved.num() == P({2, -4, 2}));
    CHECK(moved.den() == P({3, 0, 1}));
    // identity map
    RatFunc same = mobius_apply(MobiusMap::identity(f), q);
    CHECK(same == q);
    // precompose t^2 with 1/t: degree preserved
    RatFunc t2 = RatFunc::from_poly(P({0, 0, 1}, 't'));
    MobiusMap inv(FieldElem(f, 0), FieldElem(f, 1), FieldElem(f, 1), FieldElem(f, 0));
    RatFunc pre = mobius_precompose(t2, inv);
    CHECK(pre.degree() == 2);
    CHECK(pre.num().deg() == 0);
    CHECK(pre.den() == P({0, 0, 1}, 't'));
    // divisor transport: value_divisor(M o Q, M(a)) = value_divisor(Q, a)
    Value a = val(1);
    Divisor lhs = value_divisor(moved, m.apply(a));
    Divisor rhs = value_divisor(q, a);
    CHECK(lhs == rhs);
}

TEST_CASE("asymptotic value pairs") {
    auto [at_inf, at_zero] = asymptotic_values(gund_f(), gund_g());
    CHECK(at_inf.first == val(0));
    CHECK(at_inf.second == vinf());
    CHECK(at_zero.first == val(1));
    CHECK(at_zero.second == val(-1, 8));
    auto [pi, pz] = asymptotic_values(para_q(3), para_qt(3));
    CHECK(pi.first == val(0));
    CHECK(pi.second == val(0));
    CHECK(pz.first == val(2));
    CHECK(pz.second == val(0));
    RatFunc idf = RatFunc::from_poly(P({0, 1}, 't'));
    auto [ii, zz] = asymptotic_values(idf, idf);
    CHECK(ii.first == vinf());
    CHECK(zz.first == val(0));
}

TEST_CASE("fiber count conservation and Riemann-Hurwitz bound") {
    uint64_t s = 7;
    auto nextr = [&] {
        s += 0x9e3779b97f4a7c15ULL;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    for (int it = 0; it < 200; ++it) {
        std::vector<Rat> nc, dc;
        int dn = 1 + (int)(nextr() % 3), dd = (int)(nextr() % 4);
        for (int i = 0; i <= dn; ++i) nc.push_back(rat((long)(nextr() % 13) - 6));
        for (int i = 0; i <= dd; ++i) dc.push_back(rat((long)(nextr() % 13) - 6));
        Poly1 num = Poly1::from_rats(nc, 't'), den = Poly1::from_rats(dc, 't');
        if (num.is_zero() || den.is_zero()) continue;
        RatFunc q = RatFunc::normalize(num, den);
        if (q.is_constant()) continue;
        int d = q.degree();
        // fiber conservation at random values
        Value a = val((long)(nextr() % 9) - 4);
        Divisor div = value_divisor(q, a);
        CHECK(div.total_degree() == d);
        int excess = 0;
        for (auto& [p, m] : div.entries) excess += (m - 1) * p.deg();
        if (div.inf_mult > 1) excess += div.inf_mult - 1;
        CHECK(excess <= 2 * d - 2);
        // derivative numerator degree obeys the same bound
        Poly1 w = q.num().derivative() * q.den() - q.num() * q.den().derivative();
        if (!w.is_zero()) CHECK(w.deg() <= 2 * d - 2);
    }
}
