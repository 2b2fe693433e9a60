#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pairshare/poly1.hpp"

using namespace pairshare;

namespace {
Poly1 P(std::vector<long> cs, char var = 't') {
    std::vector<Rat> rs(cs.begin(), cs.end());
    return Poly1::from_rats(rs, var);
}
}  // namespace

TEST_CASE("basic arithmetic and division") {
    Poly1 a = P({1, 2, 3});  // 3t^2+2t+1
    Poly1 b = P({-1, 1});    // t-1
    auto [q, r] = Poly1::divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.deg() < b.deg());
    CHECK((a * b).exact_div(b) == a);
    CHECK_THROWS(a.exact_div(b));
    CHECK(a.eval(fe(2)) == fe(17));
}

TEST_CASE("gcd examples") {
    // gcd(t^2-1, t-1) = t-1
    CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    // the common (-1/8)-point factor of the Gundersen pair:
    // numerator of f+1/8 is (t+3)^2, numerator of g+1/8 is t(t+3)
    Poly1 lhs = P({9, 6, 1});  // (t+3)^2
    Poly1 rhs = P({0, 3, 1});  // t^2+3t
    CHECK(poly_gcd(lhs, rhs) == P({3, 1}));
    // idempotence
    Poly1 p = P({4, 0, -2, 6});
    CHECK(poly_gcd(p, p) == p.monic());
    CHECK(poly_gcd(p, Poly1(p.field(), 't')) == p.monic());
}

TEST_CASE("resultant and discriminant") {
    // Res(t^2-1, t-2) via roots: (t-2) at 1, -1 -> (-1)(-3) = 3
    CHECK(poly_resultant(P({-1, 0, 1}), P({-2, 1})) == fe(3));
    // swap symmetry
    CHECK(poly_resultant(P({-2, 1}), P({-1, 0, 1})) == fe(3));
    // discriminant of t^2+2ct+4 at c=3 is 4c^2-16 = 20 (simple poles)
    CHECK(poly_discriminant(P({4, 6, 1})) == fe(20));
    // boundary c=2: double pole
    CHECK(poly_discriminant(P({4, 4, 1})) == fe(0));
    // degree-1 convention
    CHECK(poly_discriminant(P({-5, 1})) == fe(1));
    // disc = 0 iff gcd(p, p') nonconstant
    Poly1 sq = P({1, 1}) * P({1, 1}) * P({2, 1});
    CHECK(poly_discriminant(sq) == fe(0));
    CHECK(poly_gcd(sq, sq.derivative()).deg() > 0);
}

TEST_CASE("squarefree decomposition") {
    // (t+1)^2 (t-3)
    Poly1 p = P({1, 1}) * P({1, 1}) * P({-3, 1});
    auto d = squarefree_decomposition(p);
    REQUIRE(d.size() == 2);
    CHECK(d[0].first == 1);
    CHECK(d[0].second == P({-3, 1}));
    CHECK(d[1].first == 2);
    CHECK(d[1].second == P({1, 1}));
    // numerator of g-1 for the Gundersen pair: (t-3)^2
    auto d2 = squarefree_decomposition(P({9, -6, 1}));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].first == 2);
    CHECK(d2[0].second == P({-3, 1}));
    // squarefree input: single factor of multiplicity one
    auto d3 = squarefree_decomposition(P({2, 3, 1}));
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].first == 1);
    CHECK(d3[0].second == P({2, 3, 1}));
    // reconstruction
    Poly1 big = P({0, 1}) * P({0, 1}) * P({0, 1}) * P({1, 1}) * P({-1, 2});
    Poly1 acc = Poly1::constant(big.lc(), 't');
    for (auto& [m, f] : squarefree_decomposition(big))
        for (int i = 0; i < m; ++i) acc = acc * f;
    CHECK(acc == big);
}

TEST_CASE("translate and compose") {
    Poly1 p = P({1, 2, 1});  // (t+1)^2
    CHECK(p.translate(fe(-1)) == P({0, 0, 1}));
    Poly1 inner = P({3, 2});
    CHECK(p.compose(inner).eval(fe(1)) == p.eval(inner.eval(fe(1))));
}
