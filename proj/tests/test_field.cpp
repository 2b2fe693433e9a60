#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pairshare/field.hpp"

using namespace pairshare;

TEST_CASE("field construction") {
    // t^2 + t + 1: the cube-root-of-unity extension; i*sqrt(3) = 2a + 1
    auto f = Field::quadratic(rat(1), rat(1));
    CHECK(f->kind() == Field::Kind::Quadratic);
    FieldElem alpha(f, 0, 1);
    FieldElem isqrt3 = alpha * fe(2) + FieldElem(f, 1);
    CHECK(isqrt3 * isqrt3 == FieldElem(f, -3));
    // a = -1/2 + (i/2) sqrt(3) is the generator itself
    FieldElem a = FieldElem(f, rat(-1, 2)) + isqrt3 * FieldElem(f, rat(1, 2));
    CHECK(a == alpha);

    // t^2 - 1 is reducible (disc 4 is a square)
    CHECK_THROWS(Field::quadratic(rat(-1), rat(0)));
    // zero polynomial marker rejected
    CHECK_THROWS(Field::quadratic(rat(0), rat(0)));

    // t^2 + 1: Gaussian, alpha^2 = -1
    auto g = Field::quadratic(rat(1), rat(0));
    FieldElem i(g, 0, 1);
    CHECK(i * i == FieldElem(g, -1));
}

TEST_CASE("exact arithmetic and inverses") {
    auto f = Field::quadratic(rat(1), rat(1));
    FieldElem x(f, rat(3, 7), rat(-2, 5));
    FieldElem y(f, rat(-1, 3), rat(4));
    CHECK((x + y) - y == x);
    CHECK((x * y) / y == x);
    CHECK(x * x.inv() == FieldElem(f, 1));
    CHECK(x.pow(3) == x * x * x);
    CHECK(x.pow(-2) == (x * x).inv());
    CHECK((x * x.conj()).is_rational());
    CHECK(x.norm() == (x * x.conj()).rational_value());
    CHECK_THROWS(FieldElem(f, 0, 0).inv());
}

TEST_CASE("rational lifting and field mixing") {
    auto f = Field::quadratic(rat(1), rat(0));
    FieldElem i(f, 0, 1);
    FieldElem three = fe(3);  // plain rational
    CHECK((i * three).field()->kind() == Field::Kind::Quadratic);
    CHECK(i * three == FieldElem(f, 0, 3));
    auto g = Field::quadratic(rat(1), rat(1));
    CHECK_THROWS(FieldElem(f, 0, 1) * FieldElem(g, 0, 1));
}

TEST_CASE("randomized field axioms") {
    auto f = Field::quadratic(rat(1), rat(1));
    uint64_t s = 42;
    auto next = [&] {
        s += 0x9e3779b97f4a7c15ULL;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    auto rnd = [&] {
        long p = (long)(next() % 19) - 9;
        long q = (long)(next() % 9) + 1;
        long p2 = (long)(next() % 19) - 9;
        long q2 = (long)(next() % 9) + 1;
        return FieldElem(f, rat(p, q), rat(p2, q2));
    };
    for (int it = 0; it < 1000; ++it) {
        FieldElem a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inv() == FieldElem(f, 1));
    }
}

TEST_CASE("string form") {
    auto f = Field::quadratic(rat(1), rat(1));
    CHECK(FieldElem(f, rat(1, 2), rat(5, 3)).str() == "1/2+5/3*a");
    CHECK(FieldElem(f, 0, -1).str() == "-a");
    CHECK(fe(-3, 4).str() == "-3/4");
    CHECK(FieldElem(f, 2, -1).str() == "2-a");
}
