#include "pairshare/parse.hpp"

#include <cctype>
#include <set>

namespace pairshare {

namespace {

const std::string kVars = "twxyu";

struct Node {  // bivariate rational value during evaluation
    Poly2 num, den;
};

struct Parser {
    const std::string& s;
    size_t pos = 0;
    FieldPtr field;
    char vx, vy;

    Parser(const std::string& text, FieldPtr f, char vx_, char vy_)
        : s(text), field(std::move(f)), vx(vx_), vy(vy_) {}

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

    Node constant(const FieldElem& v) {
        return {Poly2::constant(v, vx, vy), Poly2::constant(FieldElem(field, 1), vx, vy)};
    }

    Node add(const Node& a, const Node& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    Node sub(const Node& a, const Node& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    Node mul(const Node& a, const Node& b) { return {a.num * b.num, a.den * b.den}; }
    Node div(const Node& a, const Node& b) {
        if (b.num.is_zero()) fail("division by the zero polynomial");
        return {a.num * b.den, a.den * b.num};
    }
    Node pow(Node a, long e) {
        Node r = constant(FieldElem(field, 1));
        for (long i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }

    long integer_literal() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stol(s.substr(start, pos - start));
    }

    Node primary() {
        skip();
        if (pos >= s.size()) fail("unexpected end of expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Node inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit((unsigned char)c)) {
            long n = integer_literal();
            return constant(FieldElem(field, rat(n)));
        }
        if (c == 'a') {
            ++pos;
            if (field->is_rational_field())
                fail("the generator 'a' needs a quadratic field");
            return constant(FieldElem(field, 0, 1));
        }
        if (kVars.find(c) != std::string::npos) {
            ++pos;
            Poly2 v = Poly2::variable(field, c, vx, vy);
            return {v, Poly2::constant(FieldElem(field, 1), vx, vy)};
        }
        fail("unexpected character");
    }

    Node power() {
        Node base = primary();
        skip();
        while (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip();
            if (pos < s.size() && s[pos] == '-') fail("negative exponents unsupported");
            long e = integer_literal();
            base = pow(base, e);
            skip();
        }
        return base;
    }

    Node unary() {
        skip();
        if (eat('-')) {
            Node v = unary();
            v.num = -v.num;
            return v;
        }
        (void)eat('+');
        return power();
    }

    Node term() {
        Node acc = unary();
        for (;;) {
            skip();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                acc = mul(acc, unary());
            } else if (pos < s.size() && s[pos] == '/') {
                ++pos;
                acc = div(acc, unary());
            } else
                break;
        }
        return acc;
    }

    Node expr() {
        Node acc = term();
        for (;;) {
            skip();
            if (pos < s.size() && s[pos] == '+') {
                ++pos;
                acc = add(acc, term());
            } else if (pos < s.size() && s[pos] == '-') {
                ++pos;
                acc = sub(acc, term());
            } else
                break;
        }
        return acc;
    }
};

int active_vars(const Poly2& p, bool& uses_x, bool& uses_y) {
    uses_x = p.deg_x() > 0;
    uses_y = p.deg_y() > 0;
    return (uses_x ? 1 : 0) + (uses_y ? 1 : 0);
}

}  // namespace

ParsedExpr parse_expression(const std::string& text, const FieldPtr& field) {
    if (text.empty()) throw ParseError("empty expression", 0);
    // pre-scan the variables so every intermediate shares one ambient pair
    std::set<char> seen;
    for (char c : text)
        if (kVars.find(c) != std::string::npos) seen.insert(c);
    if (seen.size() > 2) throw ParseError("more than two variables", 0);
    char vx = 'x', vy = 'y';
    if (seen.size() == 1) {
        vx = *seen.begin();
        vy = (vx == 'y') ? 'x' : 'y';
    } else if (seen.size() == 2) {
        vx = *seen.begin();
        vy = *std::next(seen.begin());
    }
    Parser p(text, field, vx, vy);
    Node n = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");

    ParsedExpr out;
    bool dnx, dny;
    int dact = active_vars(n.den, dnx, dny);
    if (dact == 0) {
        // polynomial (scaled by the constant denominator)
        FieldElem dc = n.den.coeff(0, 0);
        Poly2 poly = n.num.scale(dc.inv());
        bool nx, ny;
        int act = active_vars(poly, nx, ny);
        if (act == 2) {
            out.kind = ParsedExpr::Kind::Bi;
            out.p2 = poly;
        } else if (act == 1) {
            out.kind = ParsedExpr::Kind::Uni;
            out.p1 = nx ? poly.subst_y(FieldElem(field, 0)) : poly.subst_x(FieldElem(field, 0));
        } else {
            out.kind = ParsedExpr::Kind::Scalar;
            out.scalar = poly.coeff(0, 0);
        }
        return out;
    }
    // nonconstant denominator: univariate rational function
    bool nnx, nny;
    active_vars(n.num, nnx, nny);
    bool use_x = dnx || nnx, use_y = dny || nny;
    if (use_x && use_y)
        throw ParseError("bivariate rational functions are unsupported", 0);
    auto to1 = [&](const Poly2& q) {
        return use_x ? q.subst_y(FieldElem(field, 0)) : q.subst_x(FieldElem(field, 0));
    };
    RatFunc rf = RatFunc::normalize(to1(n.num), to1(n.den));
    if (rf.den().deg() == 0) {
        // the division cancelled: reclassify as a polynomial
        if (rf.num().deg() >= 1) {
            out.kind = ParsedExpr::Kind::Uni;
            out.p1 = rf.num();
        } else {
            out.kind = ParsedExpr::Kind::Scalar;
            out.scalar = rf.num().coeff(0);
        }
        return out;
    }
    out.kind = ParsedExpr::Kind::Rational;
    out.rf = rf;
    return out;
}

FieldElem parse_scalar(const std::string& text, const FieldPtr& field) {
    ParsedExpr e = parse_expression(text, field);
    if (e.kind != ParsedExpr::Kind::Scalar)
        throw ParseError("expected a constant", 0);
    return e.scalar;
}

Value parse_value(const std::string& text, const FieldPtr& field) {
    std::string t;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) t += c;
    if (t == "inf" || t == "oo") return Value::infinity();
    return Value(parse_scalar(text, field));
}

Poly1 parse_poly1(const std::string& text, const FieldPtr& field) {
    ParsedExpr e = parse_expression(text, field);
    if (e.kind == ParsedExpr::Kind::Uni) return e.p1;
    if (e.kind == ParsedExpr::Kind::Scalar) return Poly1::constant(e.scalar, 't');
    throw ParseError("expected a univariate polynomial", 0);
}

Poly2 parse_poly2(const std::string& text, const FieldPtr& field) {
    ParsedExpr e = parse_expression(text, field);
    if (e.kind == ParsedExpr::Kind::Bi) return e.p2;
    if (e.kind == ParsedExpr::Kind::Uni) return Poly2::from_poly1(e.p1, e.p1.var() == 'y' ? 'x' : 'y', true);
    if (e.kind == ParsedExpr::Kind::Scalar) return Poly2::constant(e.scalar);
    throw ParseError("expected a polynomial", 0);
}

RatFunc parse_ratfunc(const std::string& text, const FieldPtr& field) {
    ParsedExpr e = parse_expression(text, field);
    switch (e.kind) {
        case ParsedExpr::Kind::Rational: return e.rf;
        case ParsedExpr::Kind::Uni: return RatFunc::from_poly(e.p1);
        case ParsedExpr::Kind::Scalar:
            return RatFunc::from_poly(Poly1::constant(e.scalar, 't'));
        default: throw ParseError("expected a univariate rational function", 0);
    }
}

}  // namespace pairshare
