#pragma once

#include "pairshare/ratfunc.hpp"

namespace pairshare {

// Shared expression grammar: integers, rationals p/q, the generator `a` of a
// quadratic field, variables from {t,w,x,y,u}, operators + - * / ^ and
// parentheses. Errors carry the offending position.
struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)),
          position(pos) {}
};

struct ParsedExpr {
    enum class Kind { Scalar, Uni, Bi, Rational };
    Kind kind = Kind::Scalar;
    FieldElem scalar;
    Poly1 p1;
    Poly2 p2;
    RatFunc rf;
};

ParsedExpr parse_expression(const std::string& text, const FieldPtr& field);

// targeted forms (with the natural promotions); throw ParseError on mismatch
FieldElem parse_scalar(const std::string& text, const FieldPtr& field);
Value parse_value(const std::string& text, const FieldPtr& field);  // "inf" ok
Poly1 parse_poly1(const std::string& text, const FieldPtr& field);
Poly2 parse_poly2(const std::string& text, const FieldPtr& field);
RatFunc parse_ratfunc(const std::string& text, const FieldPtr& field);

}  // namespace pairshare
