#include "pairshare/field.hpp"

#include <cmath>

namespace pairshare {

FieldPtr Field::rationals() {
    static FieldPtr q(new Field(Kind::Rationals, 0, 0));
    return q;
}

FieldPtr Field::quadratic(const Rat& c0, const Rat& c1) {
    if (c0 == 0 && c1 == 0) throw std::invalid_argument("zero minimal polynomial part");
    Rat disc = c1 * c1 - 4 * c0;
    if (rat_sqrt(disc)) throw std::invalid_argument("reducible minimal polynomial");
    return FieldPtr(new Field(Kind::Quadratic, c0, c1));
}

std::complex<double> Field::alpha() const {
    if (kind_ == Kind::Rationals) return {0.0, 0.0};
    double d = rat_d(discriminant());
    double c1 = rat_d(c1_);
    if (d >= 0) return {(-c1 + std::sqrt(d)) / 2.0, 0.0};
    return {-c1 / 2.0, std::sqrt(-d) / 2.0};
}

bool Field::same(const FieldPtr& a, const FieldPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind() != b->kind()) return false;
    if (a->kind() == Kind::Rationals) return true;
    return a->c0() == b->c0() && a->c1() == b->c1();
}

std::tuple<FieldElem, FieldElem, FieldPtr> FieldElem::align(const FieldElem& a,
                                                            const FieldElem& b) {
    if (Field::same(a.field_, b.field_)) return {a, b, a.field_};
    if (a.field_->is_rational_field())
        return {FieldElem(b.field_, a.re0_, 0), b, b.field_};
    if (b.field_->is_rational_field())
        return {a, FieldElem(a.field_, b.re0_, 0), a.field_};
    throw std::invalid_argument("mixing distinct quadratic extensions");
}

std::string FieldElem::str() const {
    if (re1_ == 0) return rat_str(re0_);
    std::string out;
    if (re0_ != 0) out = rat_str(re0_);
    Rat ab = abs(re1_);
    std::string mag = (ab == 1) ? "a" : rat_str(ab) + "*a";
    if (re1_ > 0)
        out += out.empty() ? mag : "+" + mag;
    else
        out += "-" + mag;
    return out;
}

}  // namespace pairshare
