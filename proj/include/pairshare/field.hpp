#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>

#include "pairshare/rational.hpp"

namespace pairshare {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Coefficient domain: Q, or a quadratic extension Q(a) with a^2 + c1*a + c0 = 0,
// the minimal polynomial irreducible over Q.
class Field {
  public:
    enum class Kind { Rationals, Quadratic };

    static FieldPtr rationals();

    // minpoly t^2 + c1*t + c0; throws if reducible over Q or zero.
    static FieldPtr quadratic(const Rat& c0, const Rat& c1);

    Kind kind() const { return kind_; }
    bool is_rational_field() const { return kind_ == Kind::Rationals; }
    const Rat& c0() const { return c0_; }
    const Rat& c1() const { return c1_; }
    Rat discriminant() const { return c1_ * c1_ - 4 * c0_; }

    // canonical embedding: alpha = (-c1 + sqrt(disc))/2, sqrt of a negative
    // discriminant taken as +i*sqrt(|disc|)
    std::complex<double> alpha() const;

    static bool same(const FieldPtr& a, const FieldPtr& b);

  private:
    Field(Kind k, Rat c0, Rat c1) : kind_(k), c0_(std::move(c0)), c1_(std::move(c1)) {}
    Kind kind_;
    Rat c0_, c1_;
};

// Exact element re0 + re1*a of a Field. re1 = 0 over the plain rationals.
class FieldElem {
  public:
    FieldElem() : field_(Field::rationals()), re0_(0), re1_(0) {}
    explicit FieldElem(const Rat& r) : field_(Field::rationals()), re0_(r), re1_(0) {}
    FieldElem(FieldPtr f, Rat re0, Rat re1 = 0)
        : field_(std::move(f)), re0_(std::move(re0)), re1_(std::move(re1)) {
        if (field_->is_rational_field() && re1_ != 0)
            throw std::invalid_argument("alpha-part over the rationals");
    }

    const FieldPtr& field() const { return field_; }
    const Rat& re0() const { return re0_; }
    const Rat& re1() const { return re1_; }

    bool is_zero() const { return re0_ == 0 && re1_ == 0; }
    bool is_one() const { return re0_ == 1 && re1_ == 0; }
    bool is_rational() const { return re1_ == 0; }
    Rat rational_value() const {
        if (!is_rational()) throw std::domain_error("element not rational");
        return re0_;
    }

    FieldElem zero_like() const { return FieldElem(field_, 0, 0); }
    FieldElem one_like() const { return FieldElem(field_, 1, 0); }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        auto [x, y, f] = align(a, b);
        return FieldElem(f, x.re0_ + y.re0_, x.re1_ + y.re1_);
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        auto [x, y, f] = align(a, b);
        return FieldElem(f, x.re0_ - y.re0_, x.re1_ - y.re1_);
    }
    FieldElem operator-() const { return FieldElem(field_, -re0_, -re1_); }

    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        auto [x, y, f] = align(a, b);
        if (f->is_rational_field()) return FieldElem(f, x.re0_ * y.re0_, 0);
        // (p + q a)(r + s a), a^2 = -c1 a - c0
        const Rat &p = x.re0_, &q = x.re1_, &r = y.re0_, &s = y.re1_;
        Rat qs = q * s;
        return FieldElem(f, p * r - qs * f->c0(), p * s + q * r - qs * f->c1());
    }

    FieldElem conj() const {
        if (field_->is_rational_field()) return *this;
        // other root: abar = -c1 - a
        return FieldElem(field_, re0_ - re1_ * field_->c1(), -re1_);
    }

    // norm to Q: x * conj(x)
    Rat norm() const {
        if (field_->is_rational_field()) return re0_ * re0_;
        return re0_ * re0_ - re0_ * re1_ * field_->c1() + re1_ * re1_ * field_->c0();
    }

    FieldElem inv() const {
        if (is_zero()) throw std::domain_error("division by zero field element");
        if (field_->is_rational_field()) return FieldElem(field_, 1 / re0_, 0);
        Rat n = norm();  // nonzero by irreducibility
        FieldElem c = conj();
        return FieldElem(field_, c.re0_ / n, c.re1_ / n);
    }

    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }
    FieldElem exact_div(const FieldElem& b) const { return *this / b; }

    FieldElem pow(long e) const {
        if (e < 0) return inv().pow(-e);
        FieldElem acc = one_like(), x = *this;
        while (e) {
            if (e & 1) acc = acc * x;
            x = x * x;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        if (a.re1_ == 0 && b.re1_ == 0) return a.re0_ == b.re0_;
        auto [x, y, f] = align(a, b);
        return x.re0_ == y.re0_ && x.re1_ == y.re1_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        if (is_rational()) return {rat_d(re0_), 0.0};
        return rat_d(re0_) + rat_d(re1_) * field_->alpha();
    }

    // "3/4", "1/2+5/3*a", "-a", "2-a"; reparses under the shared grammar
    std::string str() const;

  private:
    // lift plain rationals into the other operand's extension
    static std::tuple<FieldElem, FieldElem, FieldPtr> align(const FieldElem& a,
                                                            const FieldElem& b);
    FieldPtr field_;
    Rat re0_, re1_;
};

inline FieldElem fe(long n, long d = 1) { return FieldElem(rat(n, d)); }

}  // namespace pairshare
