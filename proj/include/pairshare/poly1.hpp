#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "pairshare/field.hpp"

namespace pairshare {

// Dense univariate polynomial over a Field. Coefficients indexed by exponent,
// no trailing zeros; the zero polynomial has an empty coefficient vector.
class Poly1 {
  public:
    Poly1() : field_(Field::rationals()), var_('t') {}
    Poly1(FieldPtr f, char var) : field_(std::move(f)), var_(var) {}
    Poly1(FieldPtr f, char var, std::vector<FieldElem> coeffs)
        : field_(std::move(f)), var_(var), c_(std::move(coeffs)) {
        trim();
    }

    static Poly1 constant(const FieldElem& v, char var = 't') {
        Poly1 p(v.field(), var);
        if (!v.is_zero()) p.c_ = {v};
        return p;
    }
    static Poly1 variable(FieldPtr f, char var) {
        Poly1 p(std::move(f), var);
        p.c_ = {FieldElem(p.field_, 0), FieldElem(p.field_, 1)};
        return p;
    }
    // p(var) = sum coeffs[i] var^i with rational coefficients
    static Poly1 from_rats(const std::vector<Rat>& coeffs, char var = 't',
                           FieldPtr f = Field::rationals());

    const FieldPtr& field() const { return field_; }
    char var() const { return var_; }
    void set_var(char v) { var_ = v; }

    int deg() const { return (int)c_.size() - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    FieldElem lc() const;
    FieldElem coeff(int i) const {
        if (i < 0 || i >= (int)c_.size()) return FieldElem(field_, 0);
        return c_[i];
    }
    const std::vector<FieldElem>& coeffs() const { return c_; }

    Poly1 zero_like() const { return Poly1(field_, var_); }
    Poly1 one_like() const { return constant(FieldElem(field_, 1), var_); }

    friend Poly1 operator+(const Poly1& a, const Poly1& b);
    friend Poly1 operator-(const Poly1& a, const Poly1& b);
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
    Poly1 operator-() const;
    friend bool operator==(const Poly1& a, const Poly1& b);
    friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

    Poly1 scale(const FieldElem& k) const;
    Poly1 shift_up(int k) const;  // * var^k

    // euclidean division over the field; den != 0
    static std::pair<Poly1, Poly1> divrem(const Poly1& num, const Poly1& den);
    // division known to be exact; throws if a remainder appears
    Poly1 exact_div(const Poly1& d) const;

    Poly1 derivative() const;
    Poly1 monic() const;

    FieldElem eval(const FieldElem& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;
    Poly1 compose(const Poly1& inner) const;

    // p(x + a): translation, used when centering local expansions
    Poly1 translate(const FieldElem& a) const;

    std::string str() const;

  private:
    void trim();
    FieldPtr field_;
    char var_;
    std::vector<FieldElem> c_;
};

// monic gcd; gcd(p, 0) = monic(p)
Poly1 poly_gcd(const Poly1& p, const Poly1& q);

// Sylvester resultant (subresultant PRS); matches the Sylvester determinant sign.
FieldElem poly_resultant(const Poly1& p, const Poly1& q);

// (-1)^{d(d-1)/2} Res(p, p') / lc(p); deg-1 convention: 1
FieldElem poly_discriminant(const Poly1& p);

// Yun decomposition p = lc * prod factor_i ^ mult_i, factors monic squarefree
// pairwise coprime, listed by increasing multiplicity.
std::vector<std::pair<int, Poly1>> squarefree_decomposition(const Poly1& p);

Poly1 squarefree_part(const Poly1& p);

}  // namespace pairshare
