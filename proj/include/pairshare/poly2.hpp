#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pairshare/poly1.hpp"

namespace pairshare {

// Sparse bivariate polynomial over a Field; no stored zero coefficients.
class Poly2 {
  public:
    using Key = std::pair<int, int>;  // (exponent of vx, exponent of vy)

    Poly2() : field_(Field::rationals()), vx_('x'), vy_('y') {}
    Poly2(FieldPtr f, char vx, char vy) : field_(std::move(f)), vx_(vx), vy_(vy) {
        if (vx_ == vy_) throw std::invalid_argument("bivariate variables must differ");
    }

    static Poly2 constant(const FieldElem& v, char vx = 'x', char vy = 'y');
    static Poly2 variable(FieldPtr f, char which, char vx, char vy);
    static Poly2 from_poly1(const Poly1& p, char other_var, bool p_is_first);

    const FieldPtr& field() const { return field_; }
    char vx() const { return vx_; }
    char vy() const { return vy_; }
    const std::map<Key, FieldElem>& terms() const { return m_; }

    bool is_zero() const { return m_.empty(); }
    bool is_constant() const {
        return m_.empty() || (m_.size() == 1 && m_.begin()->first == Key{0, 0});
    }
    int deg_x() const;
    int deg_y() const;
    int total_deg() const;
    FieldElem coeff(int j, int k) const;
    void set(int j, int k, const FieldElem& v);

    Poly2 zero_like() const { return Poly2(field_, vx_, vy_); }
    Poly2 one_like() const { return constant(FieldElem(field_, 1), vx_, vy_); }

    friend Poly2 operator+(const Poly2& a, const Poly2& b);
    friend Poly2 operator-(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    Poly2 operator-() const;
    friend bool operator==(const Poly2& a, const Poly2& b);
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

    Poly2 scale(const FieldElem& k) const;
    Poly2 pow(int e) const;

    Poly2 derivative_x() const;
    Poly2 derivative_y() const;

    FieldElem eval(const FieldElem& x, const FieldElem& y) const;
    Poly1 subst_x(const FieldElem& x, char var_out = 0) const;  // -> poly in vy
    Poly1 subst_y(const FieldElem& y, char var_out = 0) const;  // -> poly in vx
    Poly2 translate(const FieldElem& ax, const FieldElem& ay) const;
    Poly2 swap_vars() const;
    Poly2 rename(char nvx, char nvy) const;

    // recursive views
    std::vector<Poly1> coeffs_in_y() const;  // index k: coefficient of vy^k in F[vx]
    std::vector<Poly1> coeffs_in_x() const;  // index j: coefficient of vx^j in F[vy]
    static Poly2 from_coeffs_in_y(const std::vector<Poly1>& cs, FieldPtr f, char vx, char vy);

    Poly1 to_poly1() const;  // requires at most one active variable

    // exact multivariate division (throws if not exact)
    Poly2 exact_div(const Poly2& d) const;
    bool divides(const Poly2& d, Poly2* quotient = nullptr) const;

    // content in F[vx] (gcd of the y-direction coefficients), and primitive part
    Poly1 content_y() const;
    Poly1 content_x() const;
    Poly2 primitive_part(Poly1* content_removed_x = nullptr,
                         Poly1* content_removed_y = nullptr) const;

    // canonical scaling: integer coprime coefficients with positive leading term
    // over Q, lex-leading coefficient 1 over an extension
    Poly2 canonical() const;

    std::string str() const;

  private:
    FieldPtr field_;
    char vx_, vy_;
    std::map<Key, FieldElem> m_;
};

// Sylvester resultant of a and b w.r.t. the shared variable `elim`
// (subresultant PRS over the ring of polynomials in the kept variables).
// Kept variables of the result: the non-eliminated variables of a and b.
Poly2 poly2_resultant(const Poly2& a, const Poly2& b, char elim);

// gcd via primitive PRS, canonically scaled
Poly2 poly2_gcd(const Poly2& a, const Poly2& b);

Poly2 poly2_squarefree_part(const Poly2& a);

// Lower Newton polygon of the support after translating `at` to the origin.
struct PolygonSegment {
    Rat slope;               // negative rational
    Rat exponent;            // -1/slope, the candidate leading Puiseux exponent
    std::vector<Poly2::Key> support;  // translated support points on the segment
};
std::vector<PolygonSegment> newton_polygon(const Poly2& k,
                                           const FieldElem& at_x, const FieldElem& at_y);

}  // namespace pairshare
