#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pairshare/poly2.hpp"

namespace pairshare {

// A point of the Riemann sphere used as a shared value: finite or infinity.
struct Value {
    bool inf = false;
    FieldElem v;

    Value() : inf(true) {}
    explicit Value(FieldElem x) : inf(false), v(std::move(x)) {}
    static Value infinity() { return Value(); }

    bool is_inf() const { return inf; }
    friend bool operator==(const Value& a, const Value& b) {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.v == b.v;
    }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
    std::string str() const { return inf ? "inf" : v.str(); }
};

inline Value val(long n, long d = 1) { return Value(fe(n, d)); }
inline Value vinf() { return Value::infinity(); }

// Formal multiset of sphere-point classes: monic squarefree pairwise-coprime
// polynomials with integer multiplicities, plus the point at infinity.
struct Divisor {
    std::vector<std::pair<Poly1, int>> entries;  // (pointclass, multiplicity)
    int inf_mult = 0;

    int total_degree() const {
        int d = inf_mult;
        for (auto& [p, m] : entries) d += p.deg() * m;
        return d;
    }
    bool empty() const { return entries.empty() && inf_mult == 0; }

    // product of the finite pointclass polynomials (the squarefree support)
    Poly1 support_poly(const FieldPtr& f, char var) const;
    // product of pointclass^multiplicity
    Poly1 multiplicity_poly(const FieldPtr& f, char var) const;

    friend bool operator==(const Divisor& a, const Divisor& b);
    friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }
};

// finite set of sphere points to be omitted: squarefree monic polynomial
// classes plus optionally infinity
struct PointSet {
    std::vector<Poly1> classes;
    bool inf = false;

    int sphere_points() const {
        int n = inf ? 1 : 0;
        for (auto& p : classes) n += p.deg();
        return n;
    }
    bool empty() const { return classes.empty() && !inf; }
    void add_class(const Poly1& squarefree_monic);
    void add_inf() { inf = true; }
    void merge(const PointSet& other);
    Poly1 poly(const FieldPtr& f, char var) const;
};

struct MobiusMap {
    FieldElem a, b, c, d;  // z -> (a z + b)/(c z + d), ad - bc != 0

    MobiusMap(FieldElem a_, FieldElem b_, FieldElem c_, FieldElem d_);
    static MobiusMap identity(const FieldPtr& f);
    MobiusMap inverse() const;
    Value apply(const Value& x) const;
};

// Rational function num/den on the sphere: coprime, monic denominator.
class RatFunc {
  public:
    RatFunc() = default;
    static RatFunc normalize(const Poly1& num, const Poly1& den);
    static RatFunc from_poly(const Poly1& p) {
        return normalize(p, Poly1::constant(FieldElem(p.field(), 1), p.var()));
    }

    const Poly1& num() const { return num_; }
    const Poly1& den() const { return den_; }
    char var() const { return num_.var(); }
    const FieldPtr& field() const { return num_.field(); }

    int degree() const { return std::max(std::max(num_.deg(), 0), den_.deg()); }
    bool is_constant() const { return num_.deg() <= 0 && den_.deg() == 0; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const;  // 1/Q
    RatFunc derivative() const;

    Value eval(const Value& x) const;      // sphere-complete, eval at inf by degrees
    Value eval(const FieldElem& x) const { return eval(Value(x)); }
    std::complex<double> eval(const std::complex<double>& x) const;

    // substitute another rational function for the variable
    RatFunc compose(const RatFunc& inner) const;

    std::string str() const;

  private:
    Poly1 num_, den_;
};

RatFunc operator-(const RatFunc& a, const Value&) = delete;

// divisor of Q - a (pole divisor if a = inf); total degree = degree(Q)
Divisor value_divisor(const RatFunc& q, const Value& a);

struct CriticalValues {
    Poly1 polynomial;   // monic squarefree, roots = finite critical values
    bool inf_critical;  // some pole has multiplicity >= 2 (incl. t = inf)
};
CriticalValues critical_values(const RatFunc& q, char value_var = 0);

RatFunc mobius_apply(const MobiusMap& m, const RatFunc& q);       // M o Q
RatFunc mobius_precompose(const RatFunc& q, const MobiusMap& m);  // Q o M

// ((Q(inf), Qt(inf)), (Q(0), Qt(0))) — the exceptional pairs of the
// exponential parameterization
std::pair<std::pair<Value, Value>, std::pair<Value, Value>> asymptotic_values(
    const RatFunc& q, const RatFunc& qt);

}  // namespace pairshare
