#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace pairshare {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

inline bool rat_is_int(const Rat& r) {
    return r.get_den() == 1;
}

// Tests whether r is the square of a rational; returns the nonnegative root.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rat root(sn, sd);
    root.canonicalize();
    return root;
}

inline double rat_d(const Rat& r) { return r.get_d(); }

inline Rat rat_pow(const Rat& b, long e) {
    if (e < 0) {
        if (b == 0) throw std::domain_error("0^negative");
        return rat_pow(1 / b, -e);
    }
    Rat acc = 1, x = b;
    while (e) {
        if (e & 1) acc *= x;
        x *= x;
        e >>= 1;
    }
    return acc;
}

// Continued-fraction reconstruction: nearest rational to x with denominator <= max_den,
// accepted when within tol. Used to lift numeric search output back to exact values.
inline std::optional<Rat> rat_reconstruct(double x, long max_den = 1000000,
                                          double tol = 1e-7) {
    if (!(x == x) || x > 1e18 || x < -1e18) return std::nullopt;
    long sign = x < 0 ? -1 : 1;
    double v = x < 0 ? -x : x;
    // convergents of the continued fraction of v
    long p0 = 1, q0 = 0;  // h_{-1}
    long p1 = (long)v, q1 = 1;
    double frac = v - (double)p1;
    for (int it = 0; it < 40; ++it) {
        double approx = (double)p1 / (double)q1;
        if (q1 > 0 && std::abs(approx - v) <= tol * (1.0 + v)) {
            Rat r(sign * p1, q1);
            r.canonicalize();
            return r;
        }
        if (frac < 1e-15) break;
        double inv = 1.0 / frac;
        long a = (long)inv;
        frac = inv - (double)a;
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || p2 < 0 || q2 < 0) break;  // overflow / bound
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    double approx = (double)p1 / (double)q1;
    if (q1 > 0 && q1 <= max_den && std::abs(approx - v) <= tol * (1.0 + v)) {
        Rat r(sign * p1, q1);
        r.canonicalize();
        return r;
    }
    return std::nullopt;
}

}  // namespace pairshare
