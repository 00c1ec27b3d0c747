#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fano3 {

// Exact arithmetic substrate. Int/Rat wrap GMP; every quantity in the
// library (A^3, Ac_2, c_p values, series coefficients) lives in Rat.
// No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// mpq_class does not canonicalize two-argument constructions on its own.
inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Parses "n" or "n/d"; malformed text raises std::invalid_argument.
inline Rat parse_rat(const std::string& text) {
    Rat q(text);
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
}

// "n" or "n/d", canonical sign on the numerator.
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer out of long range: " + z.get_str());
    return z.get_si();
}

inline long to_long(const Rat& q) {
    if (!is_integer(q)) throw std::domain_error("not an integer: " + q.get_str());
    return to_long(Int(q.get_num()));
}

// Least nonnegative residue; works for negative n.
inline long mod_least(long n, long m) {
    long r = n % m;
    return r < 0 ? r + m : r;
}

// Inverse of a mod m; requires gcd(a, m) = 1.
inline long inverse_mod(long a, long m) {
    long t = 0, new_t = 1, r = m, new_r = mod_least(a, m);
    while (new_r != 0) {
        long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::invalid_argument("not invertible: " + std::to_string(a) + " mod " + std::to_string(m));
    return mod_least(t, m);
}

}  // namespace fano3
