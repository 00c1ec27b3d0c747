#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fano3/rational.hpp"

namespace fano3 {

// Dense polynomial in one variable t; coeff[i] is the coefficient of t^i.
// Invariant: coeff is empty (the zero polynomial) or coeff.back() != 0.
struct Poly {
    std::vector<Rat> coeff;

    Poly() = default;
    explicit Poly(std::vector<Rat> c) : coeff(std::move(c)) { trim(); }

    void trim() {
        while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
    }

    bool is_zero() const { return coeff.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeff.size()) - 1; }

    Rat at(std::size_t i) const { return i < coeff.size() ? coeff[i] : Rat(0); }

    bool operator==(const Poly&) const = default;
};

inline Poly poly_one() { return Poly({Rat(1)}); }

inline Poly poly_monomial(const Rat& c, std::size_t k) {
    if (c == 0) return Poly();
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return Poly(std::move(v));
}

// 1 - t^e
inline Poly one_minus_tn(std::size_t e) {
    std::vector<Rat> v(e + 1, Rat(0));
    v[0] = 1;
    v[e] = -1;
    return Poly(std::move(v));
}

inline Poly add(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.coeff.size(), b.coeff.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeff.size(); ++i) v[i] += a.coeff[i];
    for (std::size_t i = 0; i < b.coeff.size(); ++i) v[i] += b.coeff[i];
    return Poly(std::move(v));
}

inline Poly sub(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.coeff.size(), b.coeff.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeff.size(); ++i) v[i] += a.coeff[i];
    for (std::size_t i = 0; i < b.coeff.size(); ++i) v[i] -= b.coeff[i];
    return Poly(std::move(v));
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> v(a.coeff.size() + b.coeff.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeff.size(); ++i) {
        if (a.coeff[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeff.size(); ++j) {
            if (b.coeff[j] != 0) v[i + j] += a.coeff[i] * b.coeff[j];
        }
    }
    return Poly(std::move(v));
}

inline Poly scale(const Poly& a, const Rat& c) {
    if (c == 0) return Poly();
    std::vector<Rat> v(a.coeff);
    for (auto& x : v) x *= c;
    return Poly(std::move(v));
}

// Quotient and remainder; divisor must be nonzero.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rat> rem(a.coeff);
    const auto db = b.coeff.size();
    if (rem.size() < db) return {Poly(), Poly(std::move(rem))};
    std::vector<Rat> quot(rem.size() - db + 1, Rat(0));
    const Rat& lead = b.coeff.back();
    for (std::size_t i = rem.size(); i >= db;) {
        --i;
        if (rem[i] == 0) continue;
        Rat c = rem[i] / lead;
        std::size_t shift = i - (db - 1);
        quot[shift] = c;
        for (std::size_t j = 0; j < db; ++j) rem[shift + j] -= c * b.coeff[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

// Exact division; throws if the remainder is nonzero.
inline Poly div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division not exact");
    return q;
}

inline bool divides(const Poly& b, const Poly& a) {
    return divmod(a, b).second.is_zero();
}

// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.coeff.back() != 1) a = scale(a, 1 / a.coeff.back());
    return a;
}

// Coefficients reversed with respect to the polynomial's own degree:
// for p of degree n, returns t^n p(1/t).
inline Poly reversed(const Poly& p) {
    std::vector<Rat> v(p.coeff.rbegin(), p.coeff.rend());
    return Poly(std::move(v));
}

inline bool integer_coefficients(const Poly& p) {
    for (const auto& c : p.coeff)
        if (!is_integer(c)) return false;
    return true;
}

// Human-readable form, e.g. "1 - t^6 + 2t^7 - t^20".
inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeff.size(); ++i) {
        const Rat& c = p.coeff[i];
        if (c == 0) continue;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string term;
        if (i == 0) {
            term = to_string(mag);
        } else {
            if (mag != 1) term = to_string(mag) + "*";
            term += "t";
            if (i > 1) term += "^" + std::to_string(i);
        }
        out += term;
    }
    return out;
}

}  // namespace fano3
