#pragma once

#include <stdexcept>
#include <vector>

#include "fano3/rational.hpp"
#include "fano3/rational_function.hpp"
#include "fano3/singularity.hpp"

namespace fano3 {

// Multiplier convention for the periodic contribution c_p.
// index_scaled (default) generates multipliers by beta = f * a^{-1} mod r,
// the standard normal form 1/r(1,-1,beta) of the germ; it reproduces all
// published table rows. plain_inverse uses b = a^{-1} mod r literally and
// is exposed on the CLI as --literal-b for comparison.
enum class Convention { index_scaled, plain_inverse };

// Least residue of -n/f mod r, the local orbit position of degree n.
inline long i_p(const SingularityType& s, long n) {
    return mod_least(-n * s.f_inv, s.r);
}

// Periodic local contribution c_p(n) of the germ to chi(X, nA).
inline Rat c_p(const SingularityType& s, long n,
               Convention conv = Convention::index_scaled) {
    long mult = conv == Convention::index_scaled ? s.beta : inverse_mod(s.a, s.r);
    long i = i_p(s, n);
    Rat c = rat(-i * (s.r * s.r - 1), 12 * s.r);
    for (long j = 1; j < i; ++j) {
        long mj = mod_least(mult * j, s.r);
        c += rat(mj * (s.r - mj), 2 * s.r);
    }
    return c;
}

// Ac_2 from the Kawamata identity (24 - sum(r - 1/r)) / f.
inline Rat ac2_of(const Basket& b) {
    Rat sum(0);
    for (const auto& s : b.items) sum += rat(s.r * s.r - 1, s.r);
    return (Rat(24) - sum) / Rat(b.f);
}

// A^3 solved from the vanishing chi(X, -A) = 0.
inline Rat degree_of(const Basket& b, Convention conv = Convention::index_scaled) {
    Rat ac2 = ac2_of(b);
    Rat sum(0);
    for (const auto& s : b.items) sum += c_p(s, -1, conv);
    long f = b.f;
    return (Rat(1) - ac2 / 12 + sum) * rat(12, (f - 1) * (f - 2));
}

// chi(X, nA) by the orbifold Riemann-Roch formula; valid for n > -f only
// (the plurigenus formula assumes H^i(X, nA) = 0 for i > 0).
inline Rat p_n(const Basket& b, const Rat& a3, const Rat& ac2, long n,
               Convention conv = Convention::index_scaled) {
    long f = b.f;
    if (n <= -f)
        throw std::domain_error("p_n undefined for n <= -f (n = " + std::to_string(n) +
                                ", f = " + std::to_string(f) + ")");
    Rat v = Rat(1) + rat(n * (n + f) * (2 * n + f), 12) * a3 + Rat(n) * ac2 / 12;
    for (const auto& s : b.items) v += c_p(s, n, conv);
    return v;
}

// Closed form of the Hilbert series:
// P(t) = 1/(1-t)
//      + A^3 [(f^2+3f+2)t + (8-2f^2)t^2 + (f^2-3f+2)t^3] / (12(1-t)^4)
//      + (Ac_2/12) t/(1-t)^2
//      + sum_p 1/(1-t^r) sum_{k=1}^{r-1} c_p(k) t^k.
inline RationalFunction hilbert_series(const Basket& b, const Rat& a3, const Rat& ac2,
                                       Convention conv = Convention::index_scaled) {
    long f = b.f;
    Poly omt = one_minus_tn(1);
    Poly omt2 = mul(omt, omt);
    Poly omt4 = mul(omt2, omt2);

    // Accumulate over a common denominator, reduce once at the end.
    // 1/(1-t) = (1-t)^3 / (1-t)^4
    Poly num = mul(omt2, omt);
    Poly den = omt4;
    // A^3 quadratic numerator term
    Poly qa(std::vector<Rat>{Rat(0), Rat(f * f + 3 * f + 2), Rat(8 - 2 * f * f),
                             Rat(f * f - 3 * f + 2)});
    num = add(num, scale(qa, a3 / 12));
    // (Ac_2/12) t/(1-t)^2 = (Ac_2/12) t (1-t)^2 / (1-t)^4
    num = add(num, scale(mul(Poly({Rat(0), Rat(1)}), omt2), ac2 / 12));

    for (const auto& s : b.items) {
        std::vector<Rat> pc(static_cast<std::size_t>(s.r), Rat(0));
        for (long k = 1; k < s.r; ++k) pc[k] = c_p(s, k, conv);
        Poly local(std::move(pc));
        Poly local_den = one_minus_tn(static_cast<std::size_t>(s.r));
        num = add(mul(num, local_den), mul(local, den));
        den = mul(den, local_den);
    }
    return RationalFunction(std::move(num), std::move(den));
}

// Serre symmetry P(1/t) = t^f P(t) as an exact rational-function identity.
inline bool serre_symmetric(const RationalFunction& p, long f) {
    const Poly& n = p.num();
    const Poly& d = p.den();
    if (n.is_zero()) return true;
    long shift = d.degree() - n.degree();  // P(1/t) = t^shift revN/revD
    Poly lhs = mul(reversed(n), d);
    Poly rhs = mul(n, reversed(d));
    if (shift >= f)
        lhs = mul(lhs, poly_monomial(Rat(1), static_cast<std::size_t>(shift - f)));
    else
        rhs = mul(rhs, poly_monomial(Rat(1), static_cast<std::size_t>(f - shift)));
    return lhs == rhs;
}

// Filter-stage facts about one basket, named as in the catalog schema.
struct StageFlags {
    bool kawamata = false;          // 1a: sum(r - 1/r) < 24, strict
    bool positive_degree = false;   // 1b: A^3 > 0, strict
    bool excess_vanishing = false;  // 1b+: p_n = 0 for -(f-1) <= n <= -2
    bool bk_bound = false;          // 1c: (4f^2-3f) A^3 <= 4f Ac_2
    bool stable = false;            // 1c+: f^2 A^3 <= 3 Ac_2

    bool operator==(const StageFlags&) const = default;
};

// Basket plus everything the catalog reports about it.
struct Candidate {
    Basket basket;
    Rat a3;
    Rat ac2;
    RationalFunction series;
    SeriesPrefix prefix;
    StageFlags stages;

    bool operator==(const Candidate&) const = default;
};

inline StageFlags compute_stages(const Basket& b, const Rat& a3, const Rat& ac2,
                                 Convention conv = Convention::index_scaled) {
    StageFlags st;
    Rat rsum(0);
    for (const auto& s : b.items) rsum += rat(s.r * s.r - 1, s.r);
    st.kawamata = rsum < 24;
    st.positive_degree = a3 > 0;
    st.excess_vanishing = true;
    for (long n = -2; n > -b.f; --n) {
        if (p_n(b, a3, ac2, n, conv) != 0) {
            st.excess_vanishing = false;
            break;
        }
    }
    long f = b.f;
    st.bk_bound = Rat(4 * f * f - 3 * f) * a3 <= Rat(4 * f) * ac2;
    st.stable = Rat(f * f) * a3 <= Rat(3) * ac2;
    return st;
}

inline Candidate make_candidate(const Basket& b, int order = 30,
                                Convention conv = Convention::index_scaled) {
    Candidate c;
    c.basket = b;
    c.a3 = degree_of(b, conv);
    c.ac2 = ac2_of(b);
    c.series = hilbert_series(b, c.a3, c.ac2, conv);
    c.prefix = c.series.expand(order);
    c.stages = compute_stages(b, c.a3, c.ac2, conv);
    return c;
}

// Coefficient of t^f in the Hilbert series: the dimension of the space of
// anticanonical sections.
inline Rat anticanonical_coefficient(const Candidate& c) {
    if (c.prefix.order < c.basket.f)
        throw std::invalid_argument("prefix too short for anticanonical coefficient");
    return c.prefix.coefficients[static_cast<std::size_t>(c.basket.f)];
}

}  // namespace fano3
