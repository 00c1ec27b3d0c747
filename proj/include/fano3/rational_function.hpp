#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fano3/poly.hpp"

namespace fano3 {

// Truncated power-series prefix: coefficients[0..order].
struct SeriesPrefix {
    int order = 0;
    std::vector<Rat> coefficients;

    bool all_integral() const {
        for (const auto& c : coefficients)
            if (!is_integer(c)) return false;
        return true;
    }

    bool operator==(const SeriesPrefix&) const = default;
};

// Rational function in canonical form: num/den reduced by polynomial gcd,
// then scaled so den(0) = 1. Every series in scope has P(0) = 1, so the
// denominator never vanishes at t = 0 and the form is unique; for the
// series in scope the scaled coefficients also come out integral.
class RationalFunction {
  public:
    RationalFunction() : num_(poly_one()), den_(poly_one()) {}

    RationalFunction(Poly num, Poly den) {
        if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
        Poly g = gcd(num, den);
        if (g.degree() > 0) {
            num = div_exact(num, g);
            den = div_exact(den, g);
        }
        Rat c0 = den.at(0);
        if (c0 == 0) throw std::invalid_argument("denominator vanishes at t = 0");
        num_ = scale(num, 1 / c0);
        den_ = scale(den, 1 / c0);
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_polynomial() const { return den_ == poly_one(); }

    bool operator==(const RationalFunction&) const = default;

    // Formal power-series expansion at t = 0 through degree `order`,
    // by the linear recurrence the denominator defines.
    SeriesPrefix expand(int order) const {
        if (order < 0) throw std::invalid_argument("expansion order must be nonnegative");
        std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
        for (int n = 0; n <= order; ++n) {
            Rat v = num_.at(n);
            int kmax = std::min(n, den_.degree());
            for (int k = 1; k <= kmax; ++k) v -= den_.coeff[k] * c[n - k];
            c[n] = v;
        }
        return SeriesPrefix{order, std::move(c)};
    }

    std::string to_string() const {
        if (is_polynomial()) return fano3::to_string(num_);
        return "(" + fano3::to_string(num_) + ") / (" + fano3::to_string(den_) + ")";
    }

  private:
    Poly num_;
    Poly den_;
};

inline RationalFunction add(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(add(mul(a.num(), b.den()), mul(b.num(), a.den())),
                            mul(a.den(), b.den()));
}

// F * prod_{d in degrees} (1 - t^d), reduced. Empty multiset is the identity.
inline RationalFunction mul_by_weight_product(const RationalFunction& f,
                                              const std::vector<int>& degrees) {
    Poly prod = poly_one();
    for (int d : degrees) {
        if (d < 1) throw std::invalid_argument("weight degrees must be positive");
        prod = mul(prod, one_minus_tn(static_cast<std::size_t>(d)));
    }
    return RationalFunction(mul(f.num(), prod), f.den());
}

}  // namespace fano3
