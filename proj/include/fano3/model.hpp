#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "poly.hpp"
#include "rational_function.hpp"
#include "riemann_roch.hpp"
#include "singularity.hpp"

namespace fano3 {

// Raised when a series cannot be completed to a polynomial numerator over a
// weight product, or when weight selection fails to converge.
struct AbsorptionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeneratorEstimate {
    std::vector<int> degrees;       // sorted multiset
    std::optional<int> stopped_at;  // first degree whose deficit went negative
    bool capped = false;            // ran through cap without a negative deficit

    bool operator==(const GeneratorEstimate&) const = default;
};

// Guess generator degrees from a series prefix. At each degree d the deficit
// p_d - q_d, with q the expansion of 1/prod(1 - t^e) over the degrees found
// so far, counts new degree-d generators; the first negative deficit is the
// first relation and stops the guessing. Deficits stay integral for every
// series in scope; a fractional one means the prefix is not a Hilbert series.
inline GeneratorEstimate find_first_generators(const SeriesPrefix& prefix, int cap = 30) {
    if (prefix.coefficients.empty() || prefix.coefficients[0] != 1)
        throw std::invalid_argument("generator estimation requires p_0 = 1");
    if (cap > prefix.order)
        throw std::invalid_argument("cap exceeds the expanded prefix");
    GeneratorEstimate est;
    std::vector<Int> q(static_cast<std::size_t>(std::max(cap, 0)) + 1, Int(0));
    q[0] = 1;
    for (int d = 1; d <= cap; ++d) {
        Rat deficit = prefix.coefficients[static_cast<std::size_t>(d)] -
                      Rat(q[static_cast<std::size_t>(d)]);
        if (!is_integer(deficit))
            throw std::domain_error("non-integral generator deficit at degree " +
                                    std::to_string(d));
        if (deficit < 0) {
            est.stopped_at = d;
            return est;
        }
        long n = to_long(deficit);
        for (long copy = 0; copy < n; ++copy) {
            est.degrees.push_back(d);
            for (std::size_t m = static_cast<std::size_t>(d); m < q.size(); ++m)
                q[m] += q[m - static_cast<std::size_t>(d)];
        }
    }
    est.capped = true;
    return est;
}

// Extend the degree multiset until series * prod(1 - t^e) is a polynomial.
// Each round appends the largest m <= 60 whose cyclotomic divides the
// residual denominator, aiming the factor at the highest orbifold order.
inline std::vector<int> absorb_denominator(const RationalFunction& series,
                                           std::vector<int> degrees) {
    for (int round = 0; round < 16; ++round) {
        RationalFunction r = mul_by_weight_product(series, degrees);
        if (r.is_polynomial()) {
            std::sort(degrees.begin(), degrees.end());
            return degrees;
        }
        int found = 0;
        for (int m = 60; m >= 1; --m)
            if (cyclotomic_divides(r.den(), m)) {
                found = m;
                break;
            }
        if (found == 0)
            throw AbsorptionError(
                "no cyclotomic factor of order <= 60 divides the residual denominator");
        degrees.push_back(found);
    }
    throw AbsorptionError("denominator not absorbed within 16 extra generators");
}

// Requirements a germ [r,a] places on the ambient weights: a vertex weight
// divisible by r, and transverse weights realizing the residues a, r-a and
// f mod r. Returns the missing (r, residue) pairs, residue 0 for the vertex.
inline std::vector<std::pair<int, int>> coverage_deficits(const Basket& b,
                                                          const std::vector<int>& weights) {
    std::vector<std::pair<int, int>> deficits;
    std::set<std::pair<int, int>> germs;
    for (const auto& s : b.items) germs.insert({static_cast<int>(s.r), static_cast<int>(s.a)});
    for (auto [r, a] : germs) {
        bool vertex = false;
        for (int w : weights)
            if (w % r == 0) vertex = true;
        if (!vertex) deficits.push_back({r, 0});
        std::map<int, int> need, have;
        ++need[a % r];
        ++need[(r - a) % r];
        ++need[static_cast<int>(b.f) % r];
        for (int w : weights)
            if (w % r != 0) ++have[w % r];
        for (auto [rho, cnt] : need) {
            auto it = have.find(rho);
            int miss = cnt - (it == have.end() ? 0 : it->second);
            for (int j = 0; j < miss; ++j) deficits.push_back({r, rho});
        }
    }
    return deficits;
}

// Fill coverage deficits one weight at a time: largest r first, smallest
// missing residue, least positive representative. Recomputing after every
// addition lets one weight serve several germs at once.
inline std::vector<int> cover_basket(const Basket& b, std::vector<int> weights) {
    std::sort(weights.begin(), weights.end());
    for (int round = 0; round < 64; ++round) {
        auto deficits = coverage_deficits(b, weights);
        if (deficits.empty()) return weights;
        int r = 0;
        for (const auto& d : deficits) r = std::max(r, d.first);
        int rho = r;
        for (const auto& d : deficits)
            if (d.first == r) rho = std::min(rho, d.second);
        weights.push_back(rho > 0 ? rho : r);
        std::sort(weights.begin(), weights.end());
    }
    throw AbsorptionError("singularity coverage did not converge");
}

// Numerator of the form prod(1 - t^{d_i}), factors split off smallest first.
inline std::optional<std::vector<int>> factor_complete_intersection(Poly n) {
    std::vector<int> eqs;
    while (n.degree() > 0) {
        int d = 0;
        for (int i = 1; i <= n.degree(); ++i)
            if (n.at(static_cast<std::size_t>(i)) != 0) {
                d = i;
                break;
            }
        if (d == 0 || n.at(static_cast<std::size_t>(d)) > 0) return std::nullopt;
        Poly factor = one_minus_tn(static_cast<std::size_t>(d));
        if (!divides(factor, n)) return std::nullopt;
        n = div_exact(n, factor);
        eqs.push_back(d);
    }
    if (!(n == poly_one())) return std::nullopt;
    return eqs;
}

// Shape 1 - sum t^{e_i} + sum t^{k-e_i} - t^k over five degrees e_i. Pairs
// with e_i + e_j = k cancel, so missing degrees are refilled with k/2 before
// the shape is rebuilt and compared exactly.
inline std::optional<std::pair<std::vector<int>, int>> detect_pfaffian(const Poly& n) {
    int k = n.degree();
    if (k <= 0 || n.at(0) != 1 || n.at(static_cast<std::size_t>(k)) != -1) return std::nullopt;
    std::vector<int> e;
    for (int i = 1; i < k; ++i) {
        Rat c = n.at(static_cast<std::size_t>(i));
        if (c < 0) {
            if (!is_integer(c)) return std::nullopt;
            long m = -to_long(c);
            for (long j = 0; j < m; ++j) e.push_back(i);
        }
    }
    while (e.size() < 5) {
        if (k % 2 != 0) return std::nullopt;
        e.push_back(k / 2);
    }
    if (e.size() != 5) return std::nullopt;
    std::vector<Rat> shape(static_cast<std::size_t>(k) + 1, Rat(0));
    shape[0] += 1;
    shape[static_cast<std::size_t>(k)] -= 1;
    for (int ei : e) {
        shape[static_cast<std::size_t>(ei)] -= 1;
        shape[static_cast<std::size_t>(k - ei)] += 1;
    }
    if (!(Poly(std::move(shape)) == n)) return std::nullopt;
    std::sort(e.begin(), e.end());
    return std::make_pair(std::move(e), k);
}

struct ModelProposal {
    std::vector<int> weights;  // sorted
    Poly numerator;            // series * prod(1 - t^w), integer coefficients
    int codimension = 0;       // |weights| - 4
    std::optional<std::vector<int>> equation_degrees;
    std::optional<int> adjunction_degree;  // top numerator degree, Pfaffian case
    bool high_codimension = false;         // codimension > 4: unreviewed territory

    bool operator==(const ModelProposal&) const = default;
};

// Weighted-projective model proposal for a filter survivor: estimate the
// first generators, absorb what is left of the denominator, then add the
// weights each germ needs from the ambient space. Heuristic by nature; the
// result is a proposal, not a classification.
inline ModelProposal propose_model(const Candidate& c, int cap = 30) {
    GeneratorEstimate est = find_first_generators(c.prefix, cap);
    std::vector<int> weights = absorb_denominator(c.series, est.degrees);
    weights = cover_basket(c.basket, std::move(weights));

    RationalFunction complete = mul_by_weight_product(c.series, weights);
    if (!complete.is_polynomial())
        throw AbsorptionError("weight product left a residual denominator");

    ModelProposal m;
    m.weights = std::move(weights);
    m.numerator = complete.num();
    if (!integer_coefficients(m.numerator))
        throw AbsorptionError("numerator has non-integral coefficients");
    m.codimension = static_cast<int>(m.weights.size()) - 4;
    if (m.codimension < 0)
        throw AbsorptionError("fewer than four generators proposed");

    if (m.codimension == 0) {
        if (m.numerator == poly_one()) m.equation_degrees = std::vector<int>{};
    } else if (m.codimension <= 2) {
        m.equation_degrees = factor_complete_intersection(m.numerator);
    } else if (m.codimension == 3) {
        if (auto pf = detect_pfaffian(m.numerator)) {
            m.equation_degrees = std::move(pf->first);
            m.adjunction_degree = pf->second;
        }
    }
    m.high_codimension = m.codimension > 4;
    return m;
}

}  // namespace fano3
