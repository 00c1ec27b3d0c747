#pragma once

#include <map>
#include <mutex>

#include "fano3/poly.hpp"

namespace fano3 {

// m-th cyclotomic polynomial via the recursion
// Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d.
inline Poly cyclotomic(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic index must be positive");
    static std::map<int, Poly> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);

    auto compute = [](auto&& self, int n) -> const Poly& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        Poly p = sub(poly_monomial(Rat(1), n), poly_one());  // t^n - 1
        for (int d = 1; d < n; ++d) {
            if (n % d == 0) p = div_exact(p, self(self, d));
        }
        return cache.emplace(n, std::move(p)).first->second;
    };
    return compute(compute, m);
}

// True iff Phi_m divides den exactly.
inline bool cyclotomic_divides(const Poly& den, int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic index must be positive");
    if (den.is_zero()) return true;
    return divides(cyclotomic(m), den);
}

}  // namespace fano3
