#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fano3/rational.hpp"

namespace fano3 {

// One basket germ [r,a]: the terminal cyclic quotient singularity
// 1/r(a,-a,f) polarized at index f. Stored with a canonicalized to
// min(a mod r, r - a mod r), since [r,a] and [r,r-a] name the same germ.
// beta generates the multiplier sequence of the Riemann-Roch
// contribution; f_inv inverts f mod r for the residue i_p.
struct SingularityType {
    long r = 0;
    long a = 0;
    long f = 0;
    long beta = 0;
    long f_inv = 0;

    bool operator==(const SingularityType&) const = default;
    auto operator<=>(const SingularityType&) const = default;
};

inline std::string to_string(const SingularityType& s) {
    return "[" + std::to_string(s.r) + "," + std::to_string(s.a) + "]";
}

inline SingularityType make_singularity(long r, long a, long f) {
    auto name = [&] { return "[" + std::to_string(r) + "," + std::to_string(a) + "]"; };
    if (r < 2) throw std::invalid_argument(name() + ": local index r must be at least 2");
    a = mod_least(a, r);
    if (a == 0 || std::gcd(a, r) != 1)
        throw std::invalid_argument(name() + ": gcd(a,r) != 1");
    if (std::gcd(f, r) != 1)
        throw std::invalid_argument(name() + ": gcd(r,f) != 1");
    a = std::min(a, r - a);
    SingularityType s;
    s.r = r;
    s.a = a;
    s.f = f;
    s.f_inv = inverse_mod(f, r);
    s.beta = mod_least(f * inverse_mod(a, r), r);
    return s;
}

// Multiset of germs sharing one index f, kept sorted by (r,a).
struct Basket {
    long f = 0;
    std::vector<SingularityType> items;

    bool operator==(const Basket&) const = default;
    auto operator<=>(const Basket&) const = default;
};

inline Basket make_basket(long f, std::vector<SingularityType> items) {
    std::sort(items.begin(), items.end());
    return Basket{f, std::move(items)};
}

// Grammar: "r,a;r,a;..." with whitespace ignored; the empty string is the
// empty basket (the smooth case).
inline Basket parse_basket(long f, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    std::vector<SingularityType> items;
    if (!s.empty()) {
        std::size_t pos = 0;
        while (true) {
            std::size_t semi = s.find(';', pos);
            std::string part = s.substr(pos, semi == std::string::npos ? semi : semi - pos);
            std::size_t comma = part.find(',');
            if (part.empty() || comma == std::string::npos || comma == 0 ||
                comma + 1 == part.size())
                throw std::invalid_argument("basket entry \"" + part +
                                            "\" is not of the form r,a");
            long r, a;
            try {
                r = std::stol(part.substr(0, comma));
                a = std::stol(part.substr(comma + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("basket entry \"" + part +
                                            "\" is not of the form r,a");
            }
            items.push_back(make_singularity(r, a, f));
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
    }
    return make_basket(f, std::move(items));
}

inline std::string to_string(const Basket& b) {
    std::string out;
    for (const auto& s : b.items) {
        if (!out.empty()) out += ";";
        out += std::to_string(s.r) + "," + std::to_string(s.a);
    }
    return out;
}

}  // namespace fano3
