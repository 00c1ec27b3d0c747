#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "riemann_roch.hpp"
#include "singularity.hpp"

namespace fano3 {

inline void require_index(long f) {
    if (f < 3 || f > 19)
        throw std::invalid_argument("index f must satisfy 3 <= f <= 19 (got " +
                                    std::to_string(f) + ")");
}

// All germs [r,a] a basket may contain: r <= 24 because r - 1/r < 24,
// r coprime to f, a coprime to r, canonical 1 <= a <= r/2.
inline std::vector<SingularityType> enumerate_types(long f) {
    require_index(f);
    std::vector<SingularityType> types;
    for (long r = 2; r <= 24; ++r) {
        if (std::gcd(r, f) != 1) continue;
        for (long a = 1; 2 * a <= r; ++a)
            if (std::gcd(a, r) == 1) types.push_back(make_singularity(r, a, f));
    }
    return types;
}

// r - 1/r scaled by lcm(1..24) so the budget stays in integers.
inline constexpr std::int64_t kKawamataScale = 5354228880;
inline constexpr std::int64_t kKawamataBudget = 24 * kKawamataScale;

inline std::int64_t kawamata_weight(long r) {
    return r * kKawamataScale - kKawamataScale / r;
}

namespace detail {

// Depth-first multiset extension; cur is non-decreasing, so emission order
// is lexicographic in the sorted item list.
inline void extend_baskets(const std::vector<SingularityType>& types, long f,
                           std::vector<SingularityType>& cur, std::size_t start,
                           std::int64_t used, std::vector<Basket>& out) {
    out.push_back(Basket{f, cur});
    for (std::size_t i = start; i < types.size(); ++i) {
        std::int64_t w = kawamata_weight(types[i].r);
        if (used + w >= kKawamataBudget) break;  // weights non-decreasing in i
        cur.push_back(types[i]);
        extend_baskets(types, f, cur, i, used + w, out);
        cur.pop_back();
    }
}

}  // namespace detail

// Every basket with sum(r - 1/r) strictly below 24, the empty basket
// included, in lexicographic order of the sorted item list.
inline std::vector<Basket> enumerate_baskets(long f) {
    require_index(f);
    auto types = enumerate_types(f);
    std::vector<Basket> out;
    std::vector<SingularityType> cur;
    detail::extend_baskets(types, f, cur, 0, 0, out);
    return out;
}

// Partition 0 holds the empty basket; partition k+1 holds the baskets whose
// smallest germ is types[k]. Slices are independent, so they can be filled
// on separate workers and merged afterwards.
inline std::vector<std::vector<Basket>> enumerate_baskets_partitioned(long f) {
    require_index(f);
    auto types = enumerate_types(f);
    std::vector<std::vector<Basket>> parts;
    parts.push_back({Basket{f, {}}});
    for (std::size_t k = 0; k < types.size(); ++k) {
        std::vector<Basket> part;
        std::int64_t w = kawamata_weight(types[k].r);
        if (w < kKawamataBudget) {
            std::vector<SingularityType> cur{types[k]};
            detail::extend_baskets(types, f, cur, k, w, part);
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

inline std::vector<Basket> merge_partitions(std::vector<std::vector<Basket>> parts) {
    std::vector<Basket> all;
    for (auto& p : parts)
        for (auto& b : p) all.push_back(std::move(b));
    std::sort(all.begin(), all.end());
    return all;
}

struct PipelineCounts {
    std::int64_t enumerated = 0;        // 1a
    std::int64_t positive_degree = 0;   // 1b
    std::int64_t excess_vanishing = 0;  // 1b+
    std::int64_t bk_bound = 0;          // 1c
    std::int64_t stable = 0;            // 1c+

    bool operator==(const PipelineCounts&) const = default;
};

struct PipelineOptions {
    bool apply_stability = false;  // 1c+ stays a flag unless set
    int order = 30;
    Convention convention = Convention::index_scaled;
};

struct PipelineReport {
    long f = 0;
    PipelineCounts counts;
    std::vector<Candidate> candidates;
    std::int64_t distinct_series = 0;
    std::vector<Basket> integrality_warnings;

    bool operator==(const PipelineReport&) const = default;
};

// Filter chain over the full enumeration. Candidates are the bound-stage
// survivors (stability filters them only on request, the counts always
// record it); distinct_series deduplicates their reduced series.
inline PipelineReport run_pipeline(long f, const PipelineOptions& options = {}) {
    PipelineReport report;
    report.f = f;
    std::set<std::string> series_keys;
    for (const auto& b : enumerate_baskets(f)) {
        ++report.counts.enumerated;
        Rat ac2 = ac2_of(b);
        Rat a3 = degree_of(b, options.convention);
        StageFlags st = compute_stages(b, a3, ac2, options.convention);
        if (!st.positive_degree) continue;
        ++report.counts.positive_degree;
        if (!st.excess_vanishing) continue;
        ++report.counts.excess_vanishing;
        if (!st.bk_bound) continue;
        ++report.counts.bk_bound;
        if (st.stable) ++report.counts.stable;
        Candidate c = make_candidate(b, options.order, options.convention);
        series_keys.insert(to_string(c.series.num()) + "|" + to_string(c.series.den()));
        bool clean = c.prefix.all_integral();
        for (const auto& v : c.prefix.coefficients)
            if (v < 0) clean = false;
        if (!clean) report.integrality_warnings.push_back(b);
        if (!options.apply_stability || c.stages.stable)
            report.candidates.push_back(std::move(c));
    }
    report.distinct_series = static_cast<std::int64_t>(series_keys.size());
    return report;
}

// Nonvanishing of the anticanonical space over the report's candidates.
inline bool check_theorem2(const PipelineReport& report) {
    for (const auto& c : report.candidates)
        if (anticanonical_coefficient(c) < 1) return false;
    return true;
}

struct SweepRow {
    std::int64_t series_count = 0;
    std::int64_t unstable_count = 0;

    bool operator==(const SweepRow&) const = default;
};

struct SweepSummary {
    std::map<long, SweepRow> rows;

    bool operator==(const SweepSummary&) const = default;
};

// Indices with candidates; 12, 14, 15, 16 and 18 admit none.
inline std::vector<long> default_indices() {
    return {3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 17, 19};
}

inline SweepSummary sweep(const std::vector<long>& indices = default_indices(),
                          const PipelineOptions& options = {}) {
    SweepSummary summary;
    for (long f : indices) {
        PipelineReport r = run_pipeline(f, options);
        std::set<std::string> unstable;
        for (const auto& c : r.candidates)
            if (!c.stages.stable)
                unstable.insert(to_string(c.series.num()) + "|" + to_string(c.series.den()));
        summary.rows[f] = SweepRow{r.distinct_series,
                                   static_cast<std::int64_t>(unstable.size())};
    }
    return summary;
}

}  // namespace fano3
