// Acceptance gate: seven criteria, one PASS/FAIL line each, nonzero exit if
// any fail. Every comparison is exact integer or rational equality; the only
// tolerance anywhere is criterion 1's sixty-second runtime budget.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fano3/fano3.hpp"

using namespace fano3;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << detail
              << std::endl;
}

void run_criterion(int n, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [ok, detail] = body();
        report(n, ok, detail);
    } catch (const std::exception& e) {
        report(n, false, std::string("exception: ") + e.what());
    }
}

std::string data_path() { return std::string(FANO3_DATA_DIR) + "/reference_tables.json"; }

template <class T>
std::string join(const std::vector<T>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

int main() {
    std::map<long, PipelineReport> reports;
    std::vector<std::pair<Candidate, ModelProposal>> proposals;

    // Criterion 1: index-3 stage counts, under the runtime budget.
    run_criterion(1, [&]() -> std::pair<bool, std::string> {
        auto t0 = std::chrono::steady_clock::now();
        PipelineReport r = run_pipeline(3);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        PipelineCounts want{2813, 1295, 1295, 231, 181};
        bool ok = r.counts == want && secs < 60.0;
        std::ostringstream d;
        d << "f=3 stage counts " << r.counts.enumerated << "/" << r.counts.positive_degree << "/"
          << r.counts.bk_bound << "/" << r.counts.stable << " (want 2813/1295/231/181), "
          << std::fixed << secs << "s against the 60s budget";
        reports[3] = std::move(r);
        return {ok, d.str()};
    });

    // Criterion 2: the sweep table rows.
    run_criterion(2, [&]() -> std::pair<bool, std::string> {
        const std::vector<long> indices = default_indices();
        const std::vector<std::int64_t> want_series{231, 124, 63, 11, 23, 10, 2, 1, 3, 2, 1, 1};
        const std::vector<std::int64_t> want_unstable{50, 42, 29, 5, 11, 6, 0, 1, 0, 0, 0, 0};
        SweepSummary summary = sweep();
        std::vector<std::int64_t> series, unstable;
        for (long f : indices) {
            series.push_back(summary.rows.at(f).series_count);
            unstable.push_back(summary.rows.at(f).unstable_count);
        }
        bool ok = series == want_series && unstable == want_unstable;
        return {ok, "series counts (" + join(series) + ") and unstable counts (" +
                        join(unstable) + ") across f in {3..11,13,17,19}, both exact"};
    });

    // Shared survivor set and model proposals for the remaining criteria.
    for (long f : default_indices())
        if (!reports.count(f)) reports[f] = run_pipeline(f);
    for (const auto& [f, rep] : reports)
        for (const auto& c : rep.candidates) proposals.emplace_back(c, propose_model(c));

    std::vector<ReferenceRow> rows = load_reference_rows(data_path());

    // Criterion 3: every equation-table row end to end, and the Ac2 misprint.
    run_criterion(3, [&]() -> std::pair<bool, std::string> {
        std::vector<ReferenceRow> subset;
        for (const auto& r : rows)
            if (r.table == "T1" || r.table == "T2" || r.table == "T3") subset.push_back(r);
        MatchReport match = match_tables(subset, proposals);
        long matched = 0;
        std::string first_problem;
        for (const auto& rm : match.rows) {
            if (rm.status == MatchStatus::matched) {
                ++matched;
            } else if (first_problem.empty()) {
                first_problem = " [first problem: f=" + std::to_string(rm.row.f) + " basket " +
                                rm.row.basket +
                                (rm.mismatches.empty() ? " missing" : " " + rm.mismatches[0]) + "]";
            }
        }

        Candidate x15 = make_candidate(parse_basket(3, "2,1;7,2"));
        ModelProposal m15 = propose_model(x15);
        bool spot = x15.a3 == rat(1, 14) && x15.ac2 == rat(73, 14) &&
                    m15.weights == std::vector<int>{1, 2, 3, 5, 7} &&
                    m15.equation_degrees == std::vector<int>{15};

        bool misprint_flagged = false;
        Candidate x4 = make_candidate(parse_basket(3, "2,1;2,1"));
        for (const auto& r : subset)
            if (r.f == 3 && r.basket == "2,1;2,1")
                misprint_flagged = r.annotations.count("printed_ac2") == 1 &&
                                   r.annotations.at("printed_ac2") == "7/12" && r.ac2 == 7 &&
                                   x4.ac2 == 7;

        bool ok = match.all_matched() && matched == 43 && spot && misprint_flagged;
        return {ok, std::to_string(matched) +
                        "/43 equation-table rows reproduced end to end (weights, equation "
                        "degrees, A3, Ac2 all exact); X4 in P(1,1,1,2,2) computes Ac2=7 and the "
                        "row carries its printed-7/12 flag" +
                        first_problem};
    });

    // Criterion 4: the index-5 worked example, step by step.
    run_criterion(4, [&]() -> std::pair<bool, std::string> {
        Candidate c = make_candidate(parse_basket(5, "2,1;3,1;7,3"));
        Poly printed_num(std::vector<Rat>{1, 0, 0, 1, 1, 1, 0, 0, 1});
        Poly printed_den(std::vector<Rat>{1, -1, -1, 0, 1, 1, -1, -1, 1, 1, 0, -1, -1, 1});
        bool series_ok = c.series == RationalFunction(printed_num, printed_den);

        std::vector<Rat> want_prefix{1, 1, 2, 4, 6, 9, 13, 18, 24};
        bool prefix_ok = true;
        for (std::size_t i = 0; i < want_prefix.size(); ++i)
            prefix_ok = prefix_ok && c.prefix.coefficients[i] == want_prefix[i];

        GeneratorEstimate est = find_first_generators(c.prefix);
        bool estimate_ok = est.degrees == std::vector<int>{1, 2, 3, 3, 4, 5};
        bool absorb_ok =
            absorb_denominator(c.series, est.degrees) == std::vector<int>{1, 2, 3, 3, 4, 5, 7};

        ModelProposal m = propose_model(c);
        std::vector<Rat> want_num(21, Rat(0));
        want_num[0] = 1;
        for (int e : {6, 7, 8, 9}) want_num[static_cast<std::size_t>(e)] = -1;
        for (int e : {11, 12, 13, 14}) want_num[static_cast<std::size_t>(e)] = 1;
        want_num[20] = -1;
        bool model_ok = m.numerator == Poly(std::move(want_num)) && m.codimension == 3 &&
                        m.equation_degrees == std::vector<int>{6, 7, 8, 9, 10};

        bool ok = series_ok && prefix_ok && estimate_ok && absorb_ok && model_ok;
        return {ok,
                "worked example at f=5: printed rational function, prefix 1,1,2,4,6,9,13,18,24, "
                "generator estimate {1,2,3,3,4,5}, absorption appends 7, numerator "
                "1-t^6-t^7-t^8-t^9+t^11+t^12+t^13+t^14-t^20, Pfaffian degrees {6,7,8,9,10}"};
    });

    // Criterion 5: anticanonical sections exist for every survivor.
    run_criterion(5, [&]() -> std::pair<bool, std::string> {
        bool ok = true;
        long survivors = 0;
        for (const auto& [f, rep] : reports) {
            ok = ok && check_theorem2(rep);
            survivors += static_cast<long>(rep.candidates.size());
        }
        return {ok, "coefficient of t^f is >= 1 for all " + std::to_string(survivors) +
                        " bound-stage survivors across the 12 default indices"};
    });

    // Criterion 6: property suites over all survivors plus 500 sampled baskets.
    run_criterion(6, [&]() -> std::pair<bool, std::string> {
        std::vector<Candidate> subjects;
        for (const auto& [f, rep] : reports)
            for (const auto& c : rep.candidates) subjects.push_back(c);
        std::size_t survivor_count = subjects.size();

        std::mt19937_64 rng(20260822ULL);
        const std::vector<long> indices = default_indices();
        long sampled = 0;
        for (std::size_t i = 0; i < indices.size(); ++i) {
            long quota = 500 / 12 + (i < 500 % 12 ? 1 : 0);
            std::vector<Basket> pool = enumerate_baskets(indices[i]);
            for (long k = 0; k < quota; ++k)
                subjects.push_back(make_candidate(pool[rng() % pool.size()]));
            sampled += quota;
        }

        bool expansion_ok = true, duality_ok = true, serre_ok = true, antisym_ok = true;
        for (const auto& c : subjects) {
            long f = c.basket.f;
            for (long n = 0; n <= 30 && expansion_ok; ++n)
                expansion_ok = c.prefix.coefficients[static_cast<std::size_t>(n)] ==
                               p_n(c.basket, c.a3, c.ac2, n);
            for (const auto& s : c.basket.items)
                for (long n = -10; n <= 10 && duality_ok; ++n)
                    duality_ok = c_p(s, n) + c_p(s, -n - f) == rat(-(s.r * s.r - 1), 12 * s.r);
            serre_ok = serre_ok && serre_symmetric(c.series, f) == c.stages.excess_vanishing;
            for (long n = -f + 1; n < 0 && antisym_ok; ++n)
                antisym_ok = p_n(c.basket, c.a3, c.ac2, n) == -p_n(c.basket, c.a3, c.ac2, -n - f);
        }

        bool gorenstein_ok = true, adjunction_ok = true;
        long fixtures = 0;
        for (const auto& row : rows) {
            const std::pair<Candidate, ModelProposal>* hit = nullptr;
            for (const auto& p : proposals)
                if (p.first.basket.f == row.f && to_string(p.first.basket) == row.basket) {
                    hit = &p;
                    break;
                }
            if (hit == nullptr) {
                gorenstein_ok = false;
                continue;
            }
            ++fixtures;
            const ModelProposal& m = hit->second;
            long weight_sum = 0;
            for (int w : m.weights) weight_sum += w;
            gorenstein_ok = gorenstein_ok && m.numerator.degree() == weight_sum - row.f;
            Poly rev = reversed(m.numerator);
            gorenstein_ok = gorenstein_ok &&
                            (m.weights.size() % 2 == 0 ? rev == m.numerator
                                                       : rev == scale(m.numerator, Rat(-1)));
            if (m.codimension <= 2 && m.equation_degrees) {
                long eq_sum = 0;
                for (int e : *m.equation_degrees) eq_sum += e;
                adjunction_ok = adjunction_ok && eq_sum - weight_sum == -row.f;
            }
        }

        bool ok = expansion_ok && duality_ok && serre_ok && antisym_ok && gorenstein_ok &&
                  adjunction_ok && sampled == 500 && fixtures == 58;
        std::ostringstream d;
        d << "over " << survivor_count << " survivors plus " << sampled
          << " sampled baskets: series expansion matches the closed form to order 30, "
             "c_p(n)+c_p(-n-f) = -(r^2-1)/(12r), Serre symmetry holds exactly when the excess "
             "coefficients vanish, and p_n = -p_{-n-f} on -f < n < 0; all " << fixtures
          << " fixture numerators are Gorenstein-symmetric and the codim <= 2 rows satisfy "
             "sum(eq) - sum(w) = -f";
        return {ok, d.str()};
    });

    // Criterion 7: curated codimension-4 rows are a subset of the raw
    // proposals; off-table codimension <= 2 proposals are informational.
    run_criterion(7, [&]() -> std::pair<bool, std::string> {
        std::vector<ReferenceRow> t4;
        for (const auto& r : rows)
            if (r.table == "T4") t4.push_back(r);
        MatchReport match = match_tables(t4, proposals);
        long matched = 0;
        for (const auto& rm : match.rows)
            if (rm.status == MatchStatus::matched) ++matched;

        MatchReport full = match_tables(rows, proposals);
        long extras_f3 = 0;
        for (const auto& e : full.extras)
            if (e.f == 3) ++extras_f3;

        CodimensionCensus census = load_codimension_census(data_path());
        std::map<int, long> expected{{0, 7}, {1, 27}, {2, 14}, {3, 2}, {4, 8}};
        bool census_ok = census.totals == expected;

        std::map<int, long> stable_by_codim;
        for (const auto& [c, m] : proposals)
            if (c.stages.stable) ++stable_by_codim[m.codimension];
        bool histogram_ok = true;
        for (int codim = 0; codim <= 3; ++codim)
            histogram_ok = histogram_ok && stable_by_codim[codim] == expected[codim];
        histogram_ok = histogram_ok && stable_by_codim[4] >= expected[4];

        bool ok = match.all_matched() && matched == 8 && census_ok && histogram_ok;
        std::ostringstream d;
        d << matched
          << "/8 curated codimension-4 rows appear among the raw proposals with matching "
             "weights; "
          << full.extras.size() << " off-table codim <= 2 proposals overall (" << extras_f3
          << " at f=3, informational); census 7/27/14/2/8 confirmed as reference output, with "
             "the caveat that proposals are heuristic and the codimension-4 row is a curated "
             "selection from "
          << stable_by_codim[4] << " raw stable proposals";
        return {ok, d.str()};
    });

    std::cout << "acceptance: " << (7 - failures) << "/7 criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
