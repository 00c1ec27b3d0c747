#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "model.hpp"
#include "riemann_roch.hpp"
#include "singularity.hpp"

namespace fano3 {

struct ReferenceRow {
    std::string table;   // T1..T4, WPS
    long f = 0;
    std::string basket;  // canonical "r,a;r,a" form, empty for the smooth case
    std::vector<int> weights;
    std::optional<std::vector<int>> equation_degrees;
    Rat a3;
    Rat ac2;
    int codimension = 0;
    std::map<std::string, std::string> annotations;
};

inline std::vector<ReferenceRow> load_reference_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference table file: " + path);
    nlohmann::json j;
    in >> j;
    std::vector<ReferenceRow> rows;
    for (const auto& rj : j.at("rows")) {
        ReferenceRow r;
        r.table = rj.at("table").get<std::string>();
        r.f = rj.at("f").get<long>();
        r.basket = rj.at("basket").get<std::string>();
        r.weights = rj.at("weights").get<std::vector<int>>();
        if (rj.contains("equations"))
            r.equation_degrees = rj.at("equations").get<std::vector<int>>();
        r.a3 = parse_rat(rj.at("a3").get<std::string>());
        r.ac2 = parse_rat(rj.at("ac2").get<std::string>());
        r.codimension = rj.at("codim").get<int>();
        if (rj.contains("annotations"))
            for (const auto& [key, value] : rj.at("annotations").items())
                r.annotations[key] = value.get<std::string>();
        rows.push_back(std::move(r));
    }
    return rows;
}

struct CodimensionCensus {
    std::vector<long> indices;
    std::map<int, std::vector<long>> rows;  // codimension -> per-index counts
    std::map<int, long> totals;
};

inline CodimensionCensus load_codimension_census(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference table file: " + path);
    nlohmann::json j;
    in >> j;
    const auto& cj = j.at("codimension_census");
    CodimensionCensus census;
    census.indices = cj.at("indices").get<std::vector<long>>();
    for (const auto& [key, value] : cj.at("rows").items())
        census.rows[std::stoi(key)] = value.get<std::vector<long>>();
    for (const auto& [key, value] : cj.at("totals").items())
        census.totals[std::stoi(key)] = value.get<long>();
    return census;
}

enum class MatchStatus { matched, value_mismatch, missing };

struct RowMatch {
    ReferenceRow row;
    MatchStatus status = MatchStatus::missing;
    std::vector<std::string> mismatches;  // field: got vs want
};

struct ExtraProposal {
    long f = 0;
    std::string basket;
    std::vector<int> weights;
    int codimension = 0;
};

struct MatchReport {
    std::vector<RowMatch> rows;
    std::vector<ExtraProposal> extras;  // codimension <= 2 proposals off the tables

    bool all_matched() const {
        for (const auto& r : rows)
            if (r.status != MatchStatus::matched) return false;
        return true;
    }
};

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

}  // namespace detail

// Compare computed proposals against the reference rows, keyed by (f, basket).
// Rows found with differing values surface per-field mismatch notes; proposals
// of codimension <= 2 not present in any table are listed as informational
// extras (the reference tables claim completeness only through codimension 3).
inline MatchReport match_tables(const std::vector<ReferenceRow>& rows,
                                const std::vector<std::pair<Candidate, ModelProposal>>& proposals) {
    MatchReport report;
    std::set<std::pair<long, std::string>> table_keys;
    for (const auto& row : rows) table_keys.insert({row.f, row.basket});

    for (const auto& row : rows) {
        RowMatch rm;
        rm.row = row;
        const std::pair<Candidate, ModelProposal>* hit = nullptr;
        for (const auto& p : proposals)
            if (p.first.basket.f == row.f && to_string(p.first.basket) == row.basket) {
                hit = &p;
                break;
            }
        if (hit == nullptr) {
            rm.status = MatchStatus::missing;
            report.rows.push_back(std::move(rm));
            continue;
        }
        const Candidate& c = hit->first;
        const ModelProposal& m = hit->second;
        if (m.weights != row.weights)
            rm.mismatches.push_back("weights: got " + detail::join_ints(m.weights) + " want " +
                                    detail::join_ints(row.weights));
        if (c.a3 != row.a3)
            rm.mismatches.push_back("a3: got " + to_string(c.a3) + " want " + to_string(row.a3));
        if (c.ac2 != row.ac2)
            rm.mismatches.push_back("ac2: got " + to_string(c.ac2) + " want " + to_string(row.ac2));
        if (m.codimension != row.codimension)
            rm.mismatches.push_back("codim: got " + std::to_string(m.codimension) + " want " +
                                    std::to_string(row.codimension));
        if (row.equation_degrees) {
            if (!m.equation_degrees)
                rm.mismatches.push_back("equations: none proposed, want " +
                                        detail::join_ints(*row.equation_degrees));
            else if (*m.equation_degrees != *row.equation_degrees)
                rm.mismatches.push_back("equations: got " + detail::join_ints(*m.equation_degrees) +
                                        " want " + detail::join_ints(*row.equation_degrees));
        }
        rm.status = rm.mismatches.empty() ? MatchStatus::matched : MatchStatus::value_mismatch;
        report.rows.push_back(std::move(rm));
    }

    for (const auto& [c, m] : proposals) {
        if (m.codimension > 2) continue;
        if (table_keys.count({c.basket.f, to_string(c.basket)}) == 0)
            report.extras.push_back({c.basket.f, to_string(c.basket), m.weights, m.codimension});
    }
    return report;
}

}  // namespace fano3
