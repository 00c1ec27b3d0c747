#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fano3/pipeline.hpp"
#include "fano3/tables.hpp"

using namespace fano3;

namespace {

std::string data_path() {
    return std::string(FANO3_DATA_DIR) + "/reference_tables.json";
}

const std::vector<ReferenceRow>& reference_rows() {
    static const std::vector<ReferenceRow> rows = load_reference_rows(data_path());
    return rows;
}

// Stable survivors with their proposals, across all default indices.
const std::vector<std::pair<Candidate, ModelProposal>>& stable_proposals() {
    static const auto proposals = [] {
        std::vector<std::pair<Candidate, ModelProposal>> out;
        for (long f : default_indices()) {
            auto report = run_pipeline(f, PipelineOptions{.apply_stability = true});
            for (const auto& c : report.candidates) out.emplace_back(c, propose_model(c));
        }
        return out;
    }();
    return proposals;
}

}  // namespace

TEST_CASE("reference rows load with expected shape") {
    const auto& rows = reference_rows();
    REQUIRE(rows.size() == 58);

    std::map<std::string, int> per_table;
    for (const auto& r : rows) ++per_table[r.table];
    REQUIRE(per_table == std::map<std::string, int>{
                             {"T1", 27}, {"T2", 14}, {"T3", 2}, {"T4", 8}, {"WPS", 7}});

    for (const auto& r : rows) {
        REQUIRE(r.codimension == static_cast<int>(r.weights.size()) - 4);
        REQUIRE(r.a3 > 0);
        REQUIRE(r.ac2 > 0);
        if (r.table == "T4")
            REQUIRE(!r.equation_degrees.has_value());
        else {
            REQUIRE(r.equation_degrees.has_value());
            REQUIRE(static_cast<int>(r.equation_degrees->size()) ==
                    (r.codimension == 3 ? 5 : r.codimension));
        }
        // each row's basket parses back to its own canonical form
        REQUIRE(to_string(parse_basket(r.f, r.basket)) == r.basket);
    }
}

TEST_CASE("rational parsing") {
    REQUIRE(parse_rat("7/12") == rat(7, 12));
    REQUIRE(parse_rat("2") == 2);
    REQUIRE(parse_rat("85/22") == rat(85, 22));
    REQUIRE_THROWS_AS(parse_rat("seven"), std::invalid_argument);
}

TEST_CASE("annotations carry the documented corrections") {
    const auto& rows = reference_rows();
    auto find = [&](const std::string& table, long f,
                    const std::string& basket) -> const ReferenceRow& {
        for (const auto& r : rows)
            if (r.table == table && r.f == f && r.basket == basket) return r;
        FAIL("row not found");
        return rows.front();
    };

    const ReferenceRow& quartic = find("T1", 3, "2,1;2,1");
    REQUIRE(quartic.ac2 == 7);
    REQUIRE(quartic.annotations.at("printed_ac2") == "7/12");

    const ReferenceRow& sextic = find("T1", 5, "2,1;2,1;2,1;3,1;3,1");
    REQUIRE(sextic.annotations.at("printed_basket") == "2,1");

    const ReferenceRow& corrected = find("T4", 6, "5,1;7,2");
    REQUIRE(corrected.annotations.at("printed_basket") == "5,2;7,2");

    const ReferenceRow& restored = find("T4", 7, "2,1;2,1;2,1;5,1;8,3");
    REQUIRE(restored.annotations.at("reconstructed") == "true");
    REQUIRE(restored.annotations.count("alternative_basket") == 1);
    REQUIRE(restored.a3 == rat(1, 40));
    REQUIRE(restored.ac2 == rat(39, 40));
}

TEST_CASE("census block loads and is internally consistent") {
    CodimensionCensus census = load_codimension_census(data_path());
    REQUIRE(census.indices == default_indices());
    REQUIRE(census.totals ==
            std::map<int, long>{{0, 7}, {1, 27}, {2, 14}, {3, 2}, {4, 8}});
    for (const auto& [codim, counts] : census.rows) {
        REQUIRE(counts.size() == census.indices.size());
        long sum = 0;
        for (long c : counts) sum += c;
        REQUIRE(sum == census.totals.at(codim));
    }
}

TEST_CASE("every reference row is reproduced by the stable pipelines") {
    MatchReport report = match_tables(reference_rows(), stable_proposals());
    REQUIRE(report.rows.size() == 58);
    for (const auto& rm : report.rows) {
        CAPTURE(rm.row.table, rm.row.f, rm.row.basket, rm.mismatches);
        REQUIRE(rm.status == MatchStatus::matched);
    }
    REQUIRE(report.all_matched());
    // the tables exhaust stable proposals through codimension 2: no extras
    REQUIRE(report.extras.empty());
}

TEST_CASE("stable proposals by codimension reproduce the census through codim 3") {
    CodimensionCensus census = load_codimension_census(data_path());
    std::map<int, std::map<long, long>> got;  // codim -> f -> count
    for (const auto& [c, m] : stable_proposals())
        if (m.codimension <= 3) ++got[m.codimension][c.basket.f];
    for (int codim = 0; codim <= 3; ++codim) {
        const auto& expected = census.rows.at(codim);
        for (std::size_t i = 0; i < census.indices.size(); ++i) {
            CAPTURE(codim, census.indices[i]);
            long want = expected[i];
            long have = got[codim].count(census.indices[i]) ? got[codim][census.indices[i]] : 0;
            REQUIRE(have == want);
        }
    }
    // codimension 4 was curated in the source: the raw proposals form a superset
    std::map<long, long> raw4;
    for (const auto& [c, m] : stable_proposals())
        if (m.codimension == 4) ++raw4[c.basket.f];
    const auto& curated = census.rows.at(4);
    for (std::size_t i = 0; i < census.indices.size(); ++i) {
        long have = raw4.count(census.indices[i]) ? raw4[census.indices[i]] : 0;
        REQUIRE(have >= curated[i]);
    }
}

TEST_CASE("match_tables reports missing rows and value mismatches") {
    const auto& rows = reference_rows();

    MatchReport empty = match_tables(rows, {});
    REQUIRE(empty.rows.size() == 58);
    for (const auto& rm : empty.rows) REQUIRE(rm.status == MatchStatus::missing);
    REQUIRE(empty.all_matched() == false);
    REQUIRE(empty.extras.empty());

    Candidate quintic = make_candidate(parse_basket(3, ""));
    ModelProposal good = propose_model(quintic);
    ModelProposal tampered = good;
    tampered.weights = {1, 1, 1, 1, 2};

    std::vector<ReferenceRow> one_row;
    for (const auto& r : rows)
        if (r.table == "T1" && r.f == 3 && r.basket.empty()) one_row.push_back(r);
    REQUIRE(one_row.size() == 1);

    MatchReport bad = match_tables(one_row, {{quintic, tampered}});
    REQUIRE(bad.rows.size() == 1);
    REQUIRE(bad.rows[0].status == MatchStatus::value_mismatch);
    REQUIRE(bad.rows[0].mismatches.size() == 1);
    REQUIRE(bad.rows[0].mismatches[0].find("weights") == 0);

    // a proposal absent from the fixture surfaces as a codim <= 2 extra
    MatchReport extra = match_tables({}, {{quintic, good}});
    REQUIRE(extra.rows.empty());
    REQUIRE(extra.extras.size() == 1);
    REQUIRE(extra.extras[0].f == 3);
    REQUIRE(extra.extras[0].basket.empty());
    REQUIRE(extra.extras[0].codimension == 1);
}
