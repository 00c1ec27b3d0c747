#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fano3/model.hpp"
#include "fano3/pipeline.hpp"
#include "fano3/riemann_roch.hpp"
#include "fano3/singularity.hpp"

namespace fano3 {

// Model fields as exported to the catalog. high_codimension is derivable
// (codimension > 4) and not stored.
struct CatalogModel {
    std::vector<int> weights;
    std::vector<long> numerator;  // dense coefficients of series * prod(1 - t^w)
    int codimension = 0;
    std::optional<std::vector<int>> equation_degrees;
    std::optional<int> adjunction_degree;

    bool operator==(const CatalogModel&) const = default;
};

// One catalog row: everything the pipeline reports about a basket. All
// coefficient lists are dense and integral; building a record from a
// candidate with fractional data throws.
struct CatalogRecord {
    long f = 0;
    std::vector<std::array<long, 2>> basket;  // [r,a] pairs, sorted
    Rat a3;
    Rat ac2;
    std::vector<long> series_numerator;
    std::vector<long> series_denominator;
    std::vector<long> prefix;  // p_0 .. p_30
    StageFlags stages;
    std::optional<CatalogModel> model;

    bool operator==(const CatalogRecord&) const = default;
};

inline constexpr int kCatalogPrefixLength = 31;

namespace detail {

inline std::vector<long> integer_list(const std::vector<Rat>& coeff) {
    std::vector<long> out;
    out.reserve(coeff.size());
    for (const auto& c : coeff) out.push_back(to_long(c));
    return out;
}

template <class T>
std::string join(const std::vector<T>& values, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

inline std::vector<long> split_longs(const std::string& cell) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos < cell.size()) {
        std::size_t space = cell.find(' ', pos);
        std::string tok = cell.substr(pos, space == std::string::npos ? space : space - pos);
        if (tok.empty()) throw std::invalid_argument("empty value in list cell");
        out.push_back(std::stol(tok));
        if (space == std::string::npos) break;
        pos = space + 1;
    }
    return out;
}

inline std::vector<int> split_ints(const std::string& cell) {
    std::vector<int> out;
    for (long v : split_longs(cell)) out.push_back(static_cast<int>(v));
    return out;
}

inline bool parse_bool(const std::string& cell) {
    if (cell == "true") return true;
    if (cell == "false") return false;
    throw std::invalid_argument("boolean cell must be true or false, got \"" + cell + "\"");
}

// One CSV line split into cells; double quotes delimit cells that may
// contain commas, with "" as the embedded-quote escape.
inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quote in CSV line");
    out.push_back(std::move(cur));
    return out;
}

}  // namespace detail

inline CatalogModel to_catalog_model(const ModelProposal& m) {
    CatalogModel out;
    out.weights = m.weights;
    out.numerator = detail::integer_list(m.numerator.coeff);
    out.codimension = m.codimension;
    out.equation_degrees = m.equation_degrees;
    out.adjunction_degree = m.adjunction_degree;
    return out;
}

inline CatalogRecord make_record(const Candidate& c,
                                 const std::optional<ModelProposal>& m = std::nullopt) {
    if (c.prefix.order + 1 < kCatalogPrefixLength)
        throw std::invalid_argument("catalog records need the series expanded to order 30");
    CatalogRecord r;
    r.f = c.basket.f;
    for (const auto& s : c.basket.items) r.basket.push_back({s.r, s.a});
    r.a3 = c.a3;
    r.ac2 = c.ac2;
    r.series_numerator = detail::integer_list(c.series.num().coeff);
    r.series_denominator = detail::integer_list(c.series.den().coeff);
    for (int n = 0; n < kCatalogPrefixLength; ++n)
        r.prefix.push_back(to_long(c.prefix.coefficients[static_cast<std::size_t>(n)]));
    r.stages = c.stages;
    if (m) r.model = to_catalog_model(*m);
    return r;
}

// JSON encoding. Rationals are {num, den} objects; absent optionals are
// null, so decode(encode(r)) = r field by field.
inline nlohmann::json rat_to_json(const Rat& q) {
    return {{"num", to_long(Int(q.get_num()))}, {"den", to_long(Int(q.get_den()))}};
}

inline Rat rat_from_json(const nlohmann::json& j) {
    return rat(Int(j.at("num").get<long>()), Int(j.at("den").get<long>()));
}

inline void to_json(nlohmann::json& j, const StageFlags& s) {
    j = nlohmann::json{{"kawamata", s.kawamata},
                       {"positive_degree", s.positive_degree},
                       {"excess_vanishing", s.excess_vanishing},
                       {"bk_bound", s.bk_bound},
                       {"stable", s.stable}};
}

inline void from_json(const nlohmann::json& j, StageFlags& s) {
    s.kawamata = j.at("kawamata").get<bool>();
    s.positive_degree = j.at("positive_degree").get<bool>();
    s.excess_vanishing = j.at("excess_vanishing").get<bool>();
    s.bk_bound = j.at("bk_bound").get<bool>();
    s.stable = j.at("stable").get<bool>();
}

inline void to_json(nlohmann::json& j, const CatalogModel& m) {
    j = nlohmann::json{{"weights", m.weights},
                       {"numerator", m.numerator},
                       {"codimension", m.codimension}};
    j["equation_degrees"] =
        m.equation_degrees ? nlohmann::json(*m.equation_degrees) : nlohmann::json(nullptr);
    j["adjunction_degree"] =
        m.adjunction_degree ? nlohmann::json(*m.adjunction_degree) : nlohmann::json(nullptr);
}

inline void from_json(const nlohmann::json& j, CatalogModel& m) {
    m.weights = j.at("weights").get<std::vector<int>>();
    m.numerator = j.at("numerator").get<std::vector<long>>();
    m.codimension = j.at("codimension").get<int>();
    const auto& eq = j.at("equation_degrees");
    m.equation_degrees =
        eq.is_null() ? std::nullopt : std::optional(eq.get<std::vector<int>>());
    const auto& ad = j.at("adjunction_degree");
    m.adjunction_degree = ad.is_null() ? std::nullopt : std::optional(ad.get<int>());
}

inline void to_json(nlohmann::json& j, const CatalogRecord& r) {
    j = nlohmann::json{{"f", r.f},
                       {"basket", r.basket},
                       {"a3", rat_to_json(r.a3)},
                       {"ac2", rat_to_json(r.ac2)},
                       {"series_numerator", r.series_numerator},
                       {"series_denominator", r.series_denominator},
                       {"prefix", r.prefix},
                       {"stages", r.stages}};
    j["model"] = r.model ? nlohmann::json(*r.model) : nlohmann::json(nullptr);
}

inline void from_json(const nlohmann::json& j, CatalogRecord& r) {
    r.f = j.at("f").get<long>();
    r.basket = j.at("basket").get<std::vector<std::array<long, 2>>>();
    r.a3 = rat_from_json(j.at("a3"));
    r.ac2 = rat_from_json(j.at("ac2"));
    r.series_numerator = j.at("series_numerator").get<std::vector<long>>();
    r.series_denominator = j.at("series_denominator").get<std::vector<long>>();
    r.prefix = j.at("prefix").get<std::vector<long>>();
    r.stages = j.at("stages").get<StageFlags>();
    const auto& m = j.at("model");
    r.model = m.is_null() ? std::nullopt : std::optional(m.get<CatalogModel>());
}

inline std::string basket_grammar(const std::vector<std::array<long, 2>>& basket) {
    std::string out;
    for (const auto& p : basket) {
        if (!out.empty()) out += ";";
        out += std::to_string(p[0]) + "," + std::to_string(p[1]);
    }
    return out;
}

// CSV encoding: fixed header, one row per record. List cells are
// space-separated; "-" marks an absent optional, while an empty cell is a
// present-but-empty list (codimension 0 has equation_degrees = []).
inline const std::string& csv_header() {
    static const std::string header =
        "f,basket,a3,ac2,series_numerator,series_denominator,prefix,"
        "kawamata,positive_degree,excess_vanishing,bk_bound,stable,"
        "weights,model_numerator,codimension,equation_degrees,adjunction_degree";
    return header;
}

inline std::string to_csv_row(const CatalogRecord& r) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::string row = std::to_string(r.f);
    row += ",\"" + basket_grammar(r.basket) + "\"";
    row += "," + to_string(r.a3);
    row += "," + to_string(r.ac2);
    row += "," + detail::join(r.series_numerator, " ");
    row += "," + detail::join(r.series_denominator, " ");
    row += "," + detail::join(r.prefix, " ");
    row += std::string(",") + b(r.stages.kawamata) + "," + b(r.stages.positive_degree) +
           "," + b(r.stages.excess_vanishing) + "," + b(r.stages.bk_bound) + "," +
           b(r.stages.stable);
    if (r.model) {
        const CatalogModel& m = *r.model;
        row += "," + detail::join(m.weights, " ");
        row += "," + detail::join(m.numerator, " ");
        row += "," + std::to_string(m.codimension);
        row += "," + (m.equation_degrees ? detail::join(*m.equation_degrees, " ")
                                         : std::string("-"));
        row += "," + (m.adjunction_degree ? std::to_string(*m.adjunction_degree)
                                          : std::string("-"));
    } else {
        row += ",-,-,-,-,-";
    }
    return row;
}

inline std::string render_csv(const std::vector<CatalogRecord>& records) {
    std::string out = csv_header() + "\n";
    for (const auto& r : records) out += to_csv_row(r) + "\n";
    return out;
}

inline std::vector<CatalogRecord> parse_csv(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        if (!line.empty()) lines.push_back(std::move(line));
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    if (lines.empty() || lines.front() != csv_header())
        throw std::invalid_argument("CSV input does not start with the catalog header");

    std::vector<CatalogRecord> records;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        std::vector<std::string> cells = detail::split_csv_line(lines[li]);
        if (cells.size() != 17)
            throw std::invalid_argument("CSV row has " + std::to_string(cells.size()) +
                                        " cells, expected 17");
        CatalogRecord r;
        r.f = std::stol(cells[0]);
        for (const auto& s : parse_basket(r.f, cells[1]).items) r.basket.push_back({s.r, s.a});
        r.a3 = parse_rat(cells[2]);
        r.ac2 = parse_rat(cells[3]);
        r.series_numerator = detail::split_longs(cells[4]);
        r.series_denominator = detail::split_longs(cells[5]);
        r.prefix = detail::split_longs(cells[6]);
        r.stages.kawamata = detail::parse_bool(cells[7]);
        r.stages.positive_degree = detail::parse_bool(cells[8]);
        r.stages.excess_vanishing = detail::parse_bool(cells[9]);
        r.stages.bk_bound = detail::parse_bool(cells[10]);
        r.stages.stable = detail::parse_bool(cells[11]);
        if (cells[12] != "-") {
            CatalogModel m;
            m.weights = detail::split_ints(cells[12]);
            m.numerator = detail::split_longs(cells[13]);
            m.codimension = std::stoi(cells[14]);
            if (cells[15] != "-") m.equation_degrees = detail::split_ints(cells[15]);
            if (cells[16] != "-") m.adjunction_degree = std::stoi(cells[16]);
            r.model = std::move(m);
        }
        records.push_back(std::move(r));
    }
    return records;
}

// "P(1,1,1,1)" for codimension 0, otherwise "X_{e1,...} ⊂ P(w0,...)" with
// the subscript dropped when no equation degrees are recorded.
inline std::string model_label(const CatalogModel& m) {
    std::string ambient = "P(" + detail::join(m.weights, ",") + ")";
    if (m.codimension == 0 && m.equation_degrees && m.equation_degrees->empty())
        return ambient;
    std::string x = "X";
    if (m.equation_degrees && !m.equation_degrees->empty())
        x += "_{" + detail::join(*m.equation_degrees, ",") + "}";
    return x + " ⊂ " + ambient;
}

// Stage-count summary; 1b+ appears only when it differs from 1b.
inline std::string header_line(const PipelineCounts& c) {
    std::string out = "1a:" + std::to_string(c.enumerated) +
                      " 1b:" + std::to_string(c.positive_degree);
    if (c.excess_vanishing != c.positive_degree)
        out += " 1b+:" + std::to_string(c.excess_vanishing);
    out += " 1c:" + std::to_string(c.bk_bound) + " stable:" + std::to_string(c.stable);
    return out;
}

inline std::string record_line(const CatalogRecord& r) {
    std::string out = "basket=[" + basket_grammar(r.basket) + "]";
    out += " A³=" + to_string(r.a3) + " Ac₂=" + to_string(r.ac2);
    out += r.stages.stable ? " stable=yes" : " stable=no";
    if (r.model)
        out += " codim=" + std::to_string(r.model->codimension) + " " + model_label(*r.model);
    return out;
}

// Grammar "a..b|list": comma-separated indices or inclusive ranges, e.g.
// "3..11,13,17,19". Every index must be admissible.
inline std::vector<long> parse_indices(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty index token");
        try {
            std::size_t dots = tok.find("..");
            if (dots != std::string::npos) {
                long lo = std::stol(tok.substr(0, dots));
                long hi = std::stol(tok.substr(dots + 2));
                if (lo > hi)
                    throw std::invalid_argument("empty index range " + tok);
                require_index(lo);
                require_index(hi);
                for (long f = lo; f <= hi; ++f) out.push_back(f);
            } else {
                long f = std::stol(tok);
                require_index(f);
                out.push_back(f);
            }
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("bad index token " + tok);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("no indices given");
    return out;
}

}  // namespace fano3
