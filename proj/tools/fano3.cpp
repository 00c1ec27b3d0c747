// Command-line front end: Hilbert series, filter pipeline, sweep summary,
// and weighted projective model proposals, exported as table, JSON, or CSV.
// Exit codes: 0 ok, 2 invalid input, 3 internal limit hit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "fano3/fano3.hpp"

namespace {

using namespace fano3;

struct Options {
    long index = 0;
    std::string indices = "3..11,13,17,19";
    std::string basket;
    int order = 30;
    int cap = 30;
    bool stable_only = false;
    bool literal_b = false;
    std::string format = "table";
    std::string out;
};

Convention convention_of(const Options& o) {
    return o.literal_b ? Convention::plain_inverse : Convention::index_scaled;
}

nlohmann::json base_metadata(const char* command, const Options& o) {
    nlohmann::json meta;
    meta["command"] = command;
    meta["convention"] = o.literal_b ? "plain_inverse" : "index_scaled";
    meta["order"] = o.order;
    return meta;
}

std::string dump_document(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

std::string join_rats(const std::vector<Rat>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += to_string(values[i]);
    }
    return out;
}

std::string render_series_table(const Candidate& c) {
    auto pf = [](bool b) { return b ? "pass" : "fail"; };
    std::string out = "f=" + std::to_string(c.basket.f) + " basket=[" + to_string(c.basket) + "]\n";
    out += "A³ = " + to_string(c.a3) + "\n";
    out += "Ac₂ = " + to_string(c.ac2) + "\n";
    out += "P(t) = " + c.series.to_string() + "\n";
    out += "prefix: " + join_rats(c.prefix.coefficients) + "\n";
    out += std::string("stages: 1a=") + pf(c.stages.kawamata) + " 1b=" + pf(c.stages.positive_degree) +
           " 1b+=" + pf(c.stages.excess_vanishing) + " 1c=" + pf(c.stages.bk_bound) +
           " stable=" + pf(c.stages.stable) + "\n";
    return out;
}

std::string render_model_table(const CatalogRecord& r) {
    const CatalogModel& m = *r.model;
    std::string out = "f=" + std::to_string(r.f) + " basket=[" + basket_grammar(r.basket) + "]\n";
    out += model_label(m) + "\n";
    out += "weights: " + fano3::detail::join(m.weights, ",") + "\n";
    std::vector<Rat> coeff;
    for (long c : m.numerator) coeff.emplace_back(c);
    out += "numerator: " + to_string(Poly(std::move(coeff))) + "\n";
    out += "codimension: " + std::to_string(m.codimension) + "\n";
    out += "equations: " +
           (m.equation_degrees ? fano3::detail::join(*m.equation_degrees, ",") : std::string("-")) +
           "\n";
    if (m.adjunction_degree)
        out += "adjunction degree: " + std::to_string(*m.adjunction_degree) + "\n";
    if (m.codimension > 4)
        out += "note: codimension above 4, outside the reviewed range\n";
    return out;
}

std::string records_document(nlohmann::json meta, const std::vector<CatalogRecord>& records) {
    nlohmann::json doc;
    doc["metadata"] = std::move(meta);
    doc["records"] = records;
    return dump_document(doc);
}

std::string cmd_series(const Options& o) {
    require_index(o.index);
    Basket b = parse_basket(o.index, o.basket);
    Candidate c = make_candidate(b, o.order, convention_of(o));
    if (o.format == "table") return render_series_table(c);
    std::vector<CatalogRecord> records{make_record(c)};
    if (o.format == "csv") return render_csv(records);
    nlohmann::json meta = base_metadata("series", o);
    meta["f"] = o.index;
    return records_document(std::move(meta), records);
}

std::string cmd_classify(const Options& o) {
    require_index(o.index);
    PipelineOptions popt;
    popt.apply_stability = o.stable_only;
    popt.order = o.order;
    popt.convention = convention_of(o);
    PipelineReport report = run_pipeline(o.index, popt);
    std::vector<CatalogRecord> records;
    records.reserve(report.candidates.size());
    for (const auto& c : report.candidates)
        records.push_back(make_record(c, propose_model(c, o.cap)));
    if (o.format == "table") {
        std::string out = header_line(report.counts) + "\n";
        for (const auto& r : records) out += record_line(r) + "\n";
        return out;
    }
    if (o.format == "csv") return render_csv(records);
    nlohmann::json meta = base_metadata("classify", o);
    meta["f"] = o.index;
    meta["cap"] = o.cap;
    meta["stable_only"] = o.stable_only;
    meta["counts"] = {{"1a", report.counts.enumerated},
                      {"1b", report.counts.positive_degree},
                      {"1b+", report.counts.excess_vanishing},
                      {"1c", report.counts.bk_bound},
                      {"stable", report.counts.stable}};
    return records_document(std::move(meta), records);
}

std::string cmd_sweep(const Options& o) {
    std::vector<long> indices = parse_indices(o.indices);
    PipelineOptions popt;
    popt.order = o.order;
    popt.convention = convention_of(o);
    SweepSummary summary = sweep(indices, popt);
    if (o.format == "table") {
        std::string fr = "f", sr = "series", ur = "unstable";
        for (const auto& [f, row] : summary.rows) {
            fr += " " + std::to_string(f);
            sr += " " + std::to_string(row.series_count);
            ur += " " + std::to_string(row.unstable_count);
        }
        return fr + "\n" + sr + "\n" + ur + "\n";
    }
    if (o.format == "csv") {
        std::string out = "f,series,unstable\n";
        for (const auto& [f, row] : summary.rows)
            out += std::to_string(f) + "," + std::to_string(row.series_count) + "," +
                   std::to_string(row.unstable_count) + "\n";
        return out;
    }
    nlohmann::json doc;
    doc["metadata"] = base_metadata("sweep", o);
    std::vector<long> fs;
    std::vector<std::int64_t> series_counts, unstable_counts;
    for (const auto& [f, row] : summary.rows) {
        fs.push_back(f);
        series_counts.push_back(row.series_count);
        unstable_counts.push_back(row.unstable_count);
    }
    doc["indices"] = fs;
    doc["series_counts"] = series_counts;
    doc["unstable_counts"] = unstable_counts;
    return dump_document(doc);
}

std::string cmd_model(const Options& o) {
    require_index(o.index);
    Basket b = parse_basket(o.index, o.basket);
    Candidate c = make_candidate(b, o.order, convention_of(o));
    const char* failing = nullptr;
    if (!c.stages.kawamata)
        failing = "1a (Kawamata bound)";
    else if (!c.stages.positive_degree)
        failing = "1b (positive degree)";
    else if (!c.stages.excess_vanishing)
        failing = "1b+ (excess vanishing)";
    else if (!c.stages.bk_bound)
        failing = "1c (Bogomolov-Kawamata bound)";
    if (failing)
        throw std::invalid_argument("basket [" + to_string(b) + "] fails stage " + failing);
    CatalogRecord record = make_record(c, propose_model(c, o.cap));
    if (o.format == "table") return render_model_table(record);
    std::vector<CatalogRecord> records{std::move(record)};
    if (o.format == "csv") return render_csv(records);
    nlohmann::json meta = base_metadata("model", o);
    meta["f"] = o.index;
    meta["cap"] = o.cap;
    return records_document(std::move(meta), records);
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + o.out);
    file << text;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{
        "Catalog tool for Fano 3-folds of index 3..19: exact Hilbert series from a\n"
        "singularity basket, the enumeration and filter pipeline, and weighted\n"
        "projective model proposals."};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool with_cap) {
        cmd->add_option("--order", opt.order, "series expansion order")
            ->default_val(30)
            ->check(CLI::Range(30, 1000));
        if (with_cap)
            cmd->add_option("--cap", opt.cap, "generator search cap")
                ->default_val(30)
                ->check(CLI::Range(1, 1000));
        cmd->add_flag("--literal-b", opt.literal_b,
                      "use the inverse-weight multiplier convention");
        cmd->add_option("--format", opt.format, "output format")
            ->default_val("table")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        cmd->add_option("--out", opt.out, "write output to this file instead of stdout");
    };

    CLI::App* series = app.add_subcommand(
        "series", "Hilbert series and filter flags for one basket");
    series->add_option("--index", opt.index, "Fano index f")->required();
    series->add_option("--basket", opt.basket, "basket as \"r,a;r,a;...\"");
    add_common(series, false);

    CLI::App* classify = app.add_subcommand(
        "classify", "full candidate catalog for one index");
    classify->add_option("--index", opt.index, "Fano index f")->required();
    classify->add_flag("--stable-only", opt.stable_only, "keep only stable candidates");
    add_common(classify, true);

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "series and unstable counts across indices");
    sweep_cmd->add_option("--indices", opt.indices, "indices as \"a..b\" or a list")
        ->default_val("3..11,13,17,19");
    add_common(sweep_cmd, false);

    CLI::App* model = app.add_subcommand(
        "model", "weighted projective model proposal for one basket");
    model->add_option("--index", opt.index, "Fano index f")->required();
    model->add_option("--basket", opt.basket, "basket as \"r,a;r,a;...\"");
    add_common(model, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string text;
        if (app.got_subcommand(series))
            text = cmd_series(opt);
        else if (app.got_subcommand(classify))
            text = cmd_classify(opt);
        else if (app.got_subcommand(sweep_cmd))
            text = cmd_sweep(opt);
        else
            text = cmd_model(opt);
        emit(opt, text);
    } catch (const AbsorptionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
