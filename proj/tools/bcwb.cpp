// bcwb: Bott-Chern workbench command line.
//
//   bcwb models list | show NAME
//   bcwb compute  MODEL [--format json|table] [--bc P Q]... [--hyper K P Q]...
//                       [--trunc K P]... [--maps C|I|all|none] [-o FILE]
//   bcwb check    MODEL
//   bcwb invariants MODEL [--format json|table] [-o FILE]
//   bcwb diamond  FILE --mode kahler|surface [--format json|table] [-o FILE]
//   bcwb blowup   BASE CENTER --codim C [--format json|table] [-o FILE]
//
// MODEL is a .lie file path or "corpus:NAME".  Exit codes: 0 ok, 1 failed
// structural check / failed invariance, 2 parse or usage errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bcwb/corpus.hpp"
#include "bcwb/io.hpp"
#include "bcwb/parser.hpp"

namespace {

using bcwb::Error;
using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(bcwb::ErrorKind::SyntaxError, "no such file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string resolve_model_source(const std::string& spec) {
    if (spec.rfind("corpus:", 0) == 0) {
        std::string name = spec.substr(7);
        if (!bcwb::corpus_has(name))
            throw Error(bcwb::ErrorKind::IndexOutOfRange, "unknown corpus model '" + name + "'");
        return bcwb::corpus_source(name);
    }
    return read_file(spec);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(bcwb::ErrorKind::SyntaxError, "cannot write " + out_path);
    out << text;
}

json parse_json_file(const std::string& path) {
    std::string text = read_file(path);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(bcwb::ErrorKind::SchemaViolation, path + ": invalid JSON");
    return j;
}

bcwb::LieModel load_validated_model(const std::string& spec, std::string* source_out) {
    std::string source = resolve_model_source(spec);
    bcwb::LieModel model = bcwb::parse_model(source);
    bcwb::ValidationReport validation = bcwb::validate_model(model);
    if (!validation.ok()) {
        std::string what = "model fails validation";
        if (!validation.failures.empty()) what += ": " + validation.failures.front();
        throw Error(bcwb::ErrorKind::IntegrabilityError, what);
    }
    if (source_out) *source_out = source;
    return model;
}

int run(int argc, char** argv) {
    CLI::App app{"Bott-Chern hypercohomology workbench"};
    app.require_subcommand(1);

    // models
    auto* models_cmd = app.add_subcommand("models", "list bundled models or show one source");
    std::string models_action, models_name;
    models_cmd->add_option("action", models_action, "list | show")->required();
    models_cmd->add_option("name", models_name, "model name for 'show'");

    // compute
    auto* compute_cmd = app.add_subcommand("compute", "full tables, maps and checks for a model");
    std::string compute_model, compute_format = "json", compute_out;
    std::vector<int> opt_bc, opt_hyper, opt_trunc;
    std::string opt_maps = "all";
    compute_cmd->add_option("model", compute_model, ".lie file or corpus:NAME")->required();
    compute_cmd->add_option("--format", compute_format)->check(CLI::IsMember({"json", "table"}));
    compute_cmd->add_option("--bc", opt_bc, "Bott-Chern group p q")->type_size(2)->allow_extra_args(false);
    compute_cmd->add_option("--hyper", opt_hyper, "hypercohomology k p q")->type_size(3)->allow_extra_args(false);
    compute_cmd->add_option("--trunc", opt_trunc, "truncated hypercohomology k p")->type_size(2)->allow_extra_args(false);
    compute_cmd->add_option("--maps", opt_maps)->check(CLI::IsMember({"C", "I", "all", "none"}));
    compute_cmd->add_option("-o,--output", compute_out, "write to file instead of stdout");

    // check
    auto* check_cmd = app.add_subcommand("check", "run the consistency suite; exit 1 on failure");
    std::string check_model;
    check_cmd->add_option("model", check_model)->required();

    // invariants
    auto* inv_cmd = app.add_subcommand("invariants", "invariant tables only");
    std::string inv_model, inv_format = "json", inv_out;
    inv_cmd->add_option("model", inv_model)->required();
    inv_cmd->add_option("--format", inv_format)->check(CLI::IsMember({"json", "table"}));
    inv_cmd->add_option("-o,--output", inv_out);

    // diamond
    auto* diamond_cmd = app.add_subcommand("diamond", "Kahler or surface mode dimension calculus");
    std::string diamond_file, diamond_mode, diamond_format = "json", diamond_out;
    diamond_cmd->add_option("file", diamond_file)->required();
    diamond_cmd->add_option("--mode", diamond_mode)->required()->check(CLI::IsMember({"kahler", "surface"}));
    diamond_cmd->add_option("--format", diamond_format)->check(CLI::IsMember({"json", "table"}));
    diamond_cmd->add_option("-o,--output", diamond_out);

    // blowup
    auto* blowup_cmd = app.add_subcommand("blowup", "blow-up prediction and invariance verdict");
    std::string blowup_base, blowup_center, blowup_format = "json", blowup_out;
    int blowup_codim = 0;
    blowup_cmd->add_option("base", blowup_base)->required();
    blowup_cmd->add_option("center", blowup_center)->required();
    blowup_cmd->add_option("--codim", blowup_codim, "complex codimension of the center")->required();
    blowup_cmd->add_option("--format", blowup_format)->check(CLI::IsMember({"json", "table"}));
    blowup_cmd->add_option("-o,--output", blowup_out);

    CLI11_PARSE(app, argc, argv);
    bcwb::thread_limit();  // reject malformed BCWB_THREADS up front

    if (models_cmd->parsed()) {
        if (models_action == "list") {
            for (const std::string& name : bcwb::corpus_names()) std::cout << name << "\n";
            return 0;
        }
        if (models_action == "show") {
            if (models_name.empty())
                throw Error(bcwb::ErrorKind::SyntaxError, "models show needs a model name");
            std::cout << bcwb::corpus_source(models_name);
            return 0;
        }
        throw Error(bcwb::ErrorKind::SyntaxError, "models action must be 'list' or 'show'");
    }

    if (compute_cmd->parsed()) {
        std::string source;
        bcwb::CohomologyEngine engine(load_validated_model(compute_model, &source));
        bcwb::ComputeSelection sel;
        for (std::size_t i = 0; i + 1 < opt_bc.size(); i += 2) sel.bc.push_back({opt_bc[i], opt_bc[i + 1]});
        for (std::size_t i = 0; i + 2 < opt_hyper.size(); i += 3)
            sel.hyper.push_back({opt_hyper[i], opt_hyper[i + 1], opt_hyper[i + 2]});
        for (std::size_t i = 0; i + 1 < opt_trunc.size(); i += 2)
            sel.trunc.push_back({opt_trunc[i], opt_trunc[i + 1]});
        bool selective = !sel.bc.empty() || !sel.hyper.empty() || !sel.trunc.empty();
        sel.full = !selective;
        sel.maps_c = (opt_maps == "C" || opt_maps == "all");
        sel.maps_i = (opt_maps == "I" || opt_maps == "all");
        json doc = bcwb::compute_document(engine, source, sel);
        emit(compute_format == "table" ? bcwb::document_to_table_text(doc) : bcwb::dump_json(doc),
             compute_out);
        return 0;
    }

    if (check_cmd->parsed()) {
        std::string source = resolve_model_source(check_model);
        bcwb::LieModel model = bcwb::parse_model(source);
        bcwb::CohomologyEngine engine(model);
        bcwb::InvariantReport report = bcwb::consistency_report(engine);
        bool all_pass = report.all_checks_pass();
        for (const bcwb::CheckResult& c : report.checks) {
            if (!c.pass)
                std::cout << "FAIL " << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        }
        std::cout << (all_pass ? "all checks passed" : "structural checks FAILED") << "\n";
        std::cout << "ddbar_lemma: " << (report.ddbar_lemma ? "true" : "false") << "\n";
        return all_pass ? 0 : 1;
    }

    if (inv_cmd->parsed()) {
        std::string source;
        bcwb::CohomologyEngine engine(load_validated_model(inv_model, &source));
        json doc;
        doc["schema_version"] = bcwb::kSchemaVersion;
        doc["kind"] = "result";
        doc["model"] =
            json{{"name", engine.model().name}, {"n", engine.n()}, {"source_sha256", bcwb::sha256_hex(source)}};
        doc["tables"] = bcwb::report_to_json(bcwb::consistency_report(engine));
        emit(inv_format == "table" ? bcwb::document_to_table_text(doc) : bcwb::dump_json(doc), inv_out);
        return 0;
    }

    if (diamond_cmd->parsed()) {
        json input = parse_json_file(diamond_file);
        json doc;
        doc["schema_version"] = bcwb::kSchemaVersion;
        if (diamond_mode == "kahler") {
            bcwb::DimTables tables = bcwb::kahler_tables(bcwb::hodge_diamond_from_json(input));
            doc["kind"] = "kahler_tables";
            doc["tables"] = bcwb::dim_tables_to_json(tables);
            doc["spade"] = tables.spade();
            doc["club"] = tables.club();
        } else {
            std::array<int, 4> sp = bcwb::surface_invariants(bcwb::surface_data_from_json(input));
            doc["kind"] = "surface_invariants";
            doc["spade"] = std::vector<int>(sp.begin(), sp.end());
        }
        if (diamond_format == "table") {
            std::string text;
            text += "spade: ";
            bool first = true;
            for (const auto& v : doc.at("spade")) {
                if (!first) text += " ";
                text += std::to_string(v.get<int>());
                first = false;
            }
            text += "\n";
            if (doc.contains("club")) {
                text += "club: ";
                first = true;
                for (const auto& v : doc.at("club")) {
                    if (!first) text += " ";
                    text += std::to_string(v.get<int>());
                    first = false;
                }
                text += "\n";
            }
            emit(text, diamond_out);
        } else {
            emit(bcwb::dump_json(doc), diamond_out);
        }
        return 0;
    }

    if (blowup_cmd->parsed()) {
        bcwb::DimTables base = bcwb::dim_tables_from_json(parse_json_file(blowup_base));
        bcwb::DimTables center = bcwb::dim_tables_from_json(parse_json_file(blowup_center));
        bcwb::InvarianceReport report = bcwb::invariance_check(base, center, blowup_codim);
        json doc;
        doc["schema_version"] = bcwb::kSchemaVersion;
        doc["kind"] = "blowup_prediction";
        doc["pass"] = report.pass;
        doc["spade_base"] = report.spade_base;
        doc["spade_blowup"] = report.spade_blowup;
        doc["club_base"] = report.club_base;
        doc["club_blowup"] = report.club_blowup;
        doc["failures"] = report.failures;
        doc["predicted"] = bcwb::dim_tables_to_json(report.predicted);
        if (blowup_format == "table") {
            std::string text;
            auto line = [&text](const std::string& name, const std::vector<int>& v) {
                text += name + ":";
                for (int x : v) text += " " + std::to_string(x);
                text += "\n";
            };
            line("spade_base", report.spade_base);
            line("spade_blowup", report.spade_blowup);
            line("club_base", report.club_base);
            line("club_blowup", report.club_blowup);
            text += std::string("verdict: ") + (report.pass ? "pass" : "FAIL") + "\n";
            for (const std::string& f : report.failures) text += "  " + f + "\n";
            emit(text, blowup_out);
        } else {
            emit(bcwb::dump_json(doc), blowup_out);
        }
        return report.pass ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bcwb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
