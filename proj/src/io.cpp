#include "bcwb/io.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <mutex>
#include <thread>

#include <openssl/evp.h>

namespace bcwb {

using nlohmann::json;

int thread_limit() {
    const char* env = std::getenv("BCWB_THREADS");
    if (env == nullptr || *env == '\0') {
        unsigned hw = std::thread::hardware_concurrency();
        return static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u));
    }
    std::string s(env);
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorKind::SchemaViolation, "BCWB_THREADS must be a positive integer");
    long value = std::strtol(s.c_str(), nullptr, 10);
    if (value < 1 || value > 1024)
        throw Error(ErrorKind::SchemaViolation, "BCWB_THREADS must be a positive integer");
    return static_cast<int>(value);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    int workers = std::min<std::size_t>(static_cast<std::size_t>(thread_limit()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

namespace {

json series_to_json(int k_min, const std::vector<int>& dims) {
    return json{{"k_min", k_min}, {"dims", dims}};
}

json series_to_json(const DimSeries& s) { return series_to_json(s.k_min, s.dims); }

DimSeries series_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("k_min") || !j.contains("dims") || j.size() != 2)
        throw Error(ErrorKind::SchemaViolation, where + ": expected {k_min, dims}");
    DimSeries s;
    s.k_min = j.at("k_min").get<int>();
    s.dims = j.at("dims").get<std::vector<int>>();
    return s;
}

void require_schema(const json& j, const std::string& kind, const std::vector<std::string>& required,
                    const std::vector<std::string>& optional) {
    if (!j.is_object()) throw Error(ErrorKind::SchemaViolation, "expected a JSON object");
    if (!j.contains("schema_version") || j.at("schema_version") != kSchemaVersion)
        throw Error(ErrorKind::SchemaViolation, "schema_version must be \"" + std::string(kSchemaVersion) + "\"");
    if (!j.contains("kind") || j.at("kind") != kind)
        throw Error(ErrorKind::SchemaViolation, "kind must be \"" + kind + "\"");
    for (const std::string& key : required)
        if (!j.contains(key)) throw Error(ErrorKind::SchemaViolation, "missing required field \"" + key + "\"");
    for (const auto& [key, value] : j.items()) {
        if (key == "schema_version" || key == "kind") continue;
        bool known = false;
        for (const std::string& k : required) known = known || k == key;
        for (const std::string& k : optional) known = known || k == key;
        if (!known) throw Error(ErrorKind::SchemaViolation, "unknown field \"" + key + "\"");
    }
}

std::vector<std::vector<int>> grid_from_json(const json& j, int n, const std::string& where) {
    auto grid = j.get<std::vector<std::vector<int>>>();
    if (static_cast<int>(grid.size()) != n + 1)
        throw Error(ErrorKind::SchemaViolation, where + ": expected " + std::to_string(n + 1) + " rows");
    for (const auto& row : grid)
        if (static_cast<int>(row.size()) != n + 1)
            throw Error(ErrorKind::SchemaViolation, where + ": ragged rows");
    return grid;
}

}  // namespace

json report_to_json(const InvariantReport& r) {
    json j;
    j["model"] = r.model_name;
    j["n"] = r.n;
    j["betti"] = series_to_json(0, r.betti);
    j["hodge"] = r.hodge;
    j["bott_chern"] = r.bc;
    j["aeppli"] = r.aeppli;
    j["hyper_c1"] = series_to_json(1, r.hyper_c1);
    j["hyper_bc11"] = series_to_json(1, r.hyper_bc11);
    j["spade"] = series_to_json(1, r.spade);
    j["club"] = series_to_json(1, r.club);
    j["delta_bc_dol"] = r.delta_bc_dol;
    j["nk_degree"] = series_to_json(0, r.nk_degree);
    j["ddbar_lemma"] = r.ddbar_lemma;
    j["frolicher_e1"] = r.frolicher_e1;
    j["hodge_symmetry"] = r.hodge_symmetry;
    j["abelian"] = r.abelian;
    j["nilpotent"] = r.nilpotent;
    json checks = json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    return j;
}

namespace {

json space_to_json(const CohomologySpace& s) {
    json j;
    j["label"] = s.label.str();
    j["dim"] = static_cast<int>(s.dim());
    json gens = json::array();
    for (const Form& f : s.generators) gens.push_back(to_dsl_string(f));
    j["generators"] = gens;
    return j;
}

}  // namespace

json map_summary_to_json(const MapSummary& ms) {
    json j;
    j["name"] = ms.name;
    j["src"] = space_to_json(ms.src);
    j["dst"] = space_to_json(ms.dst);
    json rows = json::array();
    for (Eigen::Index i = 0; i < ms.matrix.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < ms.matrix.cols(); ++k) row.push_back(to_string(ms.matrix(i, k)));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    j["rank"] = static_cast<int>(ms.rank);
    j["ker_dim"] = static_cast<int>(ms.ker_dim);
    j["coker_dim"] = static_cast<int>(ms.coker_dim);
    json kg = json::array(), cg = json::array();
    for (const Form& f : ms.ker_generators) kg.push_back(to_dsl_string(f));
    for (const Form& f : ms.coker_generators) cg.push_back(to_dsl_string(f));
    j["ker_generators"] = kg;
    j["coker_generators"] = cg;
    return j;
}

json dim_tables_to_json(const DimTables& t) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "dim_tables";
    j["name"] = t.name;
    j["n"] = t.n;
    j["closed_manifold"] = t.closed_manifold;
    j["provenance"] = t.provenance;
    j["betti"] = series_to_json(t.betti);
    json hc = json::object();
    for (const auto& [p, series] : t.hyper_c) hc[std::to_string(p)] = series_to_json(series);
    j["hyper_c"] = hc;
    json hb = json::object();
    for (const auto& [pq, series] : t.hyper_bc)
        hb[std::to_string(pq.first) + "," + std::to_string(pq.second)] = series_to_json(series);
    j["hyper_bc"] = hb;
    if (t.hodge) j["hodge"] = *t.hodge;
    if (t.bc) j["bott_chern"] = *t.bc;
    if (t.aeppli) j["aeppli"] = *t.aeppli;
    return j;
}

DimTables dim_tables_from_json(const json& j) {
    require_schema(j, "dim_tables", {"name", "n", "betti"},
                   {"closed_manifold", "provenance", "hyper_c", "hyper_bc", "hodge", "bott_chern", "aeppli"});
    DimTables t;
    t.name = j.at("name").get<std::string>();
    t.n = j.at("n").get<int>();
    if (t.n < 0) throw Error(ErrorKind::SchemaViolation, "n must be >= 0");
    t.closed_manifold = j.value("closed_manifold", true);
    t.provenance = j.value("provenance", std::string("user"));
    t.betti = series_from_json(j.at("betti"), "betti");
    if (j.contains("hyper_c")) {
        for (const auto& [key, value] : j.at("hyper_c").items()) {
            t.hyper_c[std::stoi(key)] = series_from_json(value, "hyper_c[" + key + "]");
        }
    }
    if (j.contains("hyper_bc")) {
        for (const auto& [key, value] : j.at("hyper_bc").items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos)
                throw Error(ErrorKind::SchemaViolation, "hyper_bc keys look like \"p,q\"");
            int p = std::stoi(key.substr(0, comma));
            int q = std::stoi(key.substr(comma + 1));
            t.hyper_bc[{p, q}] = series_from_json(value, "hyper_bc[" + key + "]");
        }
    }
    if (j.contains("hodge")) t.hodge = grid_from_json(j.at("hodge"), t.n, "hodge");
    if (j.contains("bott_chern")) t.bc = grid_from_json(j.at("bott_chern"), t.n, "bott_chern");
    if (j.contains("aeppli")) t.aeppli = grid_from_json(j.at("aeppli"), t.n, "aeppli");
    return t;
}

HodgeDiamond hodge_diamond_from_json(const json& j) {
    require_schema(j, "hodge_diamond", {"n", "h"}, {"name"});
    HodgeDiamond d;
    d.n = j.at("n").get<int>();
    if (d.n < 1) throw Error(ErrorKind::SchemaViolation, "n must be >= 1");
    d.h = grid_from_json(j.at("h"), d.n, "h");
    return d;
}

SurfaceData surface_data_from_json(const json& j) {
    require_schema(j, "surface_data", {"h10", "h01", "h20", "h11_dol", "h11_bc", "b1", "chi_top", "chi_o"},
                   {"name"});
    SurfaceData s;
    s.h10 = j.at("h10").get<int>();
    s.h01 = j.at("h01").get<int>();
    s.h20 = j.at("h20").get<int>();
    s.h11_dol = j.at("h11_dol").get<int>();
    s.h11_bc = j.at("h11_bc").get<int>();
    s.b1 = j.at("b1").get<int>();
    s.chi_top = j.at("chi_top").get<int>();
    s.chi_o = j.at("chi_o").get<int>();
    for (int v : {s.h10, s.h01, s.h20, s.h11_dol, s.h11_bc, s.b1})
        if (v < 0) throw Error(ErrorKind::SchemaViolation, "cohomology dimensions must be >= 0");
    return s;
}

json compute_document(const CohomologyEngine& engine, const std::string& source,
                      const ComputeSelection& selection) {
    const int n = engine.n();

    // Warm the memo cache in parallel; every later read is a cache hit, so
    // document assembly below stays single-threaded and ordered.
    std::vector<std::function<void()>> jobs;
    if (selection.full) {
        for (int k = 0; k <= 2 * n; ++k) jobs.push_back([&engine, k] { engine.de_rham(k); });
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                jobs.push_back([&engine, p, q] {
                    engine.dolbeault(p, q);
                    engine.bott_chern(p, q);
                    engine.aeppli(p, q);
                });
        for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q)
                jobs.push_back([&engine, p, q, n] {
                    for (int k = 1; k <= 2 * n; ++k) engine.hyper_bc(k, p, q);
                });
        for (int k = 1; k <= 2 * n; ++k) jobs.push_back([&engine, k] { engine.hyper_truncated(k, 1); });
    }
    for (auto [p, q] : selection.bc) jobs.push_back([&engine, p = p, q = q] { engine.bott_chern(p, q); });
    for (auto [k, p, q] : selection.hyper)
        jobs.push_back([&engine, k = k, p = p, q = q] { engine.hyper_bc(k, p, q); });
    for (auto [k, p] : selection.trunc) jobs.push_back([&engine, k = k, p = p] { engine.hyper_truncated(k, p); });
    parallel_for(jobs.size(), [&jobs](std::size_t i) { jobs[i](); });

    std::vector<MapSummary> c_maps;
    std::vector<MapSummary> i_maps;
    if (selection.maps_c) c_maps.resize(static_cast<std::size_t>(2 * n));
    if (selection.maps_i) i_maps.resize(static_cast<std::size_t>((n + 1) * (n + 1)));
    std::size_t c_count = c_maps.size();
    parallel_for(c_maps.size() + i_maps.size(), [&](std::size_t i) {
        if (i < c_count) {
            c_maps[i] = engine.map_C(static_cast<int>(i) + 1);
        } else {
            std::size_t r = i - c_count;
            int p = static_cast<int>(r) / (n + 1);
            int q = static_cast<int>(r) % (n + 1);
            i_maps[r] = engine.map_I(p, q);
        }
    });

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = "result";
    doc["model"] = json{{"name", engine.model().name}, {"n", n}, {"source_sha256", sha256_hex(source)}};

    if (selection.full) doc["tables"] = report_to_json(consistency_report(engine));

    if (!selection.bc.empty() || !selection.hyper.empty() || !selection.trunc.empty()) {
        json sel;
        json bc = json::array();
        for (auto [p, q] : selection.bc) {
            json e = space_to_json(engine.bott_chern(p, q));
            e["p"] = p;
            e["q"] = q;
            bc.push_back(e);
        }
        if (!bc.empty()) sel["bott_chern"] = bc;
        json hy = json::array();
        for (auto [k, p, q] : selection.hyper) {
            json e = space_to_json(engine.hyper_bc(k, p, q));
            e["k"] = k;
            e["p"] = p;
            e["q"] = q;
            hy.push_back(e);
        }
        if (!hy.empty()) sel["hyper_bc"] = hy;
        json tr = json::array();
        for (auto [k, p] : selection.trunc) {
            json e = space_to_json(engine.hyper_truncated(k, p));
            e["k"] = k;
            e["p"] = p;
            tr.push_back(e);
        }
        if (!tr.empty()) sel["hyper_truncated"] = tr;
        doc["selected"] = sel;
    }

    if (selection.maps_c || selection.maps_i) {
        json maps;
        if (selection.maps_c) {
            json c = json::object();
            for (std::size_t i = 0; i < c_maps.size(); ++i)
                c[std::to_string(i + 1)] = map_summary_to_json(c_maps[i]);
            maps["C"] = c;
        }
        if (selection.maps_i) {
            json m = json::object();
            for (std::size_t r = 0; r < i_maps.size(); ++r) {
                int p = static_cast<int>(r) / (n + 1);
                int q = static_cast<int>(r) % (n + 1);
                m[std::to_string(p) + "," + std::to_string(q)] = map_summary_to_json(i_maps[r]);
            }
            maps["I"] = m;
        }
        doc["maps"] = maps;
    }
    return doc;
}

namespace {

std::string ints_line(const json& array_like) {
    std::string s;
    for (const auto& v : array_like) {
        if (!s.empty()) s += " ";
        s += std::to_string(v.get<int>());
    }
    return s;
}

void append_series_line(std::string& out, const std::string& name, const json& series) {
    int k_min = series.at("k_min").get<int>();
    int k_max = k_min + static_cast<int>(series.at("dims").size()) - 1;
    out += name + ": " + ints_line(series.at("dims")) + "   (k = " + std::to_string(k_min) + ".." +
           std::to_string(k_max) + ")\n";
}

void append_grid(std::string& out, const std::string& name, const json& grid) {
    out += name + ":\n";
    for (const auto& row : grid) out += "  " + ints_line(row) + "\n";
}

}  // namespace

std::string document_to_table_text(const json& doc) {
    std::string out;
    const json& model = doc.at("model");
    out += "model: " + model.at("name").get<std::string>() + " (n = " + std::to_string(model.at("n").get<int>()) +
           ")\n";
    out += "source_sha256: " + model.at("source_sha256").get<std::string>() + "\n";

    if (doc.contains("tables")) {
        const json& t = doc.at("tables");
        out += "\n";
        append_series_line(out, "betti", t.at("betti"));
        append_series_line(out, "hyper_c1", t.at("hyper_c1"));
        append_series_line(out, "hyper_bc11", t.at("hyper_bc11"));
        out += "spade: " + ints_line(t.at("spade").at("dims")) + "\n";
        out += "club: " + ints_line(t.at("club").at("dims")) + "\n";
        append_series_line(out, "nk_degree", t.at("nk_degree"));
        out += "ddbar_lemma: " + std::string(t.at("ddbar_lemma").get<bool>() ? "true" : "false") + "\n";
        out += "frolicher_e1: " + std::string(t.at("frolicher_e1").get<bool>() ? "true" : "false") + "\n";
        out += "hodge_symmetry: " + std::string(t.at("hodge_symmetry").get<bool>() ? "true" : "false") + "\n";
        out += "abelian: " + std::string(t.at("abelian").get<bool>() ? "true" : "false") + "\n";
        out += "nilpotent: " + std::string(t.at("nilpotent").get<bool>() ? "true" : "false") + "\n";
        out += "\n";
        append_grid(out, "hodge", t.at("hodge"));
        append_grid(out, "bott_chern", t.at("bott_chern"));
        append_grid(out, "aeppli", t.at("aeppli"));
        append_grid(out, "delta_bc_dol", t.at("delta_bc_dol"));
        out += "\nchecks:\n";
        for (const auto& c : t.at("checks")) {
            out += std::string("  [") + (c.at("pass").get<bool>() ? "pass" : "FAIL") + "] " +
                   c.at("name").get<std::string>();
            std::string detail = c.at("detail").get<std::string>();
            if (!detail.empty()) out += "  (" + detail + ")";
            out += "\n";
        }
    }

    if (doc.contains("selected")) {
        const json& sel = doc.at("selected");
        out += "\nselected:\n";
        for (const auto& [section, entries] : sel.items()) {
            for (const auto& e : entries) {
                out += "  " + e.at("label").get<std::string>() + ": dim " +
                       std::to_string(e.at("dim").get<int>()) + "\n";
                for (const auto& g : e.at("generators")) out += "    " + g.get<std::string>() + "\n";
            }
        }
    }

    if (doc.contains("maps")) {
        out += "\nmaps:\n";
        for (const auto& [family, entries] : doc.at("maps").items()) {
            for (const auto& [key, m] : entries.items()) {
                out += "  " + m.at("name").get<std::string>() + ": rank " +
                       std::to_string(m.at("rank").get<int>()) + ", ker " +
                       std::to_string(m.at("ker_dim").get<int>()) + ", coker " +
                       std::to_string(m.at("coker_dim").get<int>()) + "\n";
                for (const auto& g : m.at("ker_generators"))
                    out += "    ker: " + g.get<std::string>() + "\n";
                for (const auto& g : m.at("coker_generators"))
                    out += "    coker: " + g.get<std::string>() + "\n";
            }
        }
    }
    return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace bcwb
