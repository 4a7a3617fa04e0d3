// Acceptance suite: one line per criterion, asserted exactly as specified,
// with sub-item detail for anything that does not hold.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "bcwb/corpus.hpp"
#include "bcwb/diamond.hpp"
#include "bcwb/invariants.hpp"
#include "bcwb/io.hpp"
#include "bcwb/parser.hpp"

using namespace bcwb;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    template <typename T>
    void expect_eq(const T& got, const T& want, const std::string& what) {
        if (got != want) {
            std::ostringstream os;
            os << what << ": expected " << render(want) << ", computed " << render(got);
            failures.push_back(os.str());
        }
    }
    static std::string render(int v) { return std::to_string(v); }
    static std::string render(const std::vector<int>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    }
    static std::string render(const std::array<int, 4>& v) {
        return render(std::vector<int>(v.begin(), v.end()));
    }
};

std::vector<Form> forms(int n, std::initializer_list<const char*> exprs) {
    std::vector<Form> out;
    for (const char* e : exprs) out.push_back(parse_form(e, n));
    return out;
}

void check_space(Criterion& c, const CohomologySpace& space, int dim,
                 std::initializer_list<const char*> generators, const std::string& what) {
    c.expect_eq(static_cast<int>(space.dim()), dim, what + " dimension");
    std::vector<Form> fs = forms(space.n, generators);
    bool members = true;
    for (const Form& f : fs) members = members && is_class_of(space, f);
    c.expect(members, what + ": a listed generator is not a class of the space");
    if (static_cast<int>(fs.size()) == static_cast<int>(space.dim()))
        c.expect(classes_span(space, fs), what + ": listed generators do not span");
}

std::string run_binary(const std::string& env, const std::string& args, int* exit_code) {
    std::string cmd = env + " " + std::string(BCWB_BIN_PATH) + " " + args + " 2>/dev/null";
    std::string output;
    std::array<char, 4096> buffer{};
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return output;
    }
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
    *exit_code = WEXITSTATUS(pclose(pipe));
    return output;
}

// ---- criteria ----

Criterion criterion1() {
    Criterion c{1, "Iwasawa tables exact match"};
    CohomologyEngine engine(corpus_model("iwasawa"));
    InvariantReport r = consistency_report(engine);
    c.expect_eq(std::vector<int>(r.betti.begin() + 1, r.betti.end()), {4, 8, 10, 8, 4, 1}, "betti");
    c.expect_eq(r.hyper_c1, {2, 6, 9, 8, 4, 1}, "H^k(C(1))");
    c.expect_eq(r.hyper_bc11, {1, 4, 8, 8, 4, 1}, "H^k_BC(C(1,1))");
    c.expect_eq(r.spade, {1, 2, 1, 0, 0, 0}, "spade");
    c.expect_eq(r.club, {3, 4, 2, 0, 0, 0}, "club");
    return c;
}

Criterion criterion2() {
    Criterion c{2, "Iwasawa generator spans"};
    CohomologyEngine engine(corpus_model("iwasawa"));

    check_space(c, engine.bott_chern(1, 1), 4, {"w1^cw1", "w1^cw2", "w2^cw1", "w2^cw2"}, "H^{1,1}_BC");
    check_space(c, engine.dolbeault(1, 1), 6,
                {"w1^cw1", "w1^cw2", "w2^cw1", "w2^cw2", "w3^cw1", "w3^cw2"}, "H^{1,1}_dbar");
    check_space(c, engine.bott_chern(1, 2), 6,
                {"w1^cw1^cw2", "w1^cw1^cw3", "w1^cw2^cw3", "w2^cw1^cw2", "w2^cw1^cw3", "w2^cw2^cw3"},
                "H^{1,2}_BC");
    check_space(c, engine.bott_chern(2, 2), 8,
                {"w1^w2^cw1^cw3", "w1^w2^cw2^cw3", "w1^w3^cw1^cw2", "w1^w3^cw1^cw3", "w1^w3^cw2^cw3",
                 "w2^w3^cw1^cw2", "w2^w3^cw1^cw3", "w2^w3^cw2^cw3"},
                "H^{2,2}_BC");

    MapSummary i11 = engine.map_I(1, 1);
    c.expect_eq(static_cast<int>(i11.ker_dim), 0, "ker I^{1,1}");
    c.expect_eq(static_cast<int>(i11.coker_dim), 2, "coker I^{1,1}");
    c.expect(cokernel_span_matches(i11, forms(3, {"w3^cw1", "w3^cw2"})), "coker I^{1,1} span");

    MapSummary i12 = engine.map_I(1, 2);
    c.expect_eq(static_cast<int>(i12.ker_dim), 2, "ker I^{1,2}");
    c.expect_eq(static_cast<int>(i12.coker_dim), 2, "coker I^{1,2}");
    c.expect(kernel_span_matches(i12, forms(3, {"w1^cw1^cw2", "w2^cw1^cw2"})), "ker I^{1,2} span");
    c.expect(cokernel_span_matches(i12, forms(3, {"w3^cw1^cw3", "w3^cw2^cw3"})), "coker I^{1,2} span");

    MapSummary i22 = engine.map_I(2, 2);
    c.expect_eq(static_cast<int>(i22.ker_dim), 2, "ker I^{2,2}");
    c.expect_eq(static_cast<int>(i22.coker_dim), 0, "coker I^{2,2}");
    c.expect(kernel_span_matches(i22, forms(3, {"w1^w3^cw1^cw2", "w2^w3^cw1^cw2"})), "ker I^{2,2} span");
    return c;
}

Criterion criterion3() {
    Criterion c{3, "h6 exact match"};
    CohomologyEngine engine(corpus_model("h6"));
    InvariantReport r = consistency_report(engine);
    c.expect_eq(std::vector<int>(r.betti.begin() + 1, r.betti.end()), {4, 9, 11, 9, 4, 1}, "betti");
    c.expect_eq(r.hyper_c1, {2, 7, 11, 9, 4, 1}, "H^k(C(1))");
    c.expect_eq(r.hyper_bc11, {1, 5, 10, 9, 4, 1}, "H^k_BC(C(1,1))");
    c.expect_eq(r.spade, {1, 2, 1, 0, 0, 0}, "spade");
    c.expect_eq(r.club, {3, 4, 1, 0, 0, 0}, "club");

    std::vector<std::vector<int>> hodge = {{1, 2, 2, 1}, {2, 5, 5, 2}, {2, 5, 5, 2}, {1, 2, 2, 1}};
    std::vector<std::vector<int>> bc = {{1, 2, 2, 1}, {2, 5, 6, 2}, {2, 6, 6, 3}, {1, 2, 3, 1}};
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            c.expect_eq(r.hodge[p][q], hodge[p][q],
                        "hodge(" + std::to_string(p) + "," + std::to_string(q) + ")");
            c.expect_eq(r.bc[p][q], bc[p][q], "bc(" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
    c.expect(r.frolicher_e1, "Frolicher E1 degeneration");
    c.expect(!r.ddbar_lemma, "ddbar verdict must be false");
    return c;
}

Criterion criterion4() {
    Criterion c{4, "h7 exact match"};
    CohomologyEngine engine(corpus_model("h7"));
    InvariantReport r = consistency_report(engine);
    c.expect_eq(std::vector<int>(r.betti.begin() + 1, r.betti.end()), {3, 8, 12, 8, 3, 1}, "betti");
    c.expect_eq(r.hyper_c1, {1, 6, 12, 8, 3, 1}, "H^k(C(1))");
    c.expect_eq(r.hyper_bc11, {1, 5, 11, 8, 3, 1}, "H^k_BC(C(1,1))");
    c.expect_eq(r.spade, {0, 1, 1, 0, 0, 0}, "spade");
    c.expect_eq(r.club, {2, 3, 1, 0, 0, 0}, "club");

    MapSummary c2 = engine.map_C(2);
    c.expect_eq(static_cast<int>(c2.ker_dim), 1, "ker C^2");
    c.expect_eq(static_cast<int>(c2.coker_dim), 2, "coker C^2");
    c.expect(kernel_span_matches(c2, forms(3, {"w1^cw1"})), "ker C^2 span");
    c.expect(cokernel_span_matches(c2, forms(3, {"w1^w3", "w2^w3 - w3^cw2"})), "coker C^2 span");

    MapSummary c3 = engine.map_C(3);
    c.expect_eq(static_cast<int>(c3.ker_dim), 0, "ker C^3");
    c.expect_eq(static_cast<int>(c3.coker_dim), 1, "coker C^3");
    c.expect(cokernel_span_matches(c3, forms(3, {"w1^w2^w3"})), "coker C^3 span");

    auto check_map = [&](int p, int q, int ker, int coker) {
        MapSummary ms = engine.map_I(p, q);
        c.expect_eq(static_cast<int>(ms.ker_dim), ker,
                    "ker I^{" + std::to_string(p) + "," + std::to_string(q) + "}");
        c.expect_eq(static_cast<int>(ms.coker_dim), coker,
                    "coker I^{" + std::to_string(p) + "," + std::to_string(q) + "}");
    };
    check_map(1, 1, 2, 1);
    check_map(1, 2, 2, 1);
    check_map(2, 1, 1, 0);
    check_map(2, 2, 2, 0);

    // diamond rows: 1 / 1 2 / 2 4 2 / 1 5 5 1 / 3 4 2 / 2 2 / 1, higher p on
    // the left, transliterated to h[p][q]
    std::vector<std::vector<int>> hodge = {{1, 2, 2, 1}, {1, 4, 5, 2}, {2, 5, 4, 2}, {1, 3, 2, 1}};
    // rows: 1 / 1 1 / 3 5 3 / 1 6 6 1 / 2 5 2 / 3 3 / 1
    std::vector<std::vector<int>> bc = {{1, 1, 3, 1}, {1, 5, 6, 2}, {3, 6, 5, 3}, {1, 2, 3, 1}};
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            c.expect_eq(r.hodge[p][q], hodge[p][q],
                        "hodge(" + std::to_string(p) + "," + std::to_string(q) + ")");
            c.expect_eq(r.bc[p][q], bc[p][q], "bc(" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
    return c;
}

Criterion criterion5() {
    Criterion c{5, "property suite on every corpus model"};
    for (const std::string& name : corpus_names()) {
        CohomologyEngine engine(corpus_model(name));
        const int n = engine.n();
        std::string tag = "[" + name + "] ";

        c.expect(validate_model(engine.model()).ok(), tag + "d^2 identities");

        InvariantReport r = consistency_report(engine);
        for (const CheckResult& chk : r.checks)
            if (chk.name == "bc-schweitzer-identification" || chk.name == "aeppli-schweitzer-identification")
                c.expect(chk.pass, tag + chk.name);

        for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q)
                for (int k = 1; k <= 2 * n; ++k)
                    c.expect(engine.hyper_bc(k, p, q).dim() ==
                                 engine.hyper_bc(2 * n + 1 - k, n - p + 1, n - q + 1).dim(),
                             tag + "Prop 2.4 duality at (k,p,q)=(" + std::to_string(k) + "," +
                                 std::to_string(p) + "," + std::to_string(q) + ")");

        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                c.expect(r.bc[p][q] == r.aeppli[n - p][n - q],
                         tag + "star duality at (" + std::to_string(p) + "," + std::to_string(q) + ")");

        int chi_b11 = 0, chi_c1 = 0, chi_o = 0, chi_top = 0;
        for (int k = 1; k <= 2 * n; ++k) {
            int sign = (k % 2 == 0) ? 1 : -1;
            chi_b11 += sign * r.hyper_bc11[static_cast<std::size_t>(k - 1)];
            chi_c1 += sign * r.hyper_c1[static_cast<std::size_t>(k - 1)];
        }
        for (int q = 0; q <= n; ++q) chi_o += (q % 2 ? -1 : 1) * r.hodge[0][q];
        for (int k = 0; k <= 2 * n; ++k) chi_top += (k % 2 ? -1 : 1) * r.betti[static_cast<std::size_t>(k)];
        c.expect(chi_b11 == chi_c1 - chi_o, tag + "chi(B(1,1)) = chi(C(1)) - chi(O)");
        c.expect(chi_b11 == chi_top - 2 * chi_o, tag + "chi(B(1,1)) = chi_top - 2 chi(O)");

        int remark_lhs = static_cast<int>(engine.hyper_bc(2 * n - 1, n - 1, n - 1).dim());
        int remark_mid = static_cast<int>(engine.hyper_bc(2, 2, 2).dim());
        c.expect(remark_lhs == remark_mid && remark_mid == r.betti[1],
                 tag + "Remark 2.7 equality with b1: " + std::to_string(remark_lhs) + " = " +
                     std::to_string(remark_mid) + " = b1 = " + std::to_string(r.betti[1]));

        for (int k = n + 2; k <= 2 * n; ++k) {
            c.expect(r.spade[static_cast<std::size_t>(k - 1)] == 0,
                     tag + "spade vanishes at k=" + std::to_string(k));
            c.expect(r.club[static_cast<std::size_t>(k - 1)] == 0,
                     tag + "club vanishes at k=" + std::to_string(k));
        }

        for (int k = 1; k <= 2 * n; ++k) {
            MapSummary ms = engine.map_C(k);
            c.expect(static_cast<int>(ms.coker_dim - ms.ker_dim) == r.spade[static_cast<std::size_t>(k - 1)],
                     tag + "spade^k = coker - ker of C^k at k=" + std::to_string(k));
        }
    }
    return c;
}

Criterion criterion6() {
    Criterion c{6, "surfaces table"};
    c.expect_eq(surface_invariants({0, 0, 0, 1, 1, 0, 3, 1}), {-1, 0, 0, 0}, "P^2 row");
    c.expect_eq(surface_invariants({0, 0, 1, 20, 20, 0, 24, 2}), {-1, 1, 0, 0}, "K3 row");
    c.expect_eq(surface_invariants({2, 2, 1, 4, 4, 4, 0, 0}), {1, 1, 0, 0}, "torus row");

    CohomologyEngine kodaira(corpus_model("kodaira_primary"));
    c.expect_eq(spade(kodaira), {0, 0, 0, 0}, "primary Kodaira spade (engine)");
    CohomologyEngine torus(corpus_model("torus2"));
    c.expect_eq(spade(torus), {1, 1, 0, 0}, "torus2 spade (engine)");
    return c;
}

Criterion criterion7() {
    Criterion c{7, "Kahler mode"};
    HodgeDiamond quintic{3, {{1, 0, 0, 1}, {0, 1, 101, 0}, {0, 101, 1, 0}, {1, 0, 0, 1}}};
    DimTables qt = kahler_tables(quintic);
    c.expect_eq(qt.spade(), {-1, 0, 1, 0, 0, 0}, "quintic spade");
    c.expect_eq(qt.club(), {-1, 0, 2, 0, 0, 0}, "quintic club");

    HodgeDiamond cubic{3, {{1, 0, 0, 0}, {0, 1, 5, 0}, {0, 5, 1, 0}, {0, 0, 0, 1}}};
    DimTables ct = kahler_tables(cubic);
    c.expect_eq(ct.spade(), {-1, 0, 0, 0, 0, 0}, "cubic spade");
    c.expect_eq(ct.club(), {-1, 0, 0, 0, 0, 0}, "cubic club");

    HodgeDiamond t3{3, {{1, 3, 3, 1}, {3, 9, 9, 3}, {3, 9, 9, 3}, {1, 3, 3, 1}}};
    DimTables dt = kahler_tables(t3);
    CohomologyEngine engine(corpus_model("torus3"));
    DimTables et = engine_tables(engine);
    for (int k = 0; k <= 6; ++k)
        c.expect(dt.betti.at(k) == et.betti.at(k), "T^3 betti at k=" + std::to_string(k));
    for (int p = 0; p <= 3; ++p)
        for (int k = 0; k <= 6; ++k)
            c.expect(dt.hyper_c.at(p).at(k) == et.hyper_c.at(p).at(k),
                     "T^3 hyper_c p=" + std::to_string(p) + " k=" + std::to_string(k));
    for (int k = 1; k <= 6; ++k)
        c.expect(dt.hyper_bc.at({1, 1}).at(k) == et.hyper_bc.at({1, 1}).at(k),
                 "T^3 hyper_bc(1,1) at k=" + std::to_string(k));
    c.expect(*dt.hodge == *et.hodge && *dt.bc == *et.bc && *dt.aeppli == *et.aeppli,
             "T^3 hodge/bc/aeppli grids");
    return c;
}

Criterion criterion8() {
    Criterion c{8, "blow-up invariance"};
    DimTables pt = point_tables();
    CohomologyEngine curve_engine(corpus_model("torus1"));
    DimTables curve = engine_tables(curve_engine);

    for (const char* name : {"iwasawa", "h6", "h7"}) {
        CohomologyEngine engine(corpus_model(name));
        DimTables X = engine_tables(engine);
        std::string tag = "[" + std::string(name) + "] ";

        for (auto [z, codim, zname] :
             {std::tuple<const DimTables*, int, const char*>{&pt, 3, "point"},
              std::tuple<const DimTables*, int, const char*>{&curve, 2, "curve"}}) {
            InvarianceReport rep = invariance_check(X, *z, codim);
            c.expect(rep.pass, tag + std::string(zname) + ": spade/club unchanged");
            for (int k = 0; k <= 2 * X.n; ++k) {
                int want = X.betti.at(k);
                for (int i = 1; i < codim; ++i) want += z->betti.at(k - 2 * i);
                c.expect(rep.predicted.betti.at(k) == want,
                         tag + std::string(zname) + ": de Rham gain at k=" + std::to_string(k));
            }
        }
    }
    return c;
}

Criterion criterion9() {
    Criterion c{9, "determinism across thread counts"};
    int code1 = 0, code8 = 0;
    std::string doc1 = run_binary("BCWB_THREADS=1", "compute corpus:iwasawa", &code1);
    std::string doc8 = run_binary("BCWB_THREADS=8", "compute corpus:iwasawa", &code8);
    c.expect(code1 == 0, "BCWB_THREADS=1 run exits 0");
    c.expect(code8 == 0, "BCWB_THREADS=8 run exits 0");
    c.expect(!doc1.empty() && doc1 == doc8, "ResultDocuments byte-identical");

    std::string again = run_binary("BCWB_THREADS=1", "compute corpus:iwasawa", &code1);
    c.expect(doc1 == again, "repeated runs byte-identical");
    return c;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    auto suite_start = clock::now();
    int failed = 0;

    std::vector<Criterion (*)()> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                             criterion6, criterion7, criterion8, criterion9};
    for (auto* fn : criteria) {
        auto start = clock::now();
        Criterion c = fn();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
        bool pass = c.failures.empty();
        if (!pass) ++failed;
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title << " ("
                  << ms << " ms)\n";
        for (const std::string& f : c.failures) std::cout << "         - " << f << "\n";
    }

    auto total_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - suite_start).count();
    std::cout << (failed == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (" << (9 - failed)
              << "/9 criteria, " << total_ms << " ms total)\n";
    return failed == 0 ? 0 : 1;
}
