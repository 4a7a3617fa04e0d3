// Dimension-table calculus: Kahler mode, surfaces, blow-up and bundle
// predictors, invariance verdicts.

#include "catch_amalgamated.hpp"

#include "bcwb/corpus.hpp"
#include "bcwb/diamond.hpp"
#include "bcwb/invariants.hpp"

using namespace bcwb;

namespace {

HodgeDiamond quintic_diamond() {
    return HodgeDiamond{3, {{1, 0, 0, 1}, {0, 1, 101, 0}, {0, 101, 1, 0}, {1, 0, 0, 1}}};
}

HodgeDiamond cubic_diamond() {
    return HodgeDiamond{3, {{1, 0, 0, 0}, {0, 1, 5, 0}, {0, 5, 1, 0}, {0, 0, 0, 1}}};
}

HodgeDiamond torus_diamond(int n) {
    auto binom = [](int m, int k) {
        long r = 1;
        for (int i = 0; i < k; ++i) r = r * (m - i) / (i + 1);
        return static_cast<int>(r);
    };
    HodgeDiamond d;
    d.n = n;
    d.h.assign(n + 1, std::vector<int>(n + 1, 0));
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) d.h[p][q] = binom(n, p) * binom(n, q);
    return d;
}

}  // namespace

TEST_CASE("quintic and cubic Kahler tables") {
    DimTables quintic = kahler_tables(quintic_diamond());
    CHECK(quintic.spade() == std::vector<int>{-1, 0, 1, 0, 0, 0});
    CHECK(quintic.club() == std::vector<int>{-1, 0, 2, 0, 0, 0});

    DimTables cubic = kahler_tables(cubic_diamond());
    CHECK(cubic.spade() == std::vector<int>{-1, 0, 0, 0, 0, 0});
    CHECK(cubic.club() == std::vector<int>{-1, 0, 0, 0, 0, 0});
}

TEST_CASE("Kahler mode refuses asymmetric diamonds") {
    HodgeDiamond bad{2, {{1, 2, 0}, {1, 4, 2}, {0, 2, 1}}};
    CHECK_THROWS_AS(kahler_tables(bad), Error);
    HodgeDiamond bad_corner{1, {{2, 1}, {1, 1}}};
    CHECK_THROWS_AS(kahler_tables(bad_corner), Error);
}

TEST_CASE("Kahler closed forms reproduce the abelian engine tables") {
    // Full cross-validation of the pluriharmonic closed form on tori.
    for (const char* name : {"torus1", "torus2", "torus3"}) {
        CohomologyEngine engine(corpus_model(name));
        DimTables from_engine = engine_tables(engine);
        DimTables from_diamond = kahler_tables(torus_diamond(engine.n()));

        for (int k = 0; k <= 2 * engine.n(); ++k) CHECK(from_diamond.betti.at(k) == from_engine.betti.at(k));
        for (int p = 0; p <= engine.n(); ++p)
            for (int k = 0; k <= 2 * engine.n(); ++k)
                CHECK(from_diamond.hyper_c.at(p).at(k) == from_engine.hyper_c.at(p).at(k));
        for (int k = 1; k <= 2 * engine.n(); ++k)
            CHECK(from_diamond.hyper_bc.at({1, 1}).at(k) == from_engine.hyper_bc.at({1, 1}).at(k));
        CHECK(*from_diamond.hodge == *from_engine.hodge);
        CHECK(*from_diamond.bc == *from_engine.bc);
        CHECK(*from_diamond.aeppli == *from_engine.aeppli);
    }
}

TEST_CASE("surface invariants rows") {
    CHECK(surface_invariants({0, 0, 0, 1, 1, 0, 3, 1}) == std::array<int, 4>{-1, 0, 0, 0});    // P^2
    CHECK(surface_invariants({0, 0, 1, 20, 20, 0, 24, 2}) == std::array<int, 4>{-1, 1, 0, 0}); // K3
    CHECK(surface_invariants({2, 2, 1, 4, 4, 4, 0, 0}) == std::array<int, 4>{1, 1, 0, 0});     // torus
}

TEST_CASE("surface formulas agree with the engine on the corpus surfaces") {
    for (const char* name : {"torus2", "kodaira_primary"}) {
        CohomologyEngine engine(corpus_model(name));
        InvariantReport r = consistency_report(engine);
        SurfaceData data;
        data.h10 = r.hodge[1][0];
        data.h01 = r.hodge[0][1];
        data.h20 = r.hodge[2][0];
        data.h11_dol = r.hodge[1][1];
        data.h11_bc = r.bc[1][1];
        data.b1 = r.betti[1];
        data.chi_o = r.hodge[0][0] - r.hodge[0][1] + r.hodge[0][2];
        data.chi_top = 0;
        for (int k = 0; k <= 4; ++k) data.chi_top += (k % 2 ? -1 : 1) * r.betti[static_cast<std::size_t>(k)];
        std::array<int, 4> sp = surface_invariants(data);
        for (int k = 1; k <= 4; ++k) CHECK(sp[static_cast<std::size_t>(k - 1)] == r.spade[static_cast<std::size_t>(k - 1)]);
    }
}

TEST_CASE("blow-up of iwasawa at a point") {
    CohomologyEngine engine(corpus_model("iwasawa"));
    DimTables X = engine_tables(engine);
    DimTables pt = point_tables();
    DimTables blown = blowup_predict(invariance_subset(X), pt, 3);

    std::vector<int> bc11 = {1, 5, 8, 9, 4, 1};
    std::vector<int> c1 = {2, 7, 9, 9, 4, 1};
    for (int k = 1; k <= 6; ++k) {
        CHECK(blown.hyper_bc.at({1, 1}).at(k) == bc11[static_cast<std::size_t>(k - 1)]);
        CHECK(blown.hyper_c.at(1).at(k) == c1[static_cast<std::size_t>(k - 1)]);
    }
    // de Rham gains: +1 at k = 2 and k = 4
    CHECK(blown.betti.at(2) == X.betti.at(2) + 1);
    CHECK(blown.betti.at(3) == X.betti.at(3));
    CHECK(blown.betti.at(4) == X.betti.at(4) + 1);

    CHECK(blown.spade() == X.spade());
    CHECK(blown.club() == X.club());
}

TEST_CASE("blow-up along an elliptic curve") {
    CohomologyEngine engine(corpus_model("h6"));
    DimTables X = engine_tables(engine);
    CohomologyEngine curve(corpus_model("torus1"));
    DimTables Z = engine_tables(curve);
    DimTables blown = blowup_predict(invariance_subset(X), Z, 2);

    // betti gains are b(Z) shifted by 2: (0,0,1,2,1,0,0)
    std::vector<int> gain = {0, 0, 1, 2, 1, 0, 0};
    for (int k = 0; k <= 6; ++k) CHECK(blown.betti.at(k) == X.betti.at(k) + gain[static_cast<std::size_t>(k)]);
    CHECK(blown.spade() == X.spade());
    CHECK(blown.club() == X.club());
}

TEST_CASE("degenerate blow-up inputs") {
    CohomologyEngine engine(corpus_model("iwasawa"));
    DimTables X = engine_tables(engine);
    DimTables pt = point_tables();

    CHECK_THROWS_AS(blowup_predict(invariance_subset(X), pt, 1), Error);  // codimension >= 2
    CHECK_THROWS_AS(blowup_predict(invariance_subset(X), pt, 2), Error);  // dim Z mismatch

    // a center with all-zero tables changes nothing
    DimTables zero = pt;
    zero.betti.dims = {0};
    zero.hyper_c[1] = DimSeries{0, {0}};
    zero.hyper_bc[{1, 1}] = DimSeries{1, {0}};
    CohomologyEngine surf(corpus_model("kodaira_primary"));
    DimTables S = engine_tables(surf);
    DimTables blown = blowup_predict(invariance_subset(S), zero, 2);
    for (int k = 0; k <= 4; ++k) CHECK(blown.betti.at(k) == S.betti.at(k));
    CHECK(blown.spade() == S.spade());
}

TEST_CASE("missing center tables are named") {
    CohomologyEngine engine(corpus_model("iwasawa"));
    DimTables X = engine_tables(engine);
    // strip the (2,2) requirement trigger: ask to predict all tables with a
    // center that has no hyper_bc (1,1) entry
    DimTables bare;
    bare.name = "bare";
    bare.n = 0;
    bare.betti = DimSeries{0, {1}};
    bare.hyper_c[1] = DimSeries{0, {0}};
    try {
        blowup_predict(X, bare, 3);
        FAIL("expected MissingTableEntry");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MissingTableEntry);
        CHECK(std::string(e.what()).find("(") != std::string::npos);
    }
}

TEST_CASE("invariance check passes for corpus threefolds and centers") {
    DimTables pt = point_tables();
    CohomologyEngine curve_engine(corpus_model("torus1"));
    DimTables curve = engine_tables(curve_engine);
    for (const char* name : {"iwasawa", "h6", "h7"}) {
        CohomologyEngine engine(corpus_model(name));
        DimTables X = engine_tables(engine);

        InvarianceReport at_point = invariance_check(X, pt, 3);
        INFO(name << " point center");
        CHECK(at_point.pass);
        CHECK(at_point.spade_base == at_point.spade_blowup);
        CHECK(at_point.club_base == at_point.club_blowup);

        InvarianceReport at_curve = invariance_check(X, curve, 2);
        INFO(name << " curve center");
        CHECK(at_curve.pass);
    }
    // surfaces blown up at points
    for (const char* name : {"torus2", "kodaira_primary"}) {
        CohomologyEngine engine(corpus_model(name));
        InvarianceReport rep = invariance_check(engine_tables(engine), pt, 2);
        CHECK(rep.pass);
    }
}

TEST_CASE("corrupted center is reported with the degree") {
    CohomologyEngine engine(corpus_model("iwasawa"));
    DimTables X = engine_tables(engine);
    CohomologyEngine curve(corpus_model("torus1"));
    DimTables Z = engine_tables(curve);
    Z.betti.dims = {1, 2, 2};  // asymmetric: b_0 != b_2
    InvarianceReport rep = invariance_check(X, Z, 2);
    CHECK_FALSE(rep.pass);
    REQUIRE_FALSE(rep.failures.empty());
    CHECK(rep.failures.front().find("degree") != std::string::npos);
}

TEST_CASE("projective bundles over a point and a curve") {
    DimTables pt = point_tables();

    DimTables p1 = bundle_predict(pt, 2);
    CHECK(p1.n == 1);
    CHECK(p1.betti.dims == std::vector<int>{1, 0, 1});
    // H^k_BC(pt,C(1,1)) + H^{k-2}_dR(pt): one class at k = 1, one at k = 2
    CHECK(p1.hyper_bc.at({1, 1}).at(1) == 1);
    CHECK(p1.hyper_bc.at({1, 1}).at(2) == 1);
    CHECK(p1.hyper_bc.at({1, 1}).at(3) == 0);

    DimTables p3 = bundle_predict(pt, 4);
    CHECK(p3.betti.dims == std::vector<int>{1, 0, 1, 0, 1, 0, 1});

    CohomologyEngine curve(corpus_model("torus1"));
    DimTables ruled = bundle_predict(engine_tables(curve), 2);
    CHECK(ruled.betti.dims == std::vector<int>{1, 2, 2, 2, 1});
}

TEST_CASE("blow-up preserves Poincare symmetry of symmetric inputs") {
    CohomologyEngine engine(corpus_model("h7"));
    DimTables X = engine_tables(engine);
    CohomologyEngine curve(corpus_model("torus1"));
    for (int c : {2, 3}) {
        DimTables Z = c == 2 ? engine_tables(curve) : point_tables();
        DimTables blown = blowup_predict(invariance_subset(X), Z, c);
        for (int k = 0; k <= 2 * blown.n; ++k)
            CHECK(blown.betti.at(k) == blown.betti.at(2 * blown.n - k));
    }
}
