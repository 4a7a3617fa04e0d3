#include "bcwb/diamond.hpp"

namespace bcwb {

namespace {

const DimSeries& require_series(const DimTables& t, const std::string& what) {
    if (what == "betti") {
        if (t.betti.dims.empty())
            throw Error(ErrorKind::MissingTableEntry, t.name + ": missing betti table");
        return t.betti;
    }
    throw Error(ErrorKind::MissingTableEntry, "unknown table " + what);
}

const DimSeries& require_hyper_c(const DimTables& t, int p) {
    auto it = t.hyper_c.find(p);
    if (it == t.hyper_c.end())
        throw Error(ErrorKind::MissingTableEntry,
                    t.name + ": missing hyper_c table for p=" + std::to_string(p));
    return it->second;
}

const DimSeries& require_hyper_bc(const DimTables& t, int p, int q) {
    auto it = t.hyper_bc.find({p, q});
    if (it == t.hyper_bc.end())
        throw Error(ErrorKind::MissingTableEntry, t.name + ": missing hyper_bc table for (p,q)=(" +
                                                      std::to_string(p) + "," + std::to_string(q) + ")");
    return it->second;
}

}  // namespace

std::vector<int> DimTables::spade() const {
    const DimSeries& c1 = require_hyper_c(*this, 1);
    const DimSeries& b11 = require_hyper_bc(*this, 1, 1);
    std::vector<int> out;
    for (int k = 1; k <= 2 * n; ++k) out.push_back(c1.at(k) - b11.at(k));
    return out;
}

std::vector<int> DimTables::club() const {
    const DimSeries& b = require_series(*this, "betti");
    const DimSeries& b11 = require_hyper_bc(*this, 1, 1);
    std::vector<int> out;
    for (int k = 1; k <= 2 * n; ++k) out.push_back(b.at(k) - b11.at(k));
    return out;
}

DimTables engine_tables(const CohomologyEngine& engine) {
    const int n = engine.n();
    DimTables t;
    t.name = engine.model().name;
    t.n = n;
    t.provenance = "engine";

    t.betti.k_min = 0;
    for (int k = 0; k <= 2 * n; ++k) t.betti.dims.push_back(static_cast<int>(engine.de_rham(k).dim()));

    for (int p = 0; p <= n; ++p) {
        DimSeries s;
        s.k_min = 0;
        for (int k = 0; k <= 2 * n; ++k) s.dims.push_back(static_cast<int>(engine.hyper_truncated(k, p).dim()));
        t.hyper_c[p] = std::move(s);
    }
    for (int p = 1; p <= n; ++p) {
        for (int q = 1; q <= n; ++q) {
            DimSeries s;
            s.k_min = 1;
            for (int k = 1; k <= 2 * n; ++k) s.dims.push_back(static_cast<int>(engine.hyper_bc(k, p, q).dim()));
            t.hyper_bc[{p, q}] = std::move(s);
        }
    }

    std::vector<std::vector<int>> hodge(n + 1, std::vector<int>(n + 1, 0));
    std::vector<std::vector<int>> bc(n + 1, std::vector<int>(n + 1, 0));
    std::vector<std::vector<int>> aeppli(n + 1, std::vector<int>(n + 1, 0));
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            hodge[p][q] = static_cast<int>(engine.dolbeault(p, q).dim());
            bc[p][q] = static_cast<int>(engine.bott_chern(p, q).dim());
            aeppli[p][q] = static_cast<int>(engine.aeppli(p, q).dim());
        }
    }
    t.hodge = std::move(hodge);
    t.bc = std::move(bc);
    t.aeppli = std::move(aeppli);
    return t;
}

DimTables point_tables() {
    DimTables t;
    t.name = "point";
    t.n = 0;
    t.provenance = "user";
    t.betti = DimSeries{0, {1}};
    t.hyper_c[0] = DimSeries{0, {1}};
    t.hyper_c[1] = DimSeries{0, {0}};
    // B_pt(1,1) = [C -> O + Obar] has exactly H^1 = C.
    t.hyper_bc[{1, 1}] = DimSeries{1, {1}};
    return t;
}

DimTables invariance_subset(const DimTables& t) {
    DimTables out;
    out.name = t.name;
    out.n = t.n;
    out.closed_manifold = t.closed_manifold;
    out.provenance = t.provenance;
    out.betti = t.betti;
    for (int p : {0, 1}) {
        auto it = t.hyper_c.find(p);
        if (it != t.hyper_c.end()) out.hyper_c[p] = it->second;
    }
    auto it = t.hyper_bc.find({1, 1});
    if (it != t.hyper_bc.end()) out.hyper_bc[{1, 1}] = it->second;
    return out;
}

DimTables kahler_tables(const HodgeDiamond& diamond) {
    const int n = diamond.n;
    if (n < 1 || static_cast<int>(diamond.h.size()) != n + 1)
        throw Error(ErrorKind::SchemaViolation, "hodge diamond: need (n+1) x (n+1) entries");
    for (const auto& row : diamond.h)
        if (static_cast<int>(row.size()) != n + 1)
            throw Error(ErrorKind::SchemaViolation, "hodge diamond: need (n+1) x (n+1) entries");
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            if (diamond.h[p][q] != diamond.h[q][p])
                throw Error(ErrorKind::AsymmetricDiamond,
                            "hodge diamond is not conjugation-symmetric at (" + std::to_string(p) + "," +
                                std::to_string(q) + ")");
    if (diamond.h[0][0] != 1 || diamond.h[n][n] != 1)
        throw Error(ErrorKind::AsymmetricDiamond, "hodge diamond: h^{0,0} and h^{n,n} must be 1");

    DimTables t;
    t.name = "kahler";
    t.n = n;
    t.provenance = "kahler";

    auto h = [&](int p, int q) {
        if (p < 0 || q < 0 || p > n || q > n) return 0;
        return diamond.h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    };

    t.betti.k_min = 0;
    for (int k = 0; k <= 2 * n; ++k) {
        int total = 0;
        for (int p = 0; p <= n; ++p) total += h(p, k - p);
        t.betti.dims.push_back(total);
    }

    for (int p0 = 0; p0 <= n; ++p0) {
        DimSeries s;
        s.k_min = 0;
        for (int k = 0; k <= 2 * n; ++k) {
            int total = 0;
            for (int s0 = p0; s0 <= n; ++s0) total += h(s0, k - s0);
            s.dims.push_back(total);
        }
        t.hyper_c[p0] = std::move(s);
    }

    // dim H^{k-1} of the pluriharmonic sheaf, from the long exact sequence of
    // 0 -> C -> O + Obar -> H -> 0 under the Hodge decomposition.
    DimSeries b11;
    b11.k_min = 1;
    for (int k = 1; k <= 2 * n; ++k)
        b11.dims.push_back(k == 1 ? 1 : t.betti.at(k) - h(0, k) - h(k, 0));
    t.hyper_bc[{1, 1}] = std::move(b11);

    t.hodge = diamond.h;
    t.bc = diamond.h;
    t.aeppli = diamond.h;
    return t;
}

std::array<int, 4> surface_invariants(const SurfaceData& s) {
    return {
        s.h10 - 1,
        s.h11_dol - s.h11_bc + s.h20,
        s.b1 - s.h11_bc - 2 * s.chi_o + s.chi_top,
        0,
    };
}

namespace {

// One shifted Z-entry of the blow-up sums.  Entries with p' <= 0 and q' <= 0
// are de Rham by the L(1-i,1-i) = A^*[1] convention; any other missing table
// is a hole the caller must fill explicitly.
int z_hyper_bc_entry(const DimTables& Z, int p, int q, int k) {
    if (p <= 0 && q <= 0) return require_series(Z, "betti").at(k);
    auto it = Z.hyper_bc.find({p, q});
    if (it == Z.hyper_bc.end())
        throw Error(ErrorKind::MissingTableEntry,
                    Z.name + ": no hyper_bc table for (p,q)=(" + std::to_string(p) + "," +
                        std::to_string(q) + ") needed at k=" + std::to_string(k));
    return it->second.at(k);
}

int z_hyper_c_entry(const DimTables& Z, int p, int k) {
    if (p <= 0) return require_series(Z, "betti").at(k);
    auto it = Z.hyper_c.find(p);
    if (it == Z.hyper_c.end())
        throw Error(ErrorKind::MissingTableEntry, Z.name + ": no hyper_c table for p=" + std::to_string(p) +
                                                      " needed at k=" + std::to_string(k));
    return it->second.at(k);
}

}  // namespace

DimTables blowup_predict(const DimTables& X, const DimTables& Z, int c) {
    if (c < 2) throw Error(ErrorKind::RangeError, "blow-up codimension >= 2 required");
    if (Z.n != X.n - c)
        throw Error(ErrorKind::RangeError, "center dimension mismatch: dim Z = " + std::to_string(Z.n) +
                                               ", expected dim X - c = " + std::to_string(X.n - c));
    DimTables out;
    out.name = X.name + "~blowup(" + Z.name + ",c=" + std::to_string(c) + ")";
    out.n = X.n;
    out.closed_manifold = X.closed_manifold;
    out.provenance = "predicted";

    const DimSeries& bx = require_series(X, "betti");
    const DimSeries& bz = require_series(Z, "betti");
    out.betti.k_min = 0;
    for (int k = 0; k <= 2 * X.n; ++k) {
        int total = bx.at(k);
        for (int i = 1; i < c; ++i) total += bz.at(k - 2 * i);
        out.betti.dims.push_back(total);
    }

    for (const auto& [p, series] : X.hyper_c) {
        DimSeries s;
        s.k_min = series.k_min;
        for (int k = series.k_min; k <= 2 * X.n; ++k) {
            int total = series.at(k);
            for (int i = 1; i < c; ++i) total += z_hyper_c_entry(Z, p - i, k - 2 * i);
            s.dims.push_back(total);
        }
        out.hyper_c[p] = std::move(s);
    }

    for (const auto& [pq, series] : X.hyper_bc) {
        DimSeries s;
        s.k_min = series.k_min;
        for (int k = series.k_min; k <= 2 * X.n; ++k) {
            int total = series.at(k);
            for (int i = 1; i < c; ++i) total += z_hyper_bc_entry(Z, pq.first - i, pq.second - i, k - 2 * i);
            s.dims.push_back(total);
        }
        out.hyper_bc[pq] = std::move(s);
    }
    return out;
}

DimTables bundle_predict(const DimTables& Z, int c) {
    if (c < 1) throw Error(ErrorKind::RangeError, "bundle rank >= 1 required");
    DimTables out;
    out.name = "P(" + Z.name + ",rank=" + std::to_string(c) + ")";
    out.n = Z.n + c - 1;
    out.closed_manifold = Z.closed_manifold;
    out.provenance = "predicted";

    const DimSeries& bz = require_series(Z, "betti");
    out.betti.k_min = 0;
    for (int k = 0; k <= 2 * out.n; ++k) {
        int total = 0;
        for (int i = 0; i < c; ++i) total += bz.at(k - 2 * i);
        out.betti.dims.push_back(total);
    }

    for (const auto& [p, series] : Z.hyper_c) {
        DimSeries s;
        s.k_min = series.k_min;
        for (int k = series.k_min; k <= 2 * out.n; ++k) {
            int total = 0;
            for (int i = 0; i < c; ++i) total += z_hyper_c_entry(Z, p - i, k - 2 * i);
            s.dims.push_back(total);
        }
        out.hyper_c[p] = std::move(s);
    }

    for (const auto& [pq, series] : Z.hyper_bc) {
        DimSeries s;
        s.k_min = series.k_min;
        for (int k = series.k_min; k <= 2 * out.n; ++k) {
            int total = 0;
            for (int i = 0; i < c; ++i) total += z_hyper_bc_entry(Z, pq.first - i, pq.second - i, k - 2 * i);
            s.dims.push_back(total);
        }
        out.hyper_bc[pq] = std::move(s);
    }
    return out;
}

InvarianceReport invariance_check(const DimTables& X, const DimTables& Z, int c) {
    InvarianceReport report;

    auto check_symmetry = [&report](const DimTables& t, const std::string& who) {
        if (!t.closed_manifold) return;
        for (int k = 0; k <= 2 * t.n; ++k) {
            if (t.betti.at(k) != t.betti.at(2 * t.n - k)) {
                report.failures.push_back(who + ": betti not Poincare-symmetric at degree " +
                                          std::to_string(k));
                return;
            }
        }
    };
    check_symmetry(X, "base");
    check_symmetry(Z, "center");

    // only the (1,1)-window tables feed the verdict; mixed (p,q) entries would
    // need user-supplied conventions and are not predicted here
    report.predicted = blowup_predict(invariance_subset(X), Z, c);
    report.spade_base = X.spade();
    report.club_base = X.club();
    report.spade_blowup = report.predicted.spade();
    report.club_blowup = report.predicted.club();

    for (int k = 1; k <= 2 * X.n; ++k) {
        std::size_t i = static_cast<std::size_t>(k - 1);
        if (report.spade_base[i] != report.spade_blowup[i])
            report.failures.push_back("spade^" + std::to_string(k) + " changes under blow-up");
        if (report.club_base[i] != report.club_blowup[i])
            report.failures.push_back("club^" + std::to_string(k) + " changes under blow-up");
    }
    report.pass = report.failures.empty();
    return report;
}

}  // namespace bcwb
