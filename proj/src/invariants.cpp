#include "bcwb/invariants.hpp"

namespace bcwb {

namespace {

int space_dim(const CohomologySpace& s) { return static_cast<int>(s.dim()); }

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

int alternating_sum(const std::vector<int>& v, int k_min) {
    int total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        int k = k_min + static_cast<int>(i);
        total += (k % 2 == 0) ? v[i] : -v[i];
    }
    return total;
}

bool same_vectors(const std::vector<VectorQI>& a, const std::vector<VectorQI>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (Eigen::Index j = 0; j < a[i].size(); ++j)
            if (a[i](j) != b[i](j)) return false;
    }
    return true;
}

}  // namespace

std::vector<int> spade(const CohomologyEngine& engine) {
    std::vector<int> out;
    for (int k = 1; k <= 2 * engine.n(); ++k)
        out.push_back(space_dim(engine.hyper_truncated(k, 1)) - space_dim(engine.hyper_bc(k, 1, 1)));
    return out;
}

std::vector<int> club(const CohomologyEngine& engine) {
    std::vector<int> out;
    for (int k = 1; k <= 2 * engine.n(); ++k)
        out.push_back(space_dim(engine.de_rham(k)) - space_dim(engine.hyper_bc(k, 1, 1)));
    return out;
}

std::vector<std::vector<int>> delta_bc_dol(const CohomologyEngine& engine) {
    const int n = engine.n();
    std::vector<std::vector<int>> out(n + 1, std::vector<int>(n + 1, 0));
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            out[p][q] = space_dim(engine.bott_chern(p, q)) - space_dim(engine.dolbeault(p, q));
    return out;
}

std::pair<std::vector<int>, bool> nk_degrees(const CohomologyEngine& engine) {
    const int n = engine.n();
    std::vector<int> degrees(2 * n + 1, 0);
    for (int k = 0; k <= 2 * n; ++k) {
        int total = 0;
        for (int p = std::max(0, k - n); p <= std::min(n, k); ++p) {
            int q = k - p;
            total += space_dim(engine.bott_chern(p, q)) + space_dim(engine.aeppli(p, q));
        }
        degrees[k] = total - 2 * space_dim(engine.de_rham(k));
    }
    bool ddbar = true;
    for (int d : degrees)
        if (d != 0) ddbar = false;
    return {degrees, ddbar};
}

InvariantReport consistency_report(const CohomologyEngine& engine) {
    const int n = engine.n();
    InvariantReport r;
    r.model_name = engine.model().name;
    r.n = n;

    ValidationReport validation = validate_model(engine.model());
    r.abelian = validation.abelian;
    r.nilpotent = validation.nilpotent;

    auto add_check = [&r](const std::string& name, bool pass, std::string detail) {
        r.checks.push_back(CheckResult{name, pass, std::move(detail)});
    };

    if (!validation.d_squared_ok) {
        // no complex to compute; report the failure and mark the dependent
        // identities unevaluated
        std::string detail = validation.failures.empty() ? "" : validation.failures.front();
        add_check("d-squared", false, detail);
        for (const char* name :
             {"bc-schweitzer-identification", "aeppli-schweitzer-identification", "prop-2.4-duality",
              "bc-aeppli-star-duality", "euler-characteristics", "remark-2.7", "h1-bc-constants",
              "bc-betti-high-degrees", "spade-club-vanish", "spade-rank-nullity", "poincare-symmetry"})
            add_check(name, false, "skipped: d^2 != 0");
        return r;
    }

    for (int k = 0; k <= 2 * n; ++k) r.betti.push_back(space_dim(engine.de_rham(k)));
    r.hodge.assign(n + 1, std::vector<int>(n + 1, 0));
    r.bc.assign(n + 1, std::vector<int>(n + 1, 0));
    r.aeppli.assign(n + 1, std::vector<int>(n + 1, 0));
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            r.hodge[p][q] = space_dim(engine.dolbeault(p, q));
            r.bc[p][q] = space_dim(engine.bott_chern(p, q));
            r.aeppli[p][q] = space_dim(engine.aeppli(p, q));
        }
    }
    for (int k = 1; k <= 2 * n; ++k) {
        r.hyper_c1.push_back(space_dim(engine.hyper_truncated(k, 1)));
        r.hyper_bc11.push_back(space_dim(engine.hyper_bc(k, 1, 1)));
    }
    r.spade = spade(engine);
    r.club = club(engine);
    r.delta_bc_dol = delta_bc_dol(engine);
    auto [nk, ddbar] = nk_degrees(engine);
    r.nk_degree = nk;
    r.ddbar_lemma = ddbar;

    r.frolicher_e1 = true;
    for (int k = 0; k <= 2 * n; ++k) {
        int hodge_sum = 0;
        for (int p = std::max(0, k - n); p <= std::min(n, k); ++p) hodge_sum += r.hodge[p][k - p];
        if (hodge_sum != r.betti[static_cast<std::size_t>(k)]) r.frolicher_e1 = false;
    }
    r.hodge_symmetry = true;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            if (r.hodge[p][q] != r.hodge[q][p]) r.hodge_symmetry = false;

    add_check("d-squared", true, "");

    {
        bool ok = true;
        std::string detail;
        for (int p = 0; p <= n && ok; ++p) {
            for (int q = 0; q <= n && ok; ++q) {
                CohomologySpace direct = engine.bott_chern(p, q);
                CohomologySpace via_l = engine.hyper_bc(p + q, p, q);
                bool same = direct.dim() == via_l.dim() &&
                            same_vectors(direct.presentation.cycles, via_l.presentation.cycles) &&
                            same_vectors(direct.presentation.boundaries, via_l.presentation.boundaries);
                if (!same) {
                    ok = false;
                    detail = "mismatch at (" + std::to_string(p) + "," + std::to_string(q) + ")";
                }
            }
        }
        add_check("bc-schweitzer-identification", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (int p = 0; p <= n && ok; ++p) {
            for (int q = 0; q <= n && ok; ++q) {
                CohomologySpace direct = engine.aeppli(p, q);
                CohomologySpace via_l = engine.hyper_bc(p + q + 1, p + 1, q + 1);
                bool same = direct.dim() == via_l.dim() &&
                            same_vectors(direct.presentation.cycles, via_l.presentation.cycles) &&
                            same_vectors(direct.presentation.boundaries, via_l.presentation.boundaries);
                if (!same) {
                    ok = false;
                    detail = "mismatch at (" + std::to_string(p) + "," + std::to_string(q) + ")";
                }
            }
        }
        add_check("aeppli-schweitzer-identification", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (int p = 1; p <= n && ok; ++p) {
            for (int q = 1; q <= n && ok; ++q) {
                for (int k = 1; k <= 2 * n && ok; ++k) {
                    int lhs = space_dim(engine.hyper_bc(k, p, q));
                    int rhs = space_dim(engine.hyper_bc(2 * n + 1 - k, n - p + 1, n - q + 1));
                    if (lhs != rhs) {
                        ok = false;
                        detail = "H^" + std::to_string(k) + "_BC(C(" + std::to_string(p) + "," +
                                 std::to_string(q) + ")) = " + std::to_string(lhs) + " vs dual " +
                                 std::to_string(rhs);
                    }
                }
            }
        }
        add_check("prop-2.4-duality", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (int p = 0; p <= n && ok; ++p) {
            for (int q = 0; q <= n && ok; ++q) {
                if (r.bc[p][q] != r.aeppli[n - p][n - q]) {
                    ok = false;
                    detail = "h_BC(" + std::to_string(p) + "," + std::to_string(q) + ") != h_A(" +
                             std::to_string(n - p) + "," + std::to_string(n - q) + ")";
                }
            }
        }
        add_check("bc-aeppli-star-duality", ok, detail);
    }

    {
        int chi_b11 = alternating_sum(r.hyper_bc11, 1);
        int chi_c1 = alternating_sum(r.hyper_c1, 1);
        int chi_o = 0;
        for (int q = 0; q <= n; ++q) chi_o += (q % 2 ? -1 : 1) * r.hodge[0][q];
        int chi_top = alternating_sum(r.betti, 0);
        bool ok = (chi_b11 == chi_c1 - chi_o) && (chi_b11 == chi_top - 2 * chi_o);
        std::string detail = "chi(B(1,1))=" + std::to_string(chi_b11) + " chi(C(1))=" + std::to_string(chi_c1) +
                             " chi(O)=" + std::to_string(chi_o) + " chi_top=" + std::to_string(chi_top);
        add_check("euler-characteristics", ok, detail);
    }

    {
        // The duality half is an instance of Prop 2.4 and holds for every
        // model.  Agreement with b_1 is a manifold-level statement; invariant
        // models are only guaranteed to see it through the (1,1) window, so it
        // is reported in the detail instead of gating the verdict.
        int lhs = space_dim(engine.hyper_bc(2 * n - 1, n - 1, n - 1));
        int mid = space_dim(engine.hyper_bc(2, 2, 2));
        int b1 = r.betti[1];
        bool ok = lhs == mid;
        std::string detail = std::to_string(lhs) + " = " + std::to_string(mid) +
                             (mid == b1 ? ", equals b1" : ", differs from b1=" + std::to_string(b1) +
                                                              " (invariant-level value)");
        add_check("remark-2.7", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (int p = 1; p <= n && ok; ++p) {
            for (int q = 1; q <= n && ok; ++q) {
                int d = space_dim(engine.hyper_bc(1, p, q));
                if (d != 1) {
                    ok = false;
                    detail = "dim H^1_BC(C(" + std::to_string(p) + "," + std::to_string(q) +
                             ")) = " + std::to_string(d);
                }
            }
        }
        add_check("h1-bc-constants", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (int k = n + 2; k <= 2 * n; ++k) {
            if (r.hyper_bc11[static_cast<std::size_t>(k - 1)] != r.betti[static_cast<std::size_t>(k)] ||
                r.hyper_c1[static_cast<std::size_t>(k - 1)] != r.betti[static_cast<std::size_t>(k)]) {
                ok = false;
                detail = "k=" + std::to_string(k);
            }
        }
        add_check("bc-betti-high-degrees", ok, detail);
    }

    {
        bool ok = true;
        for (int k = n + 2; k <= 2 * n; ++k) {
            if (r.spade[static_cast<std::size_t>(k - 1)] != 0 || r.club[static_cast<std::size_t>(k - 1)] != 0)
                ok = false;
        }
        add_check("spade-club-vanish", ok, ok ? "" : "spade=" + join_ints(r.spade) + " club=" + join_ints(r.club));
    }

    {
        bool ok = true;
        std::string detail;
        for (int k = 1; k <= 2 * n && ok; ++k) {
            MapSummary ms = engine.map_C(k);
            int delta = static_cast<int>(ms.coker_dim - ms.ker_dim);
            if (delta != r.spade[static_cast<std::size_t>(k - 1)]) {
                ok = false;
                detail = "k=" + std::to_string(k);
            }
        }
        add_check("spade-rank-nullity", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (int k = 0; k <= 2 * n; ++k) {
            if (r.betti[static_cast<std::size_t>(k)] != r.betti[static_cast<std::size_t>(2 * n - k)]) {
                ok = false;
                detail = "b_" + std::to_string(k) + " != b_" + std::to_string(2 * n - k);
            }
        }
        add_check("poincare-symmetry", ok, detail);
    }

    return r;
}

}  // namespace bcwb
