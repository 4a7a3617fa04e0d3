// Dimension-table calculus: Kahler-mode closed forms, the surface formulas,
// and the blow-up / projective-bundle predictors with invariance verdicts.
// Tables are the whole interface; no geometry is ever constructed.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcwb/cohomology.hpp"

namespace bcwb {

struct HodgeDiamond {
    int n = 0;
    std::vector<std::vector<int>> h;  // [p][q], 0..n
};

// A k-indexed dimension table; entries outside the stored window read 0.
struct DimSeries {
    int k_min = 0;
    std::vector<int> dims;

    int at(int k) const {
        int i = k - k_min;
        if (i < 0 || i >= static_cast<int>(dims.size())) return 0;
        return dims[static_cast<std::size_t>(i)];
    }
    friend bool operator==(const DimSeries&, const DimSeries&) = default;
};

struct DimTables {
    std::string name;
    int n = 0;
    bool closed_manifold = true;
    std::string provenance;  // engine | kahler | user | predicted
    DimSeries betti;
    std::map<int, DimSeries> hyper_c;                  // per p
    std::map<std::pair<int, int>, DimSeries> hyper_bc; // per (p,q)
    std::optional<std::vector<std::vector<int>>> hodge;
    std::optional<std::vector<std::vector<int>>> bc;
    std::optional<std::vector<std::vector<int>>> aeppli;

    // spade/club from the (1,1) and p=1 tables, k = 1..2n.
    // Throws MissingTableEntry when those tables are absent.
    std::vector<int> spade() const;
    std::vector<int> club() const;
};

struct SurfaceData {
    int h10 = 0, h01 = 0, h20 = 0;
    int h11_dol = 0, h11_bc = 0;
    int b1 = 0;
    int chi_top = 0, chi_o = 0;
};

// Full tables of a model computed by the engine.
DimTables engine_tables(const CohomologyEngine& engine);

// Tables of the one-point space (the blow-up center of a point).
DimTables point_tables();

// The subset entering the spade/club verdicts: betti, hyper_c for p <= 1 and
// hyper_bc at (1,1) — exactly the tables whose blow-up conventions the
// L(1-i,1-i) = A^*[1] identification pins down.
DimTables invariance_subset(const DimTables& t);

// Kahler closed forms: Betti from the diamond, bc = aeppli = hodge, truncated
// hypercohomology by column sums, and the pluriharmonic table
//   dim H^{k-1}(H) = 1 for k = 1,  b_k - h^{0,k} - h^{k,0} for k >= 2.
// Throws AsymmetricDiamond unless h[p][q] = h[q][p] and h[0][0] = h[n][n] = 1.
DimTables kahler_tables(const HodgeDiamond& diamond);

// The four surface invariants
//   spade^1 = h^{1,0} - 1
//   spade^2 = h^{1,1}_dbar - h^{1,1}_BC + h^{2,0}
//   spade^3 = b_1 - h^{1,1}_BC - 2 chi(O) + chi
//   spade^4 = 0
std::array<int, 4> surface_invariants(const SurfaceData& s);

// Blow-up of X along a codimension-c center Z (tables only):
//   entry_Xtilde[(p,q)][k] = entry_X[(p,q)][k] + sum_{i=1}^{c-1} entry_Z[(p-i,q-i)][k-2i]
// where an entry with p-i <= 0 and q-i <= 0 reads Z's de Rham table, and any
// other missing Z entry raises MissingTableEntry naming the hole.
DimTables blowup_predict(const DimTables& X, const DimTables& Z, int c);

// Projective bundle P(V) for a rank-c bundle over Z: same sums including the
// i = 0 term; the result lives in dimension n_Z + c - 1.
DimTables bundle_predict(const DimTables& Z, int c);

struct InvarianceReport {
    bool pass = false;
    std::vector<int> spade_base, spade_blowup;
    std::vector<int> club_base, club_blowup;
    std::vector<std::string> failures;  // each names the offending table entry
    DimTables predicted;
};

// Predicts the blow-up and asserts spade/club are unchanged componentwise;
// also validates Poincare symmetry of the closed-manifold Betti inputs.
InvarianceReport invariance_check(const DimTables& X, const DimTables& Z, int c);

}  // namespace bcwb
