// Numerical invariants of a model and the cross-identity consistency report.

#pragma once

#include "bcwb/cohomology.hpp"

namespace bcwb {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct InvariantReport {
    std::string model_name;
    int n = 0;

    std::vector<int> betti;                     // k = 0..2n
    std::vector<std::vector<int>> hodge;        // [p][q], 0..n
    std::vector<std::vector<int>> bc;           // Bott-Chern numbers
    std::vector<std::vector<int>> aeppli;       // Aeppli numbers
    std::vector<int> hyper_c1;                  // dim H^k(C(1)), k = 1..2n
    std::vector<int> hyper_bc11;                // dim H^k_BC(C(1,1)), k = 1..2n
    std::vector<int> spade;                     // k = 1..2n
    std::vector<int> club;                      // k = 1..2n
    std::vector<std::vector<int>> delta_bc_dol; // bc - hodge
    std::vector<int> nk_degree;                 // k = 0..2n

    bool ddbar_lemma = false;
    bool frolicher_e1 = false;
    bool hodge_symmetry = false;
    bool abelian = false;
    bool nilpotent = false;

    std::vector<CheckResult> checks;  // structural identities, fixed order

    bool all_checks_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// spade^k = dim H^k(C(1)) - dim H^k_BC(C(1,1)), k = 1..2n.
std::vector<int> spade(const CohomologyEngine& engine);
// club^k = b_k - dim H^k_BC(C(1,1)), k = 1..2n.
std::vector<int> club(const CohomologyEngine& engine);
// Entrywise h^{p,q}_BC - h^{p,q}_dbar.
std::vector<std::vector<int>> delta_bc_dol(const CohomologyEngine& engine);
// Non-Kahlerness degrees and the ddbar-lemma verdict.
std::pair<std::vector<int>, bool> nk_degrees(const CohomologyEngine& engine);

// Everything above plus the structural identity checks.  Check failures are
// data; nothing here throws on a mathematically inconsistent model.
InvariantReport consistency_report(const CohomologyEngine& engine);

}  // namespace bcwb
