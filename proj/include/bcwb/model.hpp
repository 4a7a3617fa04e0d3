// Lie models: complex dimension n plus the structure forms d(w^k), from which
// the whole invariant Dolbeault double complex is generated.

#pragma once

#include <string>
#include <vector>

#include "bcwb/exterior.hpp"
#include "bcwb/linalg.hpp"

namespace bcwb {

struct LieModel {
    std::string name;
    int n = 0;
    // d of w^k at index k-1; components only in bidegrees (2,0) and (1,1).
    // d of the conjugate generators is never stored: it is conjugate(d w^k).
    std::vector<Form> structure;

    const Form& d_holo(int k) const { return structure[static_cast<std::size_t>(k - 1)]; }
    Form d_generator(const Generator& g) const;

    // Graded Leibniz extension of the structure equations.
    Form d(const Form& f) const;
    Form del(const Form& f, int s, int t) const { return d(f).component(s + 1, t); }
    Form delbar(const Form& f, int s, int t) const { return d(f).component(s, t + 1); }

    bool is_abelian() const;
};

struct DifferentialPair {
    MatrixQI del;     // A^{s,t} -> A^{s+1,t}
    MatrixQI delbar;  // A^{s,t} -> A^{s,t+1}
};

// Matrices of del and delbar on A^{s,t} in canonical monomial bases.
// Throws RangeError when (s,t) is outside 0..n.
DifferentialPair differential_matrices(const LieModel& m, int s, int t);

struct ValidationReport {
    bool d_squared_ok = true;
    std::vector<std::string> failures;  // offending identity + monomial
    bool abelian = false;
    bool nilpotent = false;  // informational: Lemma 5.1-type hypotheses need it

    bool ok() const { return d_squared_ok; }
};

// Checks del^2 = 0, delbar^2 = 0 and del delbar + delbar del = 0 on every
// bidegree, and flags abelian/nilpotent status.  Failures are report entries,
// never exceptions.
ValidationReport validate_model(const LieModel& m);

}  // namespace bcwb
