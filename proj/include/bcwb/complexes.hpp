// Chain complexes assembled from a Lie model: Dolbeault rows, the Schweitzer
// complexes L^*(p,q), truncated de Rham total complexes, and the comparison
// chain map feeding the invariants.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bcwb/model.hpp"

namespace bcwb {

struct BasisLabel {
    int s = 0;
    int t = 0;
    Monomial monomial;

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

// Basis order within a degree: descending s, then colex index sets.
bool operator<(const BasisLabel& a, const BasisLabel& b);

using DegreeBasis = std::vector<BasisLabel>;

// A cochain complex over a contiguous degree range with labelled monomial
// bases.  diff(d) maps degree d to degree d+1; d_squared is verified exactly
// at construction time.
class ChainComplex {
  public:
    ChainComplex(std::string name, int degree_min, std::vector<DegreeBasis> bases,
                 std::vector<MatrixQI> diffs);

    const std::string& name() const { return name_; }
    int degree_min() const { return degree_min_; }
    int degree_max() const { return degree_min_ + static_cast<int>(bases_.size()) - 1; }
    bool in_range(int d) const { return d >= degree_min() && d <= degree_max(); }

    Eigen::Index dim(int d) const;
    const DegreeBasis& basis(int d) const;
    // Matrix of the differential out of degree d (zero-shaped off either end).
    MatrixQI diff(int d) const;

  private:
    std::string name_;
    int degree_min_ = 0;
    std::vector<DegreeBasis> bases_;
    std::vector<MatrixQI> diffs_;  // diffs_[i]: degree_min+i -> degree_min+i+1
};

// A degree-shifting chain map; strict commutation with the differentials is
// verified exactly at construction time.
class ChainMap {
  public:
    ChainMap(std::shared_ptr<const ChainComplex> src, std::shared_ptr<const ChainComplex> dst, int shift,
             std::vector<MatrixQI> components);

    const ChainComplex& src() const { return *src_; }
    const ChainComplex& dst() const { return *dst_; }
    int shift() const { return shift_; }
    // Component src_d -> dst_{d+shift}.
    MatrixQI component(int d) const;

  private:
    std::shared_ptr<const ChainComplex> src_;
    std::shared_ptr<const ChainComplex> dst_;
    int shift_ = 0;
    std::vector<MatrixQI> components_;  // aligned with src degrees
};

Form label_form(int n, const DegreeBasis& basis, const VectorQI& coords);
VectorQI form_coordinates(const Form& f, const DegreeBasis& basis);

// Dolbeault row A^{p,0} -> A^{p,1} -> ... -> A^{p,n} with delbar; the degree
// index is t.
ChainComplex build_dolbeault_row(const LieModel& m, int p);

// Row complex in del with fixed antiholomorphic degree q; the degree index
// is s.  Computes the del-cohomology groups H^{s,q}_del.
ChainComplex build_del_column(const LieModel& m, int q);

// The Schweitzer complex L^*(p,q):
//   degree l <= k-2: direct sum of A^{s,t}, s+t = l, s < p, t < q, with the
//     projected de Rham differential (the hinge degree k-2 maps by del*delbar);
//   degree l >= k-1: direct sum of A^{s,t}, s+t = l+1, s >= p, t >= q, with d;
// where k = p+q.  p, q <= 0 are admitted literally, which realizes
// L(1-i,1-i) = A^*[1] for i >= 1.
ChainComplex build_L(const LieModel& m, int p, int q);

// Total complex of the columns smin <= s <= smax in natural grading
// (degree = s+t), differential = projection of d onto the retained window.
ChainComplex build_truncated_total(const LieModel& m, int smin, int smax);

// The comparison map L^*(1,1) -> truncated(1,n) of shift +1: degree 0 goes by
// -del, higher degrees by inclusion.  The degree-0 sign makes every square
// commute strictly, since d(del f) = -del(delbar f) on functions.
ChainMap chain_map_C(const LieModel& m);

}  // namespace bcwb
