// Cohomology of the model complexes with representative generators, the
// classical groups (de Rham, Dolbeault, del, Bott-Chern, Aeppli), the
// hypercohomologies, and the natural comparison maps.

#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "bcwb/complexes.hpp"

namespace bcwb {

struct SpaceLabel {
    std::string kind;  // "de_rham", "dolbeault", "del", "bott_chern", "aeppli",
                       // "hyper_bc", "hyper_truncated", "complex_degree"
    std::vector<int> indices;

    std::string str() const;
};

struct CohomologySpace {
    SpaceLabel label;
    int n = 0;
    DegreeBasis ambient;
    SubquotientSpace presentation;
    std::vector<Form> generators;

    Eigen::Index dim() const { return presentation.dim(); }
};

struct MapSummary {
    std::string name;
    CohomologySpace src;
    CohomologySpace dst;
    MatrixQI matrix;  // dst reps x src reps
    Eigen::Index rank = 0;
    Eigen::Index ker_dim = 0;
    Eigen::Index coker_dim = 0;
    std::vector<Form> ker_generators;
    std::vector<Form> coker_generators;
};

// Memoized, thread-safe front end over one model.  All results are pure
// functions of the model, so concurrent evaluation order cannot change them.
class CohomologyEngine {
  public:
    explicit CohomologyEngine(LieModel model) : model_(std::move(model)) {}

    const LieModel& model() const { return model_; }
    int n() const { return model_.n; }

    std::shared_ptr<const ChainComplex> dolbeault_row(int p) const;
    std::shared_ptr<const ChainComplex> del_column(int q) const;
    std::shared_ptr<const ChainComplex> schweitzer(int p, int q) const;
    std::shared_ptr<const ChainComplex> truncated(int smin, int smax) const;

    // ker(diff_d)/im(diff_{d-1}); degrees outside the range give a zero space.
    CohomologySpace complex_cohomology(const ChainComplex& c, int d, SpaceLabel label) const;

    CohomologySpace de_rham(int k) const;
    CohomologySpace dolbeault(int p, int q) const;
    CohomologySpace del_cohomology(int p, int q) const;

    // (ker del & ker delbar)/im del delbar on A^{p,q}, computed directly.
    CohomologySpace bott_chern(int p, int q) const;
    // ker del delbar/(im del + im delbar) on A^{p,q}, computed directly.
    CohomologySpace aeppli(int p, int q) const;

    // H^k_BC(C(p,q)) = H^{k-1} of the Schweitzer complex.
    CohomologySpace hyper_bc(int k, int p, int q) const;
    // H^k(C(p)) in natural grading: degree-k cohomology of truncated(p, n).
    CohomologySpace hyper_truncated(int k, int p) const;

    // [a]_BC -> [a]_dbar on A^{p,q}.
    MapSummary map_I(int p, int q) const;
    // The comparison map on H^{k-1}(L(1,1)) -> H^k(truncated(1,n)).
    MapSummary map_C(int k) const;

  private:
    CohomologySpace cached_space(const std::string& key, const std::function<CohomologySpace()>& make) const;
    std::shared_ptr<const ChainComplex> cached_complex(const std::string& key,
                                                       const std::function<ChainComplex()>& make) const;

    LieModel model_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, std::shared_ptr<const CohomologySpace>> space_cache_;
    mutable std::map<std::string, std::shared_ptr<const ChainComplex>> complex_cache_;
};

// A cycle of the presenting complex, i.e. a class of the space.
bool is_class_of(const CohomologySpace& space, const Form& f);

// The classes of the given forms are a basis of the space.
bool classes_span(const CohomologySpace& space, const std::vector<Form>& forms);

// The classes of the given forms are a basis of ker / complete the image to
// the whole target (i.e. present coker) of the summarized map.
bool kernel_span_matches(const MapSummary& ms, const std::vector<Form>& forms);
bool cokernel_span_matches(const MapSummary& ms, const std::vector<Form>& forms);

}  // namespace bcwb
