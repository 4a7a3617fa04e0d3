#include "bcwb/cohomology.hpp"

#include <functional>

namespace bcwb {

std::string SpaceLabel::str() const {
    std::string s = kind;
    if (!indices.empty()) {
        s += "(";
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(indices[i]);
        }
        s += ")";
    }
    return s;
}

namespace {

DegreeBasis single_bidegree_ambient(int n, int p, int q) {
    DegreeBasis basis;
    for (const Monomial& m : bidegree_basis(n, p, q)) basis.push_back(BasisLabel{p, q, m});
    return basis;
}

std::vector<VectorQI> matrix_columns(const MatrixQI& m) {
    std::vector<VectorQI> cols;
    cols.reserve(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return cols;
}

CohomologySpace make_space(SpaceLabel label, int n, DegreeBasis ambient, SubquotientSpace pres) {
    CohomologySpace space;
    space.label = std::move(label);
    space.n = n;
    space.ambient = std::move(ambient);
    space.presentation = std::move(pres);
    for (const VectorQI& rep : space.presentation.reps)
        space.generators.push_back(label_form(n, space.ambient, rep));
    return space;
}

MapSummary summarize(std::string name, CohomologySpace src, CohomologySpace dst, const MatrixQI& F) {
    InducedMap ind = induced_map(F, src.presentation, dst.presentation);
    MapSummary ms;
    ms.name = std::move(name);
    ms.matrix = ind.matrix;
    ms.rank = ind.rank;
    ms.ker_dim = ind.kernel_dim();
    ms.coker_dim = ind.cokernel_dim();
    for (const VectorQI& v : ind.kernel_vectors) ms.ker_generators.push_back(label_form(src.n, src.ambient, v));
    for (const VectorQI& v : ind.cokernel_vectors)
        ms.coker_generators.push_back(label_form(dst.n, dst.ambient, v));
    ms.src = std::move(src);
    ms.dst = std::move(dst);
    return ms;
}

}  // namespace

std::shared_ptr<const ChainComplex> CohomologyEngine::cached_complex(
    const std::string& key, const std::function<ChainComplex()>& make) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = complex_cache_.find(key);
        if (it != complex_cache_.end()) return it->second;
    }
    auto built = std::make_shared<const ChainComplex>(make());
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = complex_cache_.emplace(key, built);
    return it->second;
}

CohomologySpace CohomologyEngine::cached_space(const std::string& key,
                                               const std::function<CohomologySpace()>& make) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = space_cache_.find(key);
        if (it != space_cache_.end()) return *it->second;
    }
    auto built = std::make_shared<const CohomologySpace>(make());
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = space_cache_.emplace(key, built);
    return *it->second;
}

std::shared_ptr<const ChainComplex> CohomologyEngine::dolbeault_row(int p) const {
    return cached_complex("dolbeault_row:" + std::to_string(p),
                          [&] { return build_dolbeault_row(model_, p); });
}

std::shared_ptr<const ChainComplex> CohomologyEngine::del_column(int q) const {
    return cached_complex("del_column:" + std::to_string(q), [&] { return build_del_column(model_, q); });
}

std::shared_ptr<const ChainComplex> CohomologyEngine::schweitzer(int p, int q) const {
    return cached_complex("L:" + std::to_string(p) + "," + std::to_string(q),
                          [&] { return build_L(model_, p, q); });
}

std::shared_ptr<const ChainComplex> CohomologyEngine::truncated(int smin, int smax) const {
    return cached_complex("T:" + std::to_string(smin) + "," + std::to_string(smax),
                          [&] { return build_truncated_total(model_, smin, smax); });
}

CohomologySpace CohomologyEngine::complex_cohomology(const ChainComplex& c, int d, SpaceLabel label) const {
    if (!c.in_range(d)) {
        CohomologySpace zero;
        zero.label = std::move(label);
        zero.n = model_.n;
        zero.presentation.ambient_dim = 0;
        return zero;
    }
    std::vector<VectorQI> Z = kernel_basis(c.diff(d));
    std::vector<VectorQI> B = matrix_columns(c.diff(d - 1));
    SubquotientSpace pres = subquotient(Z, B, c.dim(d));
    return make_space(std::move(label), model_.n, c.basis(d), std::move(pres));
}

CohomologySpace CohomologyEngine::de_rham(int k) const { return hyper_truncated(k, 0); }

CohomologySpace CohomologyEngine::dolbeault(int p, int q) const {
    if (p < 0 || q < 0 || p > n() || q > n())
        throw Error(ErrorKind::RangeError, "dolbeault: bidegree outside 0..n");
    return cached_space("dol:" + std::to_string(p) + "," + std::to_string(q), [&] {
        return complex_cohomology(*dolbeault_row(p), q, SpaceLabel{"dolbeault", {p, q}});
    });
}

CohomologySpace CohomologyEngine::del_cohomology(int p, int q) const {
    if (p < 0 || q < 0 || p > n() || q > n())
        throw Error(ErrorKind::RangeError, "del_cohomology: bidegree outside 0..n");
    return cached_space("del:" + std::to_string(p) + "," + std::to_string(q), [&] {
        return complex_cohomology(*del_column(q), p, SpaceLabel{"del", {p, q}});
    });
}

CohomologySpace CohomologyEngine::bott_chern(int p, int q) const {
    if (p < 0 || q < 0 || p > n() || q > n())
        throw Error(ErrorKind::RangeError, "bott_chern: bidegree outside 0..n");
    return cached_space("bc:" + std::to_string(p) + "," + std::to_string(q), [&] {
        DifferentialPair here = differential_matrices(model_, p, q);
        MatrixQI stacked(here.del.rows() + here.delbar.rows(), here.del.cols());
        stacked.topRows(here.del.rows()) = here.del;
        stacked.bottomRows(here.delbar.rows()) = here.delbar;
        std::vector<VectorQI> Z = kernel_basis(stacked);

        std::vector<VectorQI> B;
        if (p >= 1 && q >= 1) {
            DifferentialPair below = differential_matrices(model_, p - 1, q - 1);
            DifferentialPair mid = differential_matrices(model_, p - 1, q);
            MatrixQI deldelbar = mid.del * below.delbar;
            B = matrix_columns(deldelbar);
        }
        SubquotientSpace pres = subquotient(Z, B, static_cast<Eigen::Index>(bidegree_basis(n(), p, q).size()));
        return make_space(SpaceLabel{"bott_chern", {p, q}}, n(), single_bidegree_ambient(n(), p, q),
                          std::move(pres));
    });
}

CohomologySpace CohomologyEngine::aeppli(int p, int q) const {
    if (p < 0 || q < 0 || p > n() || q > n())
        throw Error(ErrorKind::RangeError, "aeppli: bidegree outside 0..n");
    return cached_space("aeppli:" + std::to_string(p) + "," + std::to_string(q), [&] {
        Eigen::Index dim_here = static_cast<Eigen::Index>(bidegree_basis(n(), p, q).size());
        MatrixQI deldelbar = MatrixQI::Constant(0, dim_here, GaussianRational(0));
        if (q < n()) {
            DifferentialPair here = differential_matrices(model_, p, q);
            DifferentialPair up = differential_matrices(model_, p, q + 1);
            deldelbar = up.del * here.delbar;
        }
        std::vector<VectorQI> Z = kernel_basis(deldelbar);

        std::vector<VectorQI> B;
        if (p >= 1) {
            DifferentialPair left = differential_matrices(model_, p - 1, q);
            for (VectorQI& v : matrix_columns(left.del)) B.push_back(std::move(v));
        }
        if (q >= 1) {
            DifferentialPair downward = differential_matrices(model_, p, q - 1);
            for (VectorQI& v : matrix_columns(downward.delbar)) B.push_back(std::move(v));
        }
        SubquotientSpace pres = subquotient(Z, B, static_cast<Eigen::Index>(bidegree_basis(n(), p, q).size()));
        return make_space(SpaceLabel{"aeppli", {p, q}}, n(), single_bidegree_ambient(n(), p, q),
                          std::move(pres));
    });
}

CohomologySpace CohomologyEngine::hyper_bc(int k, int p, int q) const {
    return cached_space("hbc:" + std::to_string(k) + ":" + std::to_string(p) + "," + std::to_string(q), [&] {
        return complex_cohomology(*schweitzer(p, q), k - 1, SpaceLabel{"hyper_bc", {k, p, q}});
    });
}

CohomologySpace CohomologyEngine::hyper_truncated(int k, int p) const {
    if (p < 0 || p > n()) throw Error(ErrorKind::RangeError, "hyper_truncated: p outside 0..n");
    return cached_space("htr:" + std::to_string(k) + ":" + std::to_string(p), [&] {
        return complex_cohomology(*truncated(p, n()), k, SpaceLabel{"hyper_truncated", {k, p}});
    });
}

MapSummary CohomologyEngine::map_I(int p, int q) const {
    CohomologySpace src = bott_chern(p, q);
    CohomologySpace dst = dolbeault(p, q);
    Eigen::Index dim = src.presentation.ambient_dim;
    MatrixQI identity = MatrixQI::Identity(dim, dim);
    return summarize("I(" + std::to_string(p) + "," + std::to_string(q) + ")", std::move(src),
                     std::move(dst), identity);
}

MapSummary CohomologyEngine::map_C(int k) const {
    if (k < 1) throw Error(ErrorKind::RangeError, "map_C: k must be >= 1");
    ChainMap cm = chain_map_C(model_);
    CohomologySpace src = hyper_bc(k, 1, 1);
    CohomologySpace dst = hyper_truncated(k, 1);
    return summarize("C(" + std::to_string(k) + ")", std::move(src), std::move(dst), cm.component(k - 1));
}

bool is_class_of(const CohomologySpace& space, const Form& f) {
    VectorQI v = form_coordinates(f, space.ambient);
    return space.presentation.cycle_space().contains(v);
}

bool classes_span(const CohomologySpace& space, const std::vector<Form>& forms) {
    if (static_cast<Eigen::Index>(forms.size()) != space.dim()) return false;
    std::vector<VectorQI> vectors = space.presentation.boundaries;
    Eigen::Index base_rank = static_cast<Eigen::Index>(vectors.size());
    for (const Form& f : forms) {
        if (!is_class_of(space, f)) return false;
        vectors.push_back(form_coordinates(f, space.ambient));
    }
    RowSpace joint = row_space(vectors, space.presentation.ambient_dim);
    return joint.dim() == base_rank + static_cast<Eigen::Index>(forms.size());
}

bool kernel_span_matches(const MapSummary& ms, const std::vector<Form>& forms) {
    if (static_cast<Eigen::Index>(forms.size()) != ms.ker_dim) return false;
    std::vector<VectorQI> classes;
    for (const Form& f : forms) {
        if (!is_class_of(ms.src, f)) return false;
        VectorQI c = ms.src.presentation.class_coordinates(form_coordinates(f, ms.src.ambient));
        VectorQI image = ms.matrix * c;
        for (Eigen::Index i = 0; i < image.size(); ++i)
            if (!image(i).is_zero()) return false;
        classes.push_back(std::move(c));
    }
    RowSpace span = row_space(classes, ms.src.dim());
    return span.dim() == static_cast<Eigen::Index>(forms.size());
}

bool cokernel_span_matches(const MapSummary& ms, const std::vector<Form>& forms) {
    if (static_cast<Eigen::Index>(forms.size()) != ms.coker_dim) return false;
    std::vector<VectorQI> classes = matrix_columns(ms.matrix);
    for (const Form& f : forms) {
        if (!is_class_of(ms.dst, f)) return false;
        classes.push_back(ms.dst.presentation.class_coordinates(form_coordinates(f, ms.dst.ambient)));
    }
    RowSpace span = row_space(classes, ms.dst.dim());
    return span.dim() == ms.dst.dim();
}

}  // namespace bcwb
