#include "bcwb/complexes.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace bcwb {

namespace {

bool matrix_is_zero(const MatrixQI& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

std::map<BasisLabel, Eigen::Index> index_map(const DegreeBasis& basis) {
    std::map<BasisLabel, Eigen::Index> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<Eigen::Index>(i);
    return idx;
}

}  // namespace

bool operator<(const BasisLabel& a, const BasisLabel& b) {
    if (a.s != b.s) return a.s > b.s;
    if (a.t != b.t) return a.t < b.t;
    if (a.monomial.holo != b.monomial.holo) return a.monomial.holo < b.monomial.holo;
    return a.monomial.anti < b.monomial.anti;
}

ChainComplex::ChainComplex(std::string name, int degree_min, std::vector<DegreeBasis> bases,
                           std::vector<MatrixQI> diffs)
    : name_(std::move(name)), degree_min_(degree_min), bases_(std::move(bases)), diffs_(std::move(diffs)) {
    if (diffs_.size() + 1 != bases_.size())
        throw Error(ErrorKind::DimensionMismatch, name_ + ": need one differential per adjacent pair");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].cols() != static_cast<Eigen::Index>(bases_[i].size()) ||
            diffs_[i].rows() != static_cast<Eigen::Index>(bases_[i + 1].size()))
            throw Error(ErrorKind::DimensionMismatch, name_ + ": differential shape mismatch");
    }
    for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
        if (!matrix_is_zero(diffs_[i + 1] * diffs_[i]))
            throw Error(ErrorKind::DimensionMismatch,
                        name_ + ": d^2 != 0 between degrees " + std::to_string(degree_min_ + (int)i) +
                            " and " + std::to_string(degree_min_ + (int)i + 2));
    }
}

Eigen::Index ChainComplex::dim(int d) const {
    if (!in_range(d)) return 0;
    return static_cast<Eigen::Index>(bases_[static_cast<std::size_t>(d - degree_min_)].size());
}

const DegreeBasis& ChainComplex::basis(int d) const {
    static const DegreeBasis empty;
    if (!in_range(d)) return empty;
    return bases_[static_cast<std::size_t>(d - degree_min_)];
}

MatrixQI ChainComplex::diff(int d) const {
    if (in_range(d) && d < degree_max()) return diffs_[static_cast<std::size_t>(d - degree_min_)];
    return MatrixQI::Constant(dim(d + 1), dim(d), GaussianRational(0));
}

ChainMap::ChainMap(std::shared_ptr<const ChainComplex> src, std::shared_ptr<const ChainComplex> dst,
                   int shift, std::vector<MatrixQI> components)
    : src_(std::move(src)), dst_(std::move(dst)), shift_(shift), components_(std::move(components)) {
    if (components_.size() != static_cast<std::size_t>(src_->degree_max() - src_->degree_min() + 1))
        throw Error(ErrorKind::DimensionMismatch, "chain map: need one component per source degree");
    for (int d = src_->degree_min(); d <= src_->degree_max(); ++d) {
        const MatrixQI& comp = components_[static_cast<std::size_t>(d - src_->degree_min())];
        if (comp.cols() != src_->dim(d) || comp.rows() != dst_->dim(d + shift_))
            throw Error(ErrorKind::DimensionMismatch, "chain map: component shape mismatch");
    }
    for (int d = src_->degree_min() - 1; d <= src_->degree_max(); ++d) {
        MatrixQI lhs = dst_->diff(d + shift_) * component(d);
        MatrixQI rhs = component(d + 1) * src_->diff(d);
        if (!matrix_is_zero(lhs - rhs))
            throw Error(ErrorKind::NotAChainMap,
                        "chain map does not commute with the differentials at degree " + std::to_string(d));
    }
}

MatrixQI ChainMap::component(int d) const {
    if (d >= src_->degree_min() && d <= src_->degree_max())
        return components_[static_cast<std::size_t>(d - src_->degree_min())];
    return MatrixQI::Constant(dst_->dim(d + shift_), src_->dim(d), GaussianRational(0));
}

Form label_form(int n, const DegreeBasis& basis, const VectorQI& coords) {
    if (coords.size() != static_cast<Eigen::Index>(basis.size()))
        throw Error(ErrorKind::DimensionMismatch, "label_form: coordinate length mismatch");
    Form f(n);
    for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i].monomial, coords(static_cast<Eigen::Index>(i)));
    return f;
}

VectorQI form_coordinates(const Form& f, const DegreeBasis& basis) {
    std::map<Monomial, Eigen::Index> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i].monomial] = static_cast<Eigen::Index>(i);
    VectorQI v = VectorQI::Constant(static_cast<Eigen::Index>(basis.size()), GaussianRational(0));
    for (const auto& [mono, c] : f.terms()) {
        auto it = idx.find(mono);
        if (it == idx.end())
            throw Error(ErrorKind::DimensionMismatch,
                        "form_coordinates: monomial " + to_dsl_string(mono) + " outside the ambient basis");
        v(it->second) = c;
    }
    return v;
}

namespace {

// Direct sum of bidegree bases, summands ordered by descending s.
DegreeBasis assemble_basis(int n, std::vector<std::pair<int, int>> bidegrees) {
    std::sort(bidegrees.begin(), bidegrees.end(),
              [](auto a, auto b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    DegreeBasis basis;
    for (auto [s, t] : bidegrees)
        for (const Monomial& m : bidegree_basis(n, s, t)) basis.push_back(BasisLabel{s, t, m});
    return basis;
}

// Matrix of an operator sending each source label to a form, projected onto
// the target basis (terms outside the target window are dropped).
MatrixQI operator_matrix(const LieModel& model, const DegreeBasis& src, const DegreeBasis& dst,
                         const std::function<Form(const Form&)>& op) {
    std::map<BasisLabel, Eigen::Index> dst_idx = index_map(dst);
    MatrixQI m = MatrixQI::Constant(static_cast<Eigen::Index>(dst.size()),
                                    static_cast<Eigen::Index>(src.size()), GaussianRational(0));
    for (std::size_t j = 0; j < src.size(); ++j) {
        Form image = op(Form(model.n, src[j].monomial));
        for (const auto& [mono, c] : image.terms()) {
            BasisLabel lbl{mono.s(), mono.t(), mono};
            auto it = dst_idx.find(lbl);
            if (it != dst_idx.end()) m(it->second, static_cast<Eigen::Index>(j)) = c;
        }
    }
    return m;
}

}  // namespace

ChainComplex build_dolbeault_row(const LieModel& m, int p) {
    if (p < 0 || p > m.n) throw Error(ErrorKind::RangeError, "build_dolbeault_row: p outside 0..n");
    std::vector<DegreeBasis> bases;
    for (int t = 0; t <= m.n; ++t) bases.push_back(assemble_basis(m.n, {{p, t}}));
    std::vector<MatrixQI> diffs;
    for (int t = 0; t < m.n; ++t)
        diffs.push_back(operator_matrix(m, bases[static_cast<std::size_t>(t)],
                                        bases[static_cast<std::size_t>(t) + 1],
                                        [&m](const Form& f) { return m.d(f); }));
    return ChainComplex("dolbeault(" + std::to_string(p) + ",*)", 0, std::move(bases), std::move(diffs));
}

ChainComplex build_del_column(const LieModel& m, int q) {
    if (q < 0 || q > m.n) throw Error(ErrorKind::RangeError, "build_del_column: q outside 0..n");
    std::vector<DegreeBasis> bases;
    for (int s = 0; s <= m.n; ++s) bases.push_back(assemble_basis(m.n, {{s, q}}));
    std::vector<MatrixQI> diffs;
    for (int s = 0; s < m.n; ++s)
        diffs.push_back(operator_matrix(m, bases[static_cast<std::size_t>(s)],
                                        bases[static_cast<std::size_t>(s) + 1],
                                        [&m](const Form& f) { return m.d(f); }));
    return ChainComplex("del(*," + std::to_string(q) + ")", 0, std::move(bases), std::move(diffs));
}

ChainComplex build_L(const LieModel& m, int p, int q) {
    // p = n+1 or q = n+1 still makes sense (empty upper regime; the top hinge
    // presents an Aeppli group); anything above that is a caller error.
    if (p > m.n + 1 || q > m.n + 1) throw Error(ErrorKind::RangeError, "build_L: p or q above n+1");
    const int n = m.n;
    const int k = p + q;

    auto lower_basis = [&](int l) {
        std::vector<std::pair<int, int>> bd;
        for (int s = 0; s <= std::min(p - 1, n); ++s) {
            int t = l - s;
            if (t >= 0 && t <= std::min(q - 1, n)) bd.push_back({s, t});
        }
        return assemble_basis(n, bd);
    };
    auto upper_basis = [&](int l) {
        std::vector<std::pair<int, int>> bd;
        for (int s = std::max(p, 0); s <= n; ++s) {
            int t = l + 1 - s;
            if (t >= std::max(q, 0) && t <= n) bd.push_back({s, t});
        }
        return assemble_basis(n, bd);
    };

    int lo = std::min(0, k - 1);
    int hi = std::max(2 * n - 1, k - 2);
    std::vector<DegreeBasis> bases;
    for (int l = lo; l <= hi; ++l) bases.push_back(l <= k - 2 ? lower_basis(l) : upper_basis(l));

    // trim empty degrees off both ends
    while (bases.size() > 1 && bases.front().empty()) {
        bases.erase(bases.begin());
        ++lo;
    }
    while (bases.size() > 1 && bases.back().empty()) {
        bases.pop_back();
        --hi;
    }

    std::vector<MatrixQI> diffs;
    for (int l = lo; l < lo + static_cast<int>(bases.size()) - 1; ++l) {
        const DegreeBasis& src = bases[static_cast<std::size_t>(l - lo)];
        const DegreeBasis& dst = bases[static_cast<std::size_t>(l - lo) + 1];
        // hinge degree maps by del(delbar(.)); everywhere else projected d
        std::function<Form(const Form&)> op = [&m](const Form& f) { return m.d(f); };
        if (l == k - 2) {
            op = [&m](const Form& f) {
                Form out(m.n);
                for (const auto& [mono, c] : f.terms()) {
                    Form db = m.d(Form(m.n, mono)).component(mono.s(), mono.t() + 1);
                    out += c * m.d(db).component(mono.s() + 1, mono.t() + 1);
                }
                return out;
            };
        }
        diffs.push_back(operator_matrix(m, src, dst, op));
    }
    return ChainComplex("L(" + std::to_string(p) + "," + std::to_string(q) + ")", lo, std::move(bases),
                        std::move(diffs));
}

ChainComplex build_truncated_total(const LieModel& m, int smin, int smax) {
    if (smin < 0 || smax < smin || smax > m.n)
        throw Error(ErrorKind::RangeError, "build_truncated_total: need 0 <= smin <= smax <= n");
    const int n = m.n;
    std::vector<DegreeBasis> bases;
    for (int deg = smin; deg <= smax + n; ++deg) {
        std::vector<std::pair<int, int>> bd;
        for (int s = smin; s <= smax; ++s) {
            int t = deg - s;
            if (t >= 0 && t <= n) bd.push_back({s, t});
        }
        bases.push_back(assemble_basis(n, bd));
    }
    std::vector<MatrixQI> diffs;
    for (std::size_t i = 0; i + 1 < bases.size(); ++i)
        diffs.push_back(operator_matrix(m, bases[i], bases[i + 1], [&m](const Form& f) { return m.d(f); }));
    return ChainComplex("truncated(" + std::to_string(smin) + ".." + std::to_string(smax) + ")", smin,
                        std::move(bases), std::move(diffs));
}

ChainMap chain_map_C(const LieModel& m) {
    auto src = std::make_shared<const ChainComplex>(build_L(m, 1, 1));
    auto dst = std::make_shared<const ChainComplex>(build_truncated_total(m, 1, m.n));
    std::vector<MatrixQI> comps;
    for (int d = src->degree_min(); d <= src->degree_max(); ++d) {
        if (d == 0) {
            comps.push_back(operator_matrix(m, src->basis(0), dst->basis(1), [&m](const Form& f) {
                Form df = m.d(f);
                Form out(m.n);
                for (const auto& [mono, c] : df.terms())
                    if (mono.s() == 1 && mono.t() == 0) out.add_term(mono, -c);
                return out;
            }));
        } else {
            comps.push_back(operator_matrix(m, src->basis(d), dst->basis(d + 1),
                                            [](const Form& f) { return f; }));
        }
    }
    return ChainMap(src, dst, +1, std::move(comps));
}

}  // namespace bcwb
