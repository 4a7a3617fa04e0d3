#include "bcwb/linalg.hpp"

#include <string>

namespace bcwb {

RowSpace row_space(const std::vector<VectorQI>& vectors, Eigen::Index ambient_dim) {
    MatrixQI m(static_cast<Eigen::Index>(vectors.size()), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient_dim)
            throw Error(ErrorKind::DimensionMismatch, "row_space: vector length mismatch");
        m.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
    }
    RowSpace space;
    space.pivots = rref_in_place(m);
    space.rows = m.topRows(static_cast<Eigen::Index>(space.pivots.size()));
    return space;
}

MatrixQI matrix_from_columns(const std::vector<VectorQI>& columns, Eigen::Index ambient_dim) {
    MatrixQI m(ambient_dim, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != ambient_dim)
            throw Error(ErrorKind::DimensionMismatch, "matrix_from_columns: vector length mismatch");
        m.col(static_cast<Eigen::Index>(j)) = columns[j];
    }
    return m;
}

std::optional<VectorQI> solve_in_span(const MatrixQI& columns, const VectorQI& b) {
    if (b.size() != columns.rows())
        throw Error(ErrorKind::DimensionMismatch, "solve_in_span: size mismatch");
    MatrixQI aug(columns.rows(), columns.cols() + 1);
    aug.leftCols(columns.cols()) = columns;
    aug.col(columns.cols()) = b;
    std::vector<Eigen::Index> pivots = rref_in_place(aug);
    VectorQI x = VectorQI::Constant(columns.cols(), GaussianRational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == columns.cols()) return std::nullopt;  // inconsistent system
        x(pivots[i]) = aug(static_cast<Eigen::Index>(i), columns.cols());
    }
    return x;
}

RowSpace SubquotientSpace::cycle_space() const {
    RowSpace s;
    s.pivots = cycle_pivots;
    s.rows = MatrixQI(static_cast<Eigen::Index>(cycles.size()), ambient_dim);
    for (std::size_t i = 0; i < cycles.size(); ++i) s.rows.row(static_cast<Eigen::Index>(i)) = cycles[i].transpose();
    return s;
}

RowSpace SubquotientSpace::boundary_space() const {
    RowSpace s;
    s.pivots = boundary_pivots;
    s.rows = MatrixQI(static_cast<Eigen::Index>(boundaries.size()), ambient_dim);
    for (std::size_t i = 0; i < boundaries.size(); ++i)
        s.rows.row(static_cast<Eigen::Index>(i)) = boundaries[i].transpose();
    return s;
}

VectorQI SubquotientSpace::class_coordinates(const VectorQI& v) const {
    std::vector<VectorQI> cols = reps;
    cols.insert(cols.end(), boundaries.begin(), boundaries.end());
    std::optional<VectorQI> sol = solve_in_span(matrix_from_columns(cols, ambient_dim), v);
    if (!sol) throw Error(ErrorKind::ContainmentViolation, "class_coordinates: vector is not a cycle");
    return sol->head(dim());
}

SubquotientSpace subquotient(const std::vector<VectorQI>& Z, const std::vector<VectorQI>& B,
                             Eigen::Index ambient_dim) {
    RowSpace rz = row_space(Z, ambient_dim);
    RowSpace rb = row_space(B, ambient_dim);
    for (Eigen::Index i = 0; i < rb.rows.rows(); ++i) {
        if (!rz.contains(rb.rows.row(i).transpose()))
            throw Error(ErrorKind::ContainmentViolation,
                        "subquotient: boundary vector " + std::to_string(i) + " is not a cycle");
    }

    SubquotientSpace s;
    s.ambient_dim = ambient_dim;
    s.cycle_pivots = rz.pivots;
    s.boundary_pivots = rb.pivots;
    for (Eigen::Index i = 0; i < rz.rows.rows(); ++i) s.cycles.push_back(rz.rows.row(i).transpose());
    for (Eigen::Index i = 0; i < rb.rows.rows(); ++i) s.boundaries.push_back(rb.rows.row(i).transpose());

    // Echelon rows of Z whose pivot is not a pivot of B represent a basis of
    // Z/B: such a row vanishes on every B-pivot column, and an element of
    // span(B) is determined by its B-pivot coordinates.
    std::vector<bool> is_b_pivot;
    for (Eigen::Index p : rb.pivots) {
        if (static_cast<std::size_t>(p) >= is_b_pivot.size()) is_b_pivot.resize(p + 1, false);
        is_b_pivot[p] = true;
    }
    for (std::size_t i = 0; i < rz.pivots.size(); ++i) {
        Eigen::Index p = rz.pivots[i];
        bool taken = static_cast<std::size_t>(p) < is_b_pivot.size() && is_b_pivot[p];
        if (!taken) s.reps.push_back(rz.rows.row(static_cast<Eigen::Index>(i)).transpose());
    }
    return s;
}

InducedMap induced_map(const MatrixQI& F, const SubquotientSpace& src, const SubquotientSpace& dst) {
    if (F.cols() != src.ambient_dim || F.rows() != dst.ambient_dim)
        throw Error(ErrorKind::DimensionMismatch, "induced_map: matrix shape does not match ambients");

    RowSpace dst_cycles = dst.cycle_space();
    RowSpace dst_boundaries = dst.boundary_space();
    for (const VectorQI& z : src.cycles) {
        if (!dst_cycles.contains(F * z))
            throw Error(ErrorKind::NotAChainMap, "induced_map: image of a cycle is not a cycle");
    }
    for (const VectorQI& b : src.boundaries) {
        if (!dst_boundaries.contains(F * b))
            throw Error(ErrorKind::NotAChainMap, "induced_map: image of a boundary is not a boundary");
    }

    std::vector<VectorQI> cols = dst.reps;
    cols.insert(cols.end(), dst.boundaries.begin(), dst.boundaries.end());
    MatrixQI basis = matrix_from_columns(cols, dst.ambient_dim);

    InducedMap out;
    out.matrix = MatrixQI::Constant(dst.dim(), src.dim(), GaussianRational(0));
    for (Eigen::Index j = 0; j < src.dim(); ++j) {
        std::optional<VectorQI> sol = solve_in_span(basis, F * src.reps[static_cast<std::size_t>(j)]);
        if (!sol) throw Error(ErrorKind::NotAChainMap, "induced_map: image escapes the target cycles");
        out.matrix.col(j) = sol->head(dst.dim());
    }
    out.rank = rank(out.matrix);

    for (const VectorQI& k : kernel_basis(out.matrix)) {
        VectorQI v = VectorQI::Constant(src.ambient_dim, GaussianRational(0));
        for (Eigen::Index i = 0; i < src.dim(); ++i) v += k(i) * src.reps[static_cast<std::size_t>(i)];
        out.kernel_vectors.push_back(std::move(v));
    }

    // Cokernel representatives: unit classes completing the image, i.e. the
    // dst representatives whose class-coordinate is a free column of the
    // image's echelon form.
    std::vector<VectorQI> image_classes;
    for (Eigen::Index j = 0; j < out.matrix.cols(); ++j) image_classes.push_back(out.matrix.col(j));
    std::vector<VectorQI> unit_classes;
    for (Eigen::Index i = 0; i < dst.dim(); ++i) {
        VectorQI e = VectorQI::Constant(dst.dim(), GaussianRational(0));
        e(i) = GaussianRational(1);
        unit_classes.push_back(std::move(e));
    }
    SubquotientSpace coker = subquotient(unit_classes, image_classes, dst.dim());
    for (const VectorQI& c : coker.reps) {
        VectorQI v = VectorQI::Constant(dst.ambient_dim, GaussianRational(0));
        for (Eigen::Index i = 0; i < dst.dim(); ++i) v += c(i) * dst.reps[static_cast<std::size_t>(i)];
        out.cokernel_vectors.push_back(std::move(v));
    }
    return out;
}

}  // namespace bcwb
