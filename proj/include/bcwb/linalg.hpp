// Exact linear algebra over Q(i): fraction-managed Gauss-Jordan elimination,
// ranks, kernels, subquotients Z/B and maps induced on them.
//
// Vectors are Eigen column vectors; a family of vectors is kept as a
// std::vector so bases stay in a definite order.  Everything is deterministic:
// pivots are chosen in column order and normalized to leading coefficient 1.

#pragma once

#include <optional>
#include <vector>

#include "bcwb/errors.hpp"
#include "bcwb/scalar.hpp"

namespace bcwb {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQI = DenseMatrix<GaussianRational>;
using VectorQI = DenseVector<GaussianRational>;

// Reduced row echelon form in place; returns the pivot columns in ascending
// order.  Pivot entries are normalized to 1 and cleared above and below.
template <class Scalar>
std::vector<Eigen::Index> rref_in_place(DenseMatrix<Scalar>& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index lead = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r) {
            if (!(m(r, col) == Scalar(0))) {
                lead = r;
                break;
            }
        }
        if (lead < 0) continue;
        if (lead != row) m.row(lead).swap(m.row(row));
        Scalar inv = Scalar(1) / m(row, col);
        m.row(row) *= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            Scalar f = m(r, col);
            if (f == Scalar(0)) continue;
            m.row(r) -= f * m.row(row);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class Scalar>
Eigen::Index rank(DenseMatrix<Scalar> m) {
    return static_cast<Eigen::Index>(rref_in_place(m).size());
}

// Basis of ker(m): one vector per free column, exact (m*v = 0 on the nose).
template <class Scalar>
std::vector<DenseVector<Scalar>> kernel_basis(DenseMatrix<Scalar> m) {
    const Eigen::Index cols = m.cols();
    std::vector<Eigen::Index> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(cols, false);
    for (Eigen::Index p : pivots) is_pivot[p] = true;
    std::vector<DenseVector<Scalar>> basis;
    for (Eigen::Index f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        DenseVector<Scalar> v = DenseVector<Scalar>::Constant(cols, Scalar(0));
        v(f) = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v(pivots[i]) = -m(static_cast<Eigen::Index>(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// An echelonized basis of a span, kept as rows together with their pivots.
struct RowSpace {
    MatrixQI rows;  // RREF, no zero rows
    std::vector<Eigen::Index> pivots;

    Eigen::Index dim() const { return rows.rows(); }

    // Residual of v after eliminating all pivot coordinates; zero iff v lies
    // in the span.
    VectorQI reduce(VectorQI v) const {
        for (Eigen::Index i = 0; i < rows.rows(); ++i) {
            GaussianRational c = v(pivots[static_cast<std::size_t>(i)]);
            if (c == GaussianRational(0)) continue;
            v -= c * rows.row(i).transpose();
        }
        return v;
    }
    bool contains(const VectorQI& v) const { return is_zero_vector(reduce(v)); }

    static bool is_zero_vector(const VectorQI& v) {
        for (Eigen::Index i = 0; i < v.size(); ++i)
            if (!v(i).is_zero()) return false;
        return true;
    }
};

RowSpace row_space(const std::vector<VectorQI>& vectors, Eigen::Index ambient_dim);

MatrixQI matrix_from_columns(const std::vector<VectorQI>& columns, Eigen::Index ambient_dim);

// Coordinates of b in the span of the given columns (free variables pinned to
// zero), or nullopt when b is outside the span.
std::optional<VectorQI> solve_in_span(const MatrixQI& columns, const VectorQI& b);

// A subquotient Z/B of an ambient coordinate space, with chosen lifts.
// Representatives are the echelon rows of Z whose pivot is not a pivot of B;
// they are cycles, independent modulo B, and normalized to leading entry 1.
struct SubquotientSpace {
    Eigen::Index ambient_dim = 0;
    std::vector<VectorQI> cycles;      // echelon basis of Z
    std::vector<VectorQI> boundaries;  // echelon basis of B
    std::vector<VectorQI> reps;        // lifts of a basis of Z/B
    std::vector<Eigen::Index> cycle_pivots;
    std::vector<Eigen::Index> boundary_pivots;

    Eigen::Index dim() const { return static_cast<Eigen::Index>(reps.size()); }

    RowSpace cycle_space() const;
    RowSpace boundary_space() const;

    // Rep-basis coordinates of the class of a cycle v.
    VectorQI class_coordinates(const VectorQI& v) const;
};

// Throws ContainmentViolation when span(B) is not contained in span(Z).
SubquotientSpace subquotient(const std::vector<VectorQI>& Z, const std::vector<VectorQI>& B,
                             Eigen::Index ambient_dim);

// The map Z_src/B_src -> Z_dst/B_dst induced by an ambient matrix F, in the
// representative bases, plus kernel/cokernel lifts back in the ambients.
struct InducedMap {
    MatrixQI matrix;  // dst.dim() x src.dim()
    std::vector<VectorQI> kernel_vectors;    // cycles in the source ambient
    std::vector<VectorQI> cokernel_vectors;  // cycles in the target ambient
    Eigen::Index rank = 0;

    Eigen::Index kernel_dim() const { return static_cast<Eigen::Index>(kernel_vectors.size()); }
    Eigen::Index cokernel_dim() const { return static_cast<Eigen::Index>(cokernel_vectors.size()); }
};

// Throws NotAChainMap unless F(Z_src) <= Z_dst and F(B_src) <= B_dst.
InducedMap induced_map(const MatrixQI& F, const SubquotientSpace& src, const SubquotientSpace& dst);

}  // namespace bcwb
