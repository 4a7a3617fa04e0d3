// Exact linear algebra over Q(i): ranks, kernels, subquotients, induced maps.

#include <random>

#include "catch_amalgamated.hpp"

#include "bcwb/linalg.hpp"

using namespace bcwb;

namespace {

GaussianRational qi(int re, int im = 0) { return {Rational(re), Rational(im)}; }

MatrixQI from_rows(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    MatrixQI m(static_cast<Eigen::Index>(rows.size()),
               static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

VectorQI unit(Eigen::Index dim, Eigen::Index k) {
    VectorQI v = VectorQI::Constant(dim, qi(0));
    v(k) = qi(1);
    return v;
}

bool exactly_zero(const VectorQI& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

bool same_matrix(const MatrixQI& a, const MatrixQI& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

bool same_vector(const VectorQI& a, const VectorQI& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return false;
    return true;
}

// Deterministic random Q(i) matrices with small entries, used for the
// rank-nullity and basis-independence properties.
MatrixQI random_matrix(std::mt19937& rng, Eigen::Index rows, Eigen::Index cols) {
    std::uniform_int_distribution<int> entry(-2, 2);
    std::uniform_int_distribution<int> pick(0, 3);
    MatrixQI m = MatrixQI::Constant(rows, cols, qi(0));
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) {
            int kind = pick(rng);
            if (kind == 0) continue;  // keep it sparse
            if (kind == 1) m(i, j) = qi(entry(rng));
            if (kind == 2) m(i, j) = qi(0, entry(rng));
            if (kind == 3) m(i, j) = qi(entry(rng), entry(rng));
        }
    return m;
}

}  // namespace

TEST_CASE("scalar field arithmetic is exact") {
    GaussianRational z{Rational(3) / 7, Rational(-2) / 5};
    CHECK(z * z.conj() == GaussianRational(z.norm()));
    CHECK((z / z) == qi(1));
    CHECK(GaussianRational::i() * GaussianRational::i() == qi(-1));
    CHECK(to_string(GaussianRational(Rational(1) / 2, Rational(-3) / 4)) == "1/2-3/4*i");
}

TEST_CASE("rank of dependent complex rows") {
    // row2 = i * row1
    MatrixQI m = from_rows({{qi(1), qi(0, 1)}, {qi(0, 1), qi(-1)}});
    CHECK(rank(m) == 1);
}

TEST_CASE("rank of zero and identity matrices") {
    CHECK(rank(MatrixQI(MatrixQI::Constant(3, 4, qi(0)))) == 0);
    CHECK(rank(MatrixQI(MatrixQI::Identity(5, 5))) == 5);
}

TEST_CASE("kernel of [1, i]") {
    MatrixQI m = from_rows({{qi(1), qi(0, 1)}});
    auto kernel = kernel_basis(m);
    REQUIRE(kernel.size() == 1);
    CHECK(exactly_zero(m * kernel[0]));
    // (-i, 1) up to scale
    CHECK(kernel[0](0) * qi(1) == -GaussianRational::i() * kernel[0](1));
}

TEST_CASE("kernel of identity is empty, kernel of repeated rows is checked by substitution") {
    CHECK(kernel_basis(MatrixQI(MatrixQI::Identity(4, 4))).empty());
    MatrixQI m = from_rows({{qi(1), qi(1)}, {qi(2), qi(2)}});
    auto kernel = kernel_basis(m);
    REQUIRE(kernel.size() == 1);
    CHECK(exactly_zero(m * kernel[0]));
}

TEST_CASE("rank-nullity and transpose rank on random matrices") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        Eigen::Index rows = 1 + trial % 5;
        Eigen::Index cols = 1 + (trial * 7) % 6;
        MatrixQI m = random_matrix(rng, rows, cols);
        Eigen::Index r = rank(m);
        auto kernel = kernel_basis(m);
        CHECK(r + static_cast<Eigen::Index>(kernel.size()) == cols);
        CHECK(rank(MatrixQI(m.transpose())) == r);
        for (const VectorQI& v : kernel) CHECK(exactly_zero(m * v));
    }
}

TEST_CASE("subquotient basic examples") {
    std::vector<VectorQI> Z = {unit(2, 0), unit(2, 1)};
    std::vector<VectorQI> B = {unit(2, 0)};
    SubquotientSpace s = subquotient(Z, B, 2);
    REQUIRE(s.dim() == 1);
    CHECK(same_vector(s.reps[0], unit(2, 1)));

    SubquotientSpace trivial = subquotient(Z, Z, 2);
    CHECK(trivial.dim() == 0);
}

TEST_CASE("subquotient with non-echelon input") {
    // Z = {e1, e1+e2}, B = {2 e1}
    VectorQI z2 = unit(2, 0);
    z2 += unit(2, 1);
    std::vector<VectorQI> Z = {unit(2, 0), z2};
    VectorQI b = unit(2, 0);
    b *= qi(2);
    SubquotientSpace s = subquotient(Z, {b}, 2);
    CHECK(s.dim() == 1);
}

TEST_CASE("subquotient rejects boundaries outside the cycles") {
    std::vector<VectorQI> Z = {unit(3, 0)};
    std::vector<VectorQI> B = {unit(3, 2)};
    CHECK_THROWS_AS(subquotient(Z, B, 3), Error);
}

TEST_CASE("subquotient dimension is basis-independent") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 25; ++trial) {
        MatrixQI zm = random_matrix(rng, 4, 6);
        std::vector<VectorQI> Z;
        for (Eigen::Index i = 0; i < zm.rows(); ++i) Z.push_back(zm.row(i).transpose());
        // boundaries: random combinations of the cycles
        std::vector<VectorQI> B;
        for (int b = 0; b < 2; ++b) {
            VectorQI v = VectorQI::Constant(6, qi(0));
            for (const VectorQI& z : Z)
                if (coin(rng)) v += z;
            B.push_back(v);
        }
        SubquotientSpace s1 = subquotient(Z, B, 6);

        // shuffle and rescale both families
        std::vector<VectorQI> Z2 = Z, B2 = B;
        std::shuffle(Z2.begin(), Z2.end(), rng);
        std::shuffle(B2.begin(), B2.end(), rng);
        for (VectorQI& v : Z2) v *= qi(1, 1);
        for (VectorQI& v : B2) v *= qi(-3);
        SubquotientSpace s2 = subquotient(Z2, B2, 6);
        CHECK(s1.dim() == s2.dim());
    }
}

TEST_CASE("induced map of the identity is the identity in rep bases") {
    std::vector<VectorQI> Z = {unit(3, 0), unit(3, 1), unit(3, 2)};
    std::vector<VectorQI> B = {unit(3, 0)};
    SubquotientSpace s = subquotient(Z, B, 3);
    InducedMap m = induced_map(MatrixQI(MatrixQI::Identity(3, 3)), s, s);
    CHECK(same_matrix(m.matrix, MatrixQI(MatrixQI::Identity(2, 2))));
    CHECK(m.kernel_dim() == 0);
    CHECK(m.cokernel_dim() == 0);
}

TEST_CASE("induced map of zero has full kernel and cokernel") {
    std::vector<VectorQI> Z = {unit(2, 0), unit(2, 1)};
    SubquotientSpace s = subquotient(Z, {}, 2);
    InducedMap m = induced_map(MatrixQI(MatrixQI::Constant(2, 2, qi(0))), s, s);
    CHECK(m.kernel_dim() == 2);
    CHECK(m.cokernel_dim() == 2);
}

TEST_CASE("induced rank-1 map between 2-dimensional quotients") {
    std::vector<VectorQI> Z = {unit(2, 0), unit(2, 1)};
    SubquotientSpace s = subquotient(Z, {}, 2);
    // F(e1) = e1, F(e2) = e1
    MatrixQI f = from_rows({{qi(1), qi(1)}, {qi(0), qi(0)}});
    InducedMap m = induced_map(f, s, s);
    CHECK(m.rank == 1);
    CHECK(m.kernel_dim() == 1);
    CHECK(m.cokernel_dim() == 1);
}

TEST_CASE("induced map rejects non-chain maps") {
    // src cycles e1; dst cycles e1 with boundary e1; F sends cycle out of dst cycles
    std::vector<VectorQI> Zs = {unit(2, 0)};
    SubquotientSpace src = subquotient(Zs, {}, 2);
    std::vector<VectorQI> Zd = {unit(2, 1)};
    SubquotientSpace dst = subquotient(Zd, {}, 2);
    MatrixQI f = MatrixQI::Identity(2, 2);
    CHECK_THROWS_AS(induced_map(f, src, dst), Error);
}

TEST_CASE("solve_in_span finds exact coordinates") {
    std::vector<VectorQI> cols = {unit(3, 0), unit(3, 1)};
    VectorQI b = unit(3, 0);
    b += unit(3, 1);
    auto sol = solve_in_span(matrix_from_columns(cols, 3), b);
    REQUIRE(sol.has_value());
    CHECK((*sol)(0) == qi(1));
    CHECK((*sol)(1) == qi(1));
    CHECK_FALSE(solve_in_span(matrix_from_columns(cols, 3), unit(3, 2)).has_value());
}
