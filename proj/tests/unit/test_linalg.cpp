#include "jred/linalg.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace jred;
using jred::testing::ScalarGen;

namespace {

bool annihilates(const Matrix& m, const SubspaceBasis& s) {
    for (const auto& v : s.vectors())
        if (!is_zero(m.apply(v))) return false;
    return true;
}

bool is_rref(const Matrix& r, const std::vector<std::size_t>& pivots) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (i > 0 && pivots[i] <= pivots[i - 1]) return false;
        if (r(i, pivots[i]) != Scalar(1)) return false;
        for (std::size_t k = 0; k < r.rows(); ++k)
            if (k != i && !r(k, pivots[i]).is_zero()) return false;
        for (std::size_t j = 0; j < pivots[i]; ++j)
            if (!r(i, j).is_zero()) return false;
    }
    for (std::size_t i = pivots.size(); i < r.rows(); ++i)
        if (!is_zero(r.row(i))) return false;
    return true;
}

}  // namespace

TEST_CASE("rref examples") {
    auto id = rref(Matrix::identity(3));
    CHECK(id.reduced == Matrix::identity(3));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(id.rank == 3);

    auto zero = rref(Matrix(3, 4));
    CHECK(zero.reduced == Matrix(3, 4));
    CHECK(zero.pivots.empty());
    CHECK(zero.rank == 0);

    const Matrix dep{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}};
    CHECK(rref(dep).rank == 2);
    CHECK(rank(dep) == 2);
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace(Matrix::identity(4)).empty());
    const Matrix m{{1, 0, 1}, {0, 1, 1}};
    const auto ns = nullspace(m);
    REQUIRE(ns.dim() == 1);
    CHECK(ns.vectors()[0] == Vector{Scalar(-1), Scalar(-1), Scalar(1)});
    CHECK(nullspace(Matrix(2, 3)).dim() == 3);
}

TEST_CASE("rref agrees with plain Gauss-Jordan on random matrices") {
    ScalarGen gen(11);
    for (int t = 0; t < 60; ++t) {
        const std::size_t rows = static_cast<std::size_t>(gen.integer(1, 8));
        const std::size_t cols = static_cast<std::size_t>(gen.integer(1, 9));
        const Matrix m = t % 3 == 0 ? gen.low_rank_matrix(rows, cols, static_cast<std::size_t>(gen.integer(1, 3)))
                                    : gen.matrix(rows, cols);
        const auto ours = rref(m);
        const auto [theirs, pivots] = jred::testing::gauss_jordan(m);
        CHECK(ours.reduced == theirs);
        CHECK(ours.pivots == pivots);
        CHECK(is_rref(ours.reduced, ours.pivots));
        CHECK(rref(ours.reduced).reduced == ours.reduced);
    }
}

TEST_CASE("rank plus nullity equals column count on random 10x12 matrices") {
    ScalarGen gen(5);
    for (int t = 0; t < 20; ++t) {
        const Matrix m = t % 2 ? gen.matrix(10, 12) : gen.low_rank_matrix(10, 12, static_cast<std::size_t>(gen.integer(0, 9)));
        const auto ns = nullspace(m);
        CHECK(annihilates(m, ns));
        CHECK(ns.dim() + jred::testing::gauss_jordan(m).second.size() == 12);
    }
}

TEST_CASE("inverse and determinant") {
    ScalarGen gen(3);
    for (int t = 0; t < 15; ++t) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
        const Matrix m = gen.matrix(n, n, false);
        const Scalar det = ScalarGen::naive_determinant(m);
        CHECK(determinant(m) == det);
        if (det.is_zero()) {
            CHECK_THROWS_AS(inverse(m), SingularMatrix);
        } else {
            CHECK(m * inverse(m) == Matrix::identity(n));
        }
    }
    CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST_CASE("subspace basis rejects dependent vectors") {
    CHECK_THROWS_AS(SubspaceBasis(2, {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}), std::invalid_argument);
    const SubspaceBasis s = SubspaceBasis::span_of(2, std::vector<Vector>{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}});
    CHECK(s.dim() == 1);
}

TEST_CASE("intersection") {
    const SubspaceBasis x(2, {{Scalar(1), Scalar(0)}});
    const SubspaceBasis y(2, {{Scalar(0), Scalar(1)}});
    CHECK(intersect(x, y).empty());
    CHECK(intersect(x, x).same_span(x));

    ScalarGen gen(17);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 6;
        const auto a = SubspaceBasis::span_of(n, std::vector<Vector>{gen.matrix(3, n).row(0), gen.matrix(3, n).row(1),
                                                                     gen.matrix(3, n).row(2)});
        std::vector<Vector> bv;
        for (long i = 0; i < gen.integer(1, 5); ++i) bv.push_back(gen.matrix(1, n).row(0));
        // Share a vector half of the time so that intersections are nontrivial.
        if (t % 2 && !a.empty()) bv.push_back(a.vectors()[0]);
        const auto b = SubspaceBasis::span_of(n, bv);
        const auto meet = intersect(a, b);
        CHECK(meet.dim() + n >= a.dim() + b.dim());
        CHECK(a.contains(meet));
        CHECK(b.contains(meet));
    }
}

TEST_CASE("orthogonal complement") {
    const BilinearForm kappa(Scalar(-2) * Matrix::identity(3));
    const SubspaceBasis e3(3, {{Scalar(0), Scalar(0), Scalar(1)}});
    const auto c = orthogonal_complement(kappa, e3);
    CHECK_FALSE(c.degenerate);
    CHECK(c.space.same_span(SubspaceBasis(3, {{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}})));

    const auto z = orthogonal_complement(BilinearForm(Matrix(3, 3)), e3);
    CHECK(z.degenerate);
    CHECK(z.space.dim() == 3);

    CHECK_THROWS_AS(BilinearForm(Matrix{{1, 2}, {3, 4}}), std::invalid_argument);
}

TEST_CASE("double complement returns the original span for nondegenerate forms") {
    ScalarGen gen(23);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 5;
        Matrix g = gen.matrix(n, n, false);
        g = g + g.transpose();
        const BilinearForm form(g);
        if (!form.nondegenerate()) continue;
        const auto s = SubspaceBasis::span_of(n, std::vector<Vector>{gen.matrix(1, n).row(0), gen.matrix(1, n).row(0)});
        const auto once = orthogonal_complement(form, s).space;
        const auto twice = orthogonal_complement(form, once).space;
        CHECK(twice.same_span(s));
    }
}
