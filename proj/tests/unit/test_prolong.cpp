#include "jred/prolong.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace jred;

namespace {

bool block_contains(const SubspaceBasis& block, const Element& x) { return block.contains(x.coords); }

void check_block_structure(const ProlongationAlgebra& p) {
    const std::size_t n = p.dim();
    const auto g = p.g_block(), jet = p.jet_block(), frame = p.frame_block();
    auto in = [&](const SubspaceBasis& s, std::size_t i) { return s.contains(Element::basis(n, i).coords); };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Element z = bracket(p.algebra, Element::basis(n, x), Element::basis(n, y));
            if (in(g, x) && in(g, y)) CHECK(block_contains(g, z));
            if (in(g, x) && in(jet, y)) CHECK(block_contains(jet, z));
            if (in(frame, x) && in(jet, y)) CHECK(block_contains(jet, z));
            if (in(jet, x) && in(jet, y)) CHECK(is_zero(z.coords));
            if (in(frame, x) && in(frame, y)) CHECK(block_contains(frame, z));
            if (in(g, x) && in(frame, y)) CHECK(is_zero(z.coords));
        }
}

}  // namespace

TEST_CASE("t1n dimensions and brackets") {
    const auto su3 = make_standard_algebra("su3");
    const auto p = t1n_algebra(su3, 4);
    CHECK(p.dim() == 40);
    CHECK(is_zero(bracket(p.algebra, Element::basis(40, p.jet_index(0, 1)), Element::basis(40, p.jet_index(3, 2))).coords));
    // [b_1, b_2^mu] = c^3_12 b_3^mu
    CHECK(bracket(p.algebra, Element::basis(40, 0), Element::basis(40, p.jet_index(1, 3))) ==
          Element::basis(40, p.jet_index(2, 3)));

    const auto t = t1n_algebra(make_standard_algebra("su2"), 4);
    CHECK(t.dim() == 15);
    CHECK(validate(t.algebra).ok());
    check_block_structure(t);
}

TEST_CASE("w11 dimensions, validity, and block structure") {
    const auto su2 = make_standard_algebra("su2");
    const auto w = w11_algebra(su2, 2);
    CHECK(w.dim() == 13);
    CHECK(validate(w.algebra).ok());
    check_block_structure(w);
    CHECK(is_zero(bracket(w.algebra, Element::basis(13, 0), Element::basis(13, w.frame_index(0, 1))).coords));

    CHECK(w11_algebra(make_standard_algebra("su3"), 4).dim() == 56);
    CHECK_THROWS_AS(t1n_algebra(su2, 0), DimensionError);
}

TEST_CASE("frame block is gl(n) and acts on jets contragrediently") {
    const auto w = w11_algebra(make_standard_algebra("u1"), 3);
    const std::size_t n = w.dim();
    // [b^0_1, b^1_0] = b^0_0 - b^1_1
    Element expected = Element::zero(n);
    expected.coords[w.frame_index(0, 0)] = Scalar(1);
    expected.coords[w.frame_index(1, 1)] = Scalar(-1);
    CHECK(bracket(w.algebra, Element::basis(n, w.frame_index(0, 1)), Element::basis(n, w.frame_index(1, 0))) == expected);
    // [b^0_1, b_A^0] = -b_A^1
    CHECK(bracket(w.algebra, Element::basis(n, w.frame_index(0, 1)), Element::basis(n, w.jet_index(0, 0))).coords ==
          scaled(Scalar(-1), Element::basis(n, w.jet_index(0, 1)).coords));
    CHECK(is_zero(bracket(w.algebra, Element::basis(n, w.frame_index(0, 1)), Element::basis(n, w.jet_index(0, 1))).coords));
}

TEST_CASE("the action -delta^rho_nu b^mu on jets is not a representation of gl(n)") {
    // Recorded because it is the literal alternative to the convention above.
    const auto g = make_standard_algebra("u1");
    const std::size_t n = 2;
    ProlongationAlgebra shape = t1n_algebra(g, n);
    std::vector<StructureConstant> c;
    const auto gl = make_standard_algebra("gl(2)");
    const std::size_t off = 1 + n;
    for (const auto& k : gl.constants()) c.push_back({k.a + off, k.b + off, k.c + off, k.value});
    for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu)
            c.push_back({shape.jet_index(0, mu), shape.jet_index(0, nu), off + mu * n + nu, Scalar(1)});
    std::vector<std::string> labels(1 + n + n * n, "x");
    CHECK_FALSE(validate(LieAlgebra("literal", labels, c)).ok());
}

TEST_CASE("adjoint matrices") {
    const auto su2 = make_standard_algebra("su2");
    const Matrix ad3 = adjoint_matrix(su2, Element::basis(3, 2));
    // [e3, e1] = e2, [e3, e2] = -e1
    CHECK(ad3 == Matrix{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}});
    CHECK(adjoint_matrix(make_standard_algebra("u1"), {{Scalar(3)}}) == Matrix(1, 1));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const Matrix p = adjoint_matrix(su2, Element::basis(3, i)) * adjoint_matrix(su2, Element::basis(3, j));
            CHECK(p(0, 0) + p(1, 1) + p(2, 2) == (i == j ? Scalar(-2) : Scalar()));
        }
    CHECK_THROWS_AS(adjoint_matrix(su2, Element::zero(2)), DimensionError);
}

TEST_CASE("zeta action examples") {
    jred::testing::ScalarGen gen(77);
    const Matrix f = gen.rational_matrix(3, 4);
    CHECK(zeta_action(GroupJetData::identity(3, 4), f) == f);

    GroupJetData twice = GroupJetData::identity(3, 4);
    twice.alpha = Scalar(2) * Matrix::identity(4);
    CHECK(zeta_action(twice, f) == Scalar(Rational(1, 2)) * f);

    GroupJetData singular = GroupJetData::identity(3, 4);
    singular.alpha(2, 2) = Scalar();
    CHECK_THROWS_AS(zeta_action(singular, f), SingularMatrix);
    CHECK_THROWS_AS(zeta_action(GroupJetData::identity(3, 4), Matrix(3, 3)), DimensionError);
}

TEST_CASE("zeta action composes along the group product") {
    jred::testing::ScalarGen gen(1234);
    for (int t = 0; t < 15; ++t) {
        const std::size_t N = static_cast<std::size_t>(gen.integer(1, 4));
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
        const GroupJetData a{gen.invertible_rational_matrix(N), gen.rational_matrix(N, n), gen.invertible_rational_matrix(n)};
        const GroupJetData b{gen.invertible_rational_matrix(N), gen.rational_matrix(N, n), gen.invertible_rational_matrix(n)};
        const Matrix f = gen.rational_matrix(N, n);
        CHECK(zeta_action(a, zeta_action(b, f)) == zeta_action(compose(a, b), f));
    }
    // A genuine adjoint matrix: rotation by a quarter turn about e3 in SU(2).
    const Matrix rot{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}};
    const GroupJetData r{rot, gen.rational_matrix(3, 4), gen.invertible_rational_matrix(4)};
    const Matrix f = gen.rational_matrix(3, 4);
    CHECK(zeta_action(r, zeta_action(r, f)) == zeta_action(compose(r, r), f));
}

TEST_CASE("zeta action is affine with invertible linear part") {
    jred::testing::ScalarGen gen(55);
    const GroupJetData jd{gen.invertible_rational_matrix(3), gen.rational_matrix(3, 2), gen.invertible_rational_matrix(2)};
    const Matrix zero(3, 2);
    const Matrix base = zeta_action(jd, zero);
    const Matrix f1 = gen.rational_matrix(3, 2), f2 = gen.rational_matrix(3, 2);
    const Scalar s = gen.scalar();
    auto linear = [&](const Matrix& f) { return zeta_action(jd, f) - base; };
    CHECK(linear(f1 + s * f2) == linear(f1) + s * linear(f2));
    // Linear part f -> Ad f alpha^-1 is invertible: it kills only f = 0.
    Matrix big(6, 6);
    for (std::size_t k = 0; k < 6; ++k) {
        Matrix unit(3, 2);
        unit(k / 2, k % 2) = Scalar(1);
        const Matrix img = linear(unit);
        for (std::size_t r = 0; r < 6; ++r) big(r, k) = img(r / 2, r % 2);
    }
    CHECK(rank(big) == 6);
}
