#include "jred/jacobi.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <array>

using namespace jred;
using jred::testing::ScalarGen;

namespace {

Curvature random_curvature(ScalarGen& gen, std::size_t g_dim, std::size_t n) {
    Curvature f(g_dim, n);
    for (std::size_t a = 0; a < g_dim; ++a)
        for (std::size_t mu = 0; mu < n; ++mu)
            for (std::size_t nu = mu + 1; nu < n; ++nu) f.set(a, mu, nu, gen.sparse_scalar());
    return f;
}

Curvature equal_component_01(std::size_t g_dim, std::size_t components) {
    Curvature f(g_dim, 4);
    for (std::size_t a = 0; a < components; ++a) f.set(a, 0, 1, Scalar(1));
    return f;
}

// Coefficient of Xi^Z_alpha in row (nu, B) as printed after "which give us":
// each term reads  sign * F^D_{alpha nu} [b_D, b_Z] Xi^Z_alpha.
struct PrintedTerm {
    std::size_t nu, alpha;
    int sign;
};

constexpr std::array<PrintedTerm, 12> printed_rows{{
    {0, 1, -1}, {0, 2, -1}, {0, 3, -1},
    {1, 0, -1}, {1, 3, +1}, {1, 2, +1},
    {2, 0, -1}, {2, 1, +1}, {2, 3, +1},
    {3, 0, -1}, {3, 1, +1}, {3, 2, +1},
}};

}  // namespace

TEST_CASE("metric signature checks") {
    CHECK_NOTHROW(Metric::minkowski().check());
    CHECK(Metric::minkowski().signs == std::vector<Scalar>{Scalar(1), Scalar(-1), Scalar(-1), Scalar(-1)});
    Metric bad{{Scalar(1), Scalar(2)}};
    CHECK_THROWS_WITH_AS(bad.check(), "signature entries must be ±1", ConfigError);
    Metric irrational{{Scalar(Rational(0), Rational(1))}};
    CHECK_THROWS_AS(irrational.check(), ConfigError);
}

TEST_CASE("curvature is antisymmetric by construction") {
    Curvature f(3, 4);
    f.set(1, 2, 0, Scalar(Rational(3, 2)));
    CHECK(f(1, 2, 0) == Scalar(Rational(3, 2)));
    CHECK(f(1, 0, 2) == Scalar(Rational(-3, 2)));
    CHECK_THROWS_AS(f.set(0, 1, 1, Scalar(1)), DimensionError);
    CHECK_NOTHROW(f.set(0, 1, 1, Scalar()));
    CHECK_THROWS_AS(f.set(3, 0, 1, Scalar(1)), DimensionError);
    CHECK_THROWS_AS(f.set(0, 0, 4, Scalar(1)), DimensionError);
}

TEST_CASE("zero curvature assembles to the zero matrix") {
    const auto l = make_standard_algebra("su2+u1");
    const auto sys = assemble_constraint_system(l, Metric::minkowski(), Curvature(4, 4), BilinearForm::identity(4));
    CHECK(sys.matrix.rows() == 16);
    CHECK(sys.matrix.cols() == 16);
    CHECK(sys.matrix.is_zero());
    CHECK(sys.row_index.size() == 16);
    CHECK(sys.row_index[5] == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(sys.unknowns == Unknowns::slot_components);
}

TEST_CASE("su2+u1 equal-component curvature: nu=0 rows couple only alpha=1 with sign -") {
    const auto l = make_standard_algebra("su2+u1");
    const auto sys = assemble_constraint_system(l, Metric::minkowski(), equal_component_01(4, 3), BilinearForm::identity(4));
    // F_{10} = -(b1+b2+b3); row (0,B) holds -[F_{10}, b_B] lowered = [b1+b2+b3, b_B].
    const Vector s{Scalar(1), Scalar(1), Scalar(1), Scalar()};
    for (std::size_t b = 0; b < 4; ++b) {
        const Vector expected = bracket(l, {s}, Element::basis(4, b)).coords;
        for (std::size_t alpha = 0; alpha < 4; ++alpha)
            for (std::size_t z = 0; z < 4; ++z) {
                const Scalar& got = sys.matrix(sys.row(0, b), sys.column(alpha, z));
                CHECK(got == (alpha == 1 ? expected[z] : Scalar()));
            }
    }
    // Entry (nu=0, B=b1) on Xi^{b3}_1: -F^D_{10} c^3_{D1} = c^3_{21} = -1.
    CHECK(sys.matrix(sys.row(0, 0), sys.column(1, 2)) == Scalar(-1));
    // The u1 row and column are empty.
    for (std::size_t c = 0; c < 16; ++c) CHECK(sys.matrix(sys.row(0, 3), c).is_zero());
    for (std::size_t r = 0; r < 16; ++r) CHECK(sys.matrix(r, sys.column(1, 3)).is_zero());
}

TEST_CASE("assembly matches the coefficient formula with oracle constants") {
    const auto l = make_standard_algebra("su3");
    const auto c = jred::testing::structure_from_rep(jred::testing::su3_rep());
    ScalarGen gen(11);
    Matrix d = gen.invertible_rational_matrix(8);
    d = d + d.transpose();
    if (determinant(d).is_zero()) d = d + Matrix::identity(8);
    REQUIRE(!determinant(d).is_zero());
    const BilinearForm delta(d);
    const Metric eta{{Scalar(-1), Scalar(1), Scalar(1), Scalar(-1)}};
    const Curvature f = random_curvature(gen, 8, 4);
    const auto sys = assemble_constraint_system(l, eta, f, delta);
    for (std::size_t nu = 0; nu < 4; ++nu)
        for (std::size_t b = 0; b < 8; ++b)
            for (std::size_t alpha = 0; alpha < 4; ++alpha)
                for (std::size_t z = 0; z < 8; ++z) {
                    Scalar expected;
                    for (std::size_t dd = 0; dd < 8; ++dd)
                        for (std::size_t a = 0; a < 8; ++a) expected += f(dd, alpha, nu) * d(z, a) * c[dd][b][a];
                    expected *= eta.signs[nu] * eta.signs[alpha];
                    CHECK(sys.matrix(nu * 8 + b, alpha * 8 + z) == expected);
                }
}

TEST_CASE("marker assembly reproduces the four displayed equations term for term") {
    const auto l = make_standard_algebra("su2");
    const auto c = jred::testing::structure_from_rep(jred::testing::su2_rep());
    const std::size_t N = 3;
    // One marker per (slot a<b, generator D): an indicator curvature isolates the coefficient.
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            for (std::size_t dd = 0; dd < N; ++dd) {
                Curvature marker(N, 4);
                marker.set(dd, a, b, Scalar(1));
                const auto sys = assemble_constraint_system(l, Metric::minkowski(), marker, BilinearForm::identity(N));
                Matrix expected(4 * N, 4 * N);
                for (const auto& t : printed_rows) {
                    Scalar slot;
                    if (t.alpha == a && t.nu == b) slot = Scalar(1);
                    if (t.alpha == b && t.nu == a) slot = Scalar(-1);
                    for (std::size_t bb = 0; bb < N; ++bb)
                        for (std::size_t z = 0; z < N; ++z)
                            expected(t.nu * N + bb, t.alpha * N + z) += Scalar(t.sign) * slot * c[dd][bb][z];
                }
                CHECK(sys.matrix == expected);
            }
}

TEST_CASE("assembly is linear in the curvature") {
    const auto l = make_standard_algebra("su3");
    ScalarGen gen(5);
    const auto delta = BilinearForm::identity(8);
    for (int trial = 0; trial < 3; ++trial) {
        const Curvature f1 = random_curvature(gen, 8, 4);
        const Curvature f2 = random_curvature(gen, 8, 4);
        const Scalar s = gen.scalar();
        const auto m1 = assemble_constraint_system(l, Metric::minkowski(), f1, delta).matrix;
        const auto m2 = assemble_constraint_system(l, Metric::minkowski(), f2, delta).matrix;
        const auto m12 = assemble_constraint_system(l, Metric::minkowski(), f1 + s * f2, delta).matrix;
        CHECK(m12 == m1 + s * m2);
    }
}

TEST_CASE("diagonal curvature slots never reach the assembly") {
    const auto l = make_standard_algebra("su2");
    Curvature f(3, 4);
    f.set(0, 2, 2, Scalar());
    CHECK(assemble_constraint_system(l, Metric::minkowski(), f, BilinearForm::identity(3)).matrix.is_zero());
    Curvature g(3, 4);
    g.set(1, 2, 3, Scalar(1));
    const auto m = assemble_constraint_system(l, Metric::minkowski(), g, BilinearForm::identity(3)).matrix;
    for (std::size_t nu = 0; nu < 4; ++nu)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t z = 0; z < 3; ++z) CHECK(m(nu * 3 + b, nu * 3 + z).is_zero());
}

TEST_CASE("centralizer elements give constant kernel fields") {
    const auto l = make_standard_algebra("su3");
    ScalarGen gen(17);
    // All slots in the Cartan subalgebra span{b3, b8}.
    Curvature f(8, 4);
    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t nu = mu + 1; nu < 4; ++nu) {
            f.set(2, mu, nu, gen.sparse_scalar());
            f.set(7, mu, nu, gen.sparse_scalar());
        }
    const auto sys = assemble_constraint_system(l, Metric::minkowski(), f, BilinearForm::identity(8));
    Element x = Element::zero(8);
    x.coords[2] = gen.scalar();
    x.coords[7] = gen.scalar();
    CHECK(is_zero(sys.matrix.apply(VariationField::constant(x, 4).flatten())));
    // b1 does not commute with b3, so a nonzero b3 slot excludes it.
    Curvature h(8, 4);
    h.set(2, 0, 1, Scalar(1));
    const auto sys_h = assemble_constraint_system(l, Metric::minkowski(), h, BilinearForm::identity(8));
    CHECK_FALSE(is_zero(sys_h.matrix.apply(VariationField::constant(Element::basis(8, 0), 4).flatten())));
}

TEST_CASE("assembly rejects inconsistent inputs") {
    const auto l = make_standard_algebra("su2");
    CHECK_THROWS_AS(assemble_constraint_system(l, Metric::minkowski(), Curvature(4, 4), BilinearForm::identity(3)),
                    DimensionError);
    CHECK_THROWS_AS(assemble_constraint_system(l, Metric::minkowski(3), Curvature(3, 4), BilinearForm::identity(3)),
                    DimensionError);
    CHECK_THROWS_AS(assemble_constraint_system(l, Metric::minkowski(), Curvature(3, 4), BilinearForm::identity(2)),
                    DimensionError);
    CHECK_THROWS_AS(assemble_constraint_system(l, Metric::minkowski(), Curvature(3, 4), BilinearForm(Matrix(3, 3))),
                    SingularMatrix);
}

TEST_CASE("fundamental restriction") {
    const auto l = make_standard_algebra("su2+u1");
    const auto sys = assemble_constraint_system(l, Metric::minkowski(), equal_component_01(4, 3), BilinearForm::identity(4));

    SUBCASE("zero connection gives the zero system") {
        const auto r = restrict_to_fundamental(l, sys, Connection{Matrix(4, 4)});
        CHECK(r.matrix.rows() == 16);
        CHECK(r.matrix.cols() == 4);
        CHECK(r.matrix.is_zero());
        CHECK(r.unknowns == Unknowns::algebra);
        CHECK(r.provenance.omega.has_value());
    }
    SUBCASE("abelian algebra gives the zero system") {
        const auto u1 = make_standard_algebra("u1");
        Curvature f(1, 4);
        f.set(0, 0, 1, Scalar(1));
        const auto s = assemble_constraint_system(u1, Metric::minkowski(), f, BilinearForm::identity(1));
        ScalarGen gen(2);
        const auto r = restrict_to_fundamental(u1, s, Connection{gen.matrix(1, 4, false)});
        CHECK(r.matrix.is_zero());
        CHECK(nullspace(r.matrix).dim() == 1);
    }
    SUBCASE("generic connection leaves only the u1 generator") {
        ScalarGen gen(42);
        SubspaceBasis kernel = SubspaceBasis::whole(4);
        for (int k = 0; k < 3; ++k)
            kernel = intersect(kernel, nullspace(restrict_to_fundamental(l, sys, Connection{gen.matrix(4, 4, false)}).matrix));
        CHECK(kernel.same_span(SubspaceBasis(4, {Element::basis(4, 3).coords})));
    }
    SUBCASE("substitution agrees with the explicit variation field") {
        ScalarGen gen(8);
        const Connection omega{gen.matrix(4, 4)};
        const auto r = restrict_to_fundamental(l, sys, omega);
        const Vector x{gen.scalar(), gen.scalar(), gen.scalar(), gen.scalar()};
        VariationField xi{Matrix(4, 4)};
        for (std::size_t alpha = 0; alpha < 4; ++alpha) {
            const auto img = bracket(l, {x}, omega.slot(alpha));
            for (std::size_t z = 0; z < 4; ++z) xi.xi(z, alpha) = img.coords[z];
        }
        CHECK(r.matrix.apply(x) == sys.matrix.apply(xi.flatten()));
    }
    SUBCASE("errors") {
        const auto r = restrict_to_fundamental(l, sys, Connection{Matrix(4, 4)});
        CHECK_THROWS_AS(restrict_to_fundamental(l, r, Connection{Matrix(4, 4)}), std::invalid_argument);
        CHECK_THROWS_AS(restrict_to_fundamental(l, sys, Connection{Matrix(4, 3)}), DimensionError);
        CHECK_THROWS_AS(restrict_to_fundamental(make_standard_algebra("su2"), sys, Connection{Matrix(4, 4)}),
                        DimensionError);
    }
}

TEST_CASE("Yang-Mills density") {
    const auto l = make_standard_algebra("su2");
    const auto delta = BilinearForm::identity(3);
    CHECK(yang_mills_density(l, Metric::minkowski(), delta, Curvature(3, 4)) == Scalar());
    Curvature f(3, 4);
    f.set(0, 0, 1, Scalar(1));
    CHECK(yang_mills_density(l, Metric::minkowski(), delta, f) == Scalar(Rational(1, 2)));
    CHECK(yang_mills_density(l, Metric::minkowski(), delta, Scalar(2) * f) == Scalar(2));
    // Purely spatial slot: eta^11 eta^22 = +1, so the sign flips.
    Curvature g(3, 4);
    g.set(1, 1, 2, Scalar(1));
    CHECK(yang_mills_density(l, Metric::minkowski(), delta, g) == Scalar(Rational(-1, 2)));

    ScalarGen gen(3);
    for (int trial = 0; trial < 5; ++trial) {
        const Curvature h = random_curvature(gen, 3, 4);
        const Scalar s = gen.scalar();
        CHECK(yang_mills_density(l, Metric::minkowski(), delta, s * h) ==
              s * s * yang_mills_density(l, Metric::minkowski(), delta, h));
    }
    CHECK_THROWS_AS(yang_mills_density(l, Metric::minkowski(), BilinearForm::identity(2), f), DimensionError);
}
