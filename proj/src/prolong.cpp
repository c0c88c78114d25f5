#include "jred/prolong.hpp"

#include <string>
#include <utility>

namespace jred {

namespace {

SubspaceBasis coordinate_block(std::size_t ambient, std::size_t begin, std::size_t size) {
    std::vector<Vector> v;
    for (std::size_t i = begin; i < begin + size; ++i) v.push_back(Element::basis(ambient, i).coords);
    return v.empty() ? SubspaceBasis(ambient) : SubspaceBasis(ambient, std::move(v));
}

ProlongationAlgebra build(const LieAlgebra& g, std::size_t n, bool with_frame) {
    if (n == 0) throw DimensionError("prolongation order n must be positive");
    ProlongationAlgebra p;
    p.g_dim = g.dim();
    p.n = n;
    p.has_frame = with_frame;
    const std::size_t N = g.dim();

    std::vector<std::string> labels = g.labels();
    for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t a = 0; a < N; ++a) labels.push_back("jet(" + g.labels()[a] + "," + std::to_string(mu) + ")");
    if (with_frame)
        for (std::size_t mu = 0; mu < n; ++mu)
            for (std::size_t nu = 0; nu < n; ++nu)
                labels.push_back("frame(" + std::to_string(mu) + "," + std::to_string(nu) + ")");

    std::vector<StructureConstant> constants = g.constants();
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            for (const auto& t : g.bracket_terms(a, b))
                for (std::size_t mu = 0; mu < n; ++mu)
                    constants.push_back({p.jet_index(t.index, mu), a, p.jet_index(b, mu), t.value});

    std::vector<GradingBlock> grading{{"g", 0, N}, {"jet", N, n * N}};
    std::string name = "t1_" + std::to_string(n) + "(" + g.name() + ")";
    if (with_frame) {
        name = "w11_" + std::to_string(n) + "(" + g.name() + ")";
        const LieAlgebra gl = make_standard_algebra(AlgebraSpec{AlgebraSpec::Kind::gl, n, {}});
        const std::size_t offset = p.frame_index(0, 0);
        for (const auto& c : gl.constants()) constants.push_back({c.a + offset, c.b + offset, c.c + offset, c.value});
        // [b^mu_nu, b_A^rho] = -delta^rho_mu b_A^nu, stored as [b_A^mu, b^mu_nu] = b_A^nu.
        for (std::size_t mu = 0; mu < n; ++mu)
            for (std::size_t nu = 0; nu < n; ++nu)
                for (std::size_t a = 0; a < N; ++a)
                    constants.push_back({p.jet_index(a, nu), p.jet_index(a, mu), p.frame_index(mu, nu), Scalar(1)});
        grading.push_back({"frame", offset, n * n});
    }
    p.algebra = LieAlgebra(std::move(name), std::move(labels), std::move(constants), std::move(grading));
    return p;
}

}  // namespace

SubspaceBasis ProlongationAlgebra::g_block() const { return coordinate_block(dim(), 0, g_dim); }
SubspaceBasis ProlongationAlgebra::jet_block() const { return coordinate_block(dim(), g_dim, n * g_dim); }
SubspaceBasis ProlongationAlgebra::frame_block() const {
    return coordinate_block(dim(), g_dim + n * g_dim, has_frame ? n * n : 0);
}

ProlongationAlgebra t1n_algebra(const LieAlgebra& g, std::size_t n) { return build(g, n, false); }
ProlongationAlgebra w11_algebra(const LieAlgebra& g, std::size_t n) { return build(g, n, true); }

Matrix adjoint_matrix(const LieAlgebra& l, const Element& x) {
    const std::size_t n = l.dim();
    if (x.dim() != n) throw DimensionError("adjoint_matrix argument dimension mismatch");
    Matrix ad(n, n);
    for (std::size_t b = 0; b < n; ++b) {
        Element col = bracket(l, x, Element::basis(n, b));
        for (std::size_t a = 0; a < n; ++a) ad(a, b) = col.coords[a];
    }
    return ad;
}

GroupJetData GroupJetData::identity(std::size_t g_dim, std::size_t n) {
    return {Matrix::identity(g_dim), Matrix(g_dim, n), Matrix::identity(n)};
}

void GroupJetData::check() const {
    if (ad.rows() != ad.cols()) throw DimensionError("Ad matrix must be square");
    if (alpha.rows() != alpha.cols()) throw DimensionError("alpha must be square");
    if (g_sigma.rows() != ad.rows() || g_sigma.cols() != alpha.rows())
        throw DimensionError("g_sigma must be N x n");
    if (determinant(alpha).is_zero()) throw SingularMatrix("alpha is singular");
    if (determinant(ad).is_zero()) throw SingularMatrix("Ad matrix is singular");
}

Matrix zeta_action(const GroupJetData& jd, const Matrix& f) {
    jd.check();
    if (f.rows() != jd.g_sigma.rows() || f.cols() != jd.g_sigma.cols())
        throw DimensionError("connection coordinates must be N x n");
    return jd.ad * (f - jd.g_sigma) * inverse(jd.alpha);
}

GroupJetData compose(const GroupJetData& first, const GroupJetData& second) {
    first.check();
    second.check();
    if (first.ad.rows() != second.ad.rows() || first.alpha.rows() != second.alpha.rows())
        throw DimensionError("composing jet data of different shapes");
    return {first.ad * second.ad, second.g_sigma + inverse(second.ad) * first.g_sigma * second.alpha,
            first.alpha * second.alpha};
}

}  // namespace jred
