#pragma once

#include "jred/lie.hpp"

#include <cstddef>

namespace jred {

/// t^1_n g (and optionally its semidirect product with gl(n)) with the block
/// layout  g: [0, N)  jet: N + mu*N + A  frame: N + n*N + mu*n + nu.
struct ProlongationAlgebra {
    LieAlgebra algebra;
    std::size_t g_dim = 0;
    std::size_t n = 0;
    bool has_frame = false;

    std::size_t dim() const { return algebra.dim(); }
    std::size_t g_index(std::size_t a) const { return a; }
    std::size_t jet_index(std::size_t a, std::size_t mu) const { return g_dim + mu * g_dim + a; }
    std::size_t frame_index(std::size_t mu, std::size_t nu) const { return g_dim + n * g_dim + mu * n + nu; }

    SubspaceBasis g_block() const;
    SubspaceBasis jet_block() const;
    SubspaceBasis frame_block() const;
};

/// Brackets: [b_A, b_B] from g, [b_A, b_B^mu] = c^C_{AB} b_C^mu, [b_A^mu, b_B^nu] = 0.
ProlongationAlgebra t1n_algebra(const LieAlgebra& g, std::size_t n);

/// t1n_algebra plus the frame block b^mu_nu with the gl(n) bracket
/// [b^mu_nu, b^rho_sigma] = delta^rho_nu b^mu_sigma - delta^mu_sigma b^rho_nu,
/// acting on jets by [b^mu_nu, b_A^rho] = -delta^rho_mu b_A^nu and trivially on g.
ProlongationAlgebra w11_algebra(const LieAlgebra& g, std::size_t n);

/// Column B holds the coordinates of [x, b_B].
Matrix adjoint_matrix(const LieAlgebra& l, const Element& x);

/// Coordinates (Ad_g, g_sigma, alpha) of an element of W^{(1,1)}_n G as far as
/// the action on connection coordinates needs them.
struct GroupJetData {
    Matrix ad;       // N x N, invertible
    Matrix g_sigma;  // N x n
    Matrix alpha;    // n x n, invertible

    static GroupJetData identity(std::size_t g_dim, std::size_t n);
    /// Throws DimensionError or SingularMatrix when the invariants fail.
    void check() const;
};

/// f'^a_nu = (Ad)^a_b (f^b_sigma - g^b_sigma) (alpha^-1)^sigma_nu.
Matrix zeta_action(const GroupJetData& jd, const Matrix& f);

/// Group product restricted to these coordinates:
/// (Ad1, g1, a1) . (Ad2, g2, a2) = (Ad1 Ad2, g2 + Ad2^-1 g1 a2, a1 a2),
/// so that zeta(first . second, f) = zeta(first, zeta(second, f)).
GroupJetData compose(const GroupJetData& first, const GroupJetData& second);

}  // namespace jred
