#pragma once

#include "jred/lie.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jred {

/// Diagonal metric eta = diag(signs); every entry is exactly +1 or -1.
struct Metric {
    std::vector<Scalar> signs;

    /// diag(+,-,...,-) in dimension n.
    static Metric minkowski(std::size_t n = 4);
    std::size_t n() const { return signs.size(); }
    /// Throws ConfigError("signature entries must be ±1").
    void check() const;
    /// eta^{mu mu}; equals eta_{mu mu} for a diagonal +-1 metric.
    const Scalar& inverse_diag(std::size_t mu) const { return signs.at(mu); }
};

/// Field strength F^A_{mu nu} at a point, antisymmetric in (mu, nu).
class Curvature {
public:
    Curvature() = default;
    Curvature(std::size_t g_dim, std::size_t n) : g_dim_(g_dim), n_(n), values_(g_dim * n * n) {}

    std::size_t g_dim() const { return g_dim_; }
    std::size_t n() const { return n_; }

    /// Stores value at (mu, nu) and -value at (nu, mu). Throws DimensionError
    /// on a nonzero diagonal slot or an out-of-range index.
    void set(std::size_t a, std::size_t mu, std::size_t nu, const Scalar& value);
    const Scalar& operator()(std::size_t a, std::size_t mu, std::size_t nu) const {
        return values_[(a * n_ + mu) * n_ + nu];
    }
    /// F_{mu nu} = F^D_{mu nu} b_D.
    Element element(std::size_t mu, std::size_t nu) const;
    bool is_zero() const;

    friend Curvature operator+(const Curvature& x, const Curvature& y);
    friend Curvature operator*(const Scalar& s, const Curvature& f);
    friend bool operator==(const Curvature&, const Curvature&) = default;

private:
    std::size_t g_dim_ = 0;
    std::size_t n_ = 0;
    std::vector<Scalar> values_;
};

/// Xi^Z_alpha stored as an N x n matrix (row Z, column alpha).
struct VariationField {
    Matrix xi;
    /// Unknown ordering used by ConstraintSystem: index alpha*N + Z.
    Vector flatten() const;
    static VariationField constant(const Element& x, std::size_t n);
};

/// omega^M_alpha stored as an N x n matrix (row M, column alpha).
struct Connection {
    Matrix omega;
    /// omega_alpha = omega^M_alpha b_M.
    Element slot(std::size_t alpha) const { return {omega.column(alpha)}; }
};

enum class Unknowns {
    /// Xi^Z_alpha, column alpha*N + Z.
    slot_components,
    /// Xi^L of a fundamental field, column L.
    algebra,
};

struct ConstraintSystem {
    struct Provenance {
        std::string algebra;
        Metric eta;
        Curvature curvature;
        BilinearForm delta;
        std::optional<Connection> omega;
    };

    Matrix matrix;
    /// Row r corresponds to (nu, B) = row_index[r].
    std::vector<std::pair<std::size_t, std::size_t>> row_index;
    Unknowns unknowns = Unknowns::slot_components;
    std::size_t g_dim = 0;
    std::size_t n = 0;
    Provenance provenance;

    std::size_t row(std::size_t nu, std::size_t b) const { return nu * g_dim + b; }
    std::size_t column(std::size_t alpha, std::size_t z) const { return alpha * g_dim + z; }
};

/// Row (nu, B), column (alpha, Z):  eta^{nu nu} eta^{alpha alpha} F^D_{alpha nu} c_{DBZ}
/// with c_{DBZ} = delta_{ZA} c^A_{DB}; no sum over the repeated diagonal metric indices.
/// For n = 4 and diag(+,-,-,-) the rows are the four algebraic constraint equations
/// of the antisymmetric part of the Yang-Mills Jacobi equation.
ConstraintSystem assemble_constraint_system(const LieAlgebra& l, const Metric& eta, const Curvature& f,
                                           const BilinearForm& delta);

/// Substitutes Xi^Z_alpha = c^Z_{LM} Xi^L omega^M_alpha (constant-parameter gauge
/// fields), leaving N unknowns Xi^L.
ConstraintSystem restrict_to_fundamental(const LieAlgebra& l, const ConstraintSystem& sys, const Connection& omega);

/// -1/4 delta_ab eta^{mu rho} eta^{nu sigma} F^a_{mu nu} F^b_{rho sigma}.
Scalar yang_mills_density(const LieAlgebra& l, const Metric& eta, const BilinearForm& delta, const Curvature& f);

}  // namespace jred
