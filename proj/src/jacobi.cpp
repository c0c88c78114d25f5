#include "jred/jacobi.hpp"

#include <algorithm>

namespace jred {

Metric Metric::minkowski(std::size_t n) {
    Metric m;
    m.signs.assign(n, Scalar(-1));
    if (n > 0) m.signs[0] = Scalar(1);
    return m;
}

void Metric::check() const {
    if (signs.empty()) throw ConfigError("signature must not be empty");
    for (const auto& s : signs)
        if (s != Scalar(1) && s != Scalar(-1)) throw ConfigError("signature entries must be ±1");
}

void Curvature::set(std::size_t a, std::size_t mu, std::size_t nu, const Scalar& value) {
    if (a >= g_dim_ || mu >= n_ || nu >= n_) throw DimensionError("curvature index out of range");
    if (mu == nu) {
        if (!value.is_zero()) throw DimensionError("curvature is antisymmetric; diagonal slots must vanish");
        return;
    }
    values_[(a * n_ + mu) * n_ + nu] = value;
    values_[(a * n_ + nu) * n_ + mu] = -value;
}

Element Curvature::element(std::size_t mu, std::size_t nu) const {
    Element e = Element::zero(g_dim_);
    for (std::size_t a = 0; a < g_dim_; ++a) e.coords[a] = (*this)(a, mu, nu);
    return e;
}

bool Curvature::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Curvature operator+(const Curvature& x, const Curvature& y) {
    if (x.g_dim_ != y.g_dim_ || x.n_ != y.n_) throw DimensionError("curvature shapes differ");
    Curvature out = x;
    for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] += y.values_[i];
    return out;
}

Curvature operator*(const Scalar& s, const Curvature& f) {
    Curvature out = f;
    for (auto& v : out.values_) v *= s;
    return out;
}

Vector VariationField::flatten() const {
    Vector v(xi.rows() * xi.cols());
    for (std::size_t alpha = 0; alpha < xi.cols(); ++alpha)
        for (std::size_t z = 0; z < xi.rows(); ++z) v[alpha * xi.rows() + z] = xi(z, alpha);
    return v;
}

VariationField VariationField::constant(const Element& x, std::size_t n) {
    VariationField f{Matrix(x.dim(), n)};
    for (std::size_t alpha = 0; alpha < n; ++alpha)
        for (std::size_t z = 0; z < x.dim(); ++z) f.xi(z, alpha) = x.coords[z];
    return f;
}

ConstraintSystem assemble_constraint_system(const LieAlgebra& l, const Metric& eta, const Curvature& f,
                                           const BilinearForm& delta) {
    eta.check();
    const std::size_t N = l.dim();
    const std::size_t n = eta.n();
    if (f.g_dim() != N || f.n() != n) throw DimensionError("curvature shape does not match algebra and metric");
    if (delta.dim() != N) throw DimensionError("delta form dimension does not match algebra");
    if (!delta.nondegenerate()) throw SingularMatrix("delta form is not invertible");

    ConstraintSystem sys;
    sys.g_dim = N;
    sys.n = n;
    sys.unknowns = Unknowns::slot_components;
    sys.matrix = Matrix(n * N, n * N);
    for (std::size_t nu = 0; nu < n; ++nu)
        for (std::size_t b = 0; b < N; ++b) sys.row_index.emplace_back(nu, b);
    sys.provenance = {l.name(), eta, f, delta, std::nullopt};

    for (std::size_t nu = 0; nu < n; ++nu)
        for (std::size_t alpha = 0; alpha < n; ++alpha) {
            if (alpha == nu) continue;
            const Element source = f.element(alpha, nu);
            if (is_zero(source.coords)) continue;
            const Scalar sign = eta.inverse_diag(nu) * eta.inverse_diag(alpha);
            for (std::size_t b = 0; b < N; ++b) {
                // sum_D F^D_{alpha nu} c^A_{DB} = [F_{alpha nu}, b_B]^A, lowered by delta.
                const Vector lowered = delta.matrix().apply(bracket(l, source, Element::basis(N, b)).coords);
                for (std::size_t z = 0; z < N; ++z)
                    if (!lowered[z].is_zero()) sys.matrix(sys.row(nu, b), sys.column(alpha, z)) = sign * lowered[z];
            }
        }
    return sys;
}

ConstraintSystem restrict_to_fundamental(const LieAlgebra& l, const ConstraintSystem& sys, const Connection& omega) {
    if (sys.unknowns != Unknowns::slot_components) throw std::invalid_argument("constraint system is already restricted");
    const std::size_t N = sys.g_dim;
    const std::size_t n = sys.n;
    if (l.dim() != N) throw DimensionError("algebra does not match constraint system");
    if (omega.omega.rows() != N || omega.omega.cols() != n) throw DimensionError("connection must be N x n");

    // Column L of the substitution: Xi_alpha = [b_L, omega_alpha].
    Matrix substitution(n * N, N);
    for (std::size_t alpha = 0; alpha < n; ++alpha) {
        const Element w = omega.slot(alpha);
        if (is_zero(w.coords)) continue;
        for (std::size_t lidx = 0; lidx < N; ++lidx) {
            const Element img = bracket(l, Element::basis(N, lidx), w);
            for (std::size_t z = 0; z < N; ++z) substitution(alpha * N + z, lidx) = img.coords[z];
        }
    }

    ConstraintSystem out = sys;
    out.matrix = sys.matrix * substitution;
    out.unknowns = Unknowns::algebra;
    out.provenance.omega = omega;
    return out;
}

Scalar yang_mills_density(const LieAlgebra& l, const Metric& eta, const BilinearForm& delta, const Curvature& f) {
    eta.check();
    const std::size_t N = l.dim();
    const std::size_t n = eta.n();
    if (f.g_dim() != N || f.n() != n || delta.dim() != N) throw DimensionError("density inputs have mismatched shapes");
    Scalar sum;
    for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu) {
            if (mu == nu) continue;
            const Element slot = f.element(mu, nu);
            if (is_zero(slot.coords)) continue;
            sum += eta.inverse_diag(mu) * eta.inverse_diag(nu) * delta(slot.coords, slot.coords);
        }
    return Scalar(Rational(-1, 4)) * sum;
}

}  // namespace jred
