#include "jred/reduction.hpp"

#include <random>
#include <stdexcept>

namespace jred {

void verify_kernel(const KernelBasis& k, const ConstraintSystem& sys) {
    if (k.mode != sys.unknowns || k.basis.ambient_dim() != sys.matrix.cols())
        throw InvariantError("kernel indexing does not match its constraint system");
    for (const auto& v : k.basis.vectors())
        if (!is_zero(sys.matrix.apply(v))) throw InvariantError("kernel vector does not annihilate the constraint system");
}

KernelBasis jacobi_kernel(const ConstraintSystem& sys) {
    KernelBasis k{sys.unknowns, nullspace(sys.matrix)};
    verify_kernel(k, sys);
    return k;
}

std::vector<Connection> sample_connections(std::size_t g_dim, std::size_t n, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Connection> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Connection c{Matrix(g_dim, n)};
        for (std::size_t m = 0; m < g_dim; ++m)
            for (std::size_t alpha = 0; alpha < n; ++alpha) {
                const long p = static_cast<long>(rng() % 11) - 5;
                const long q = static_cast<long>(rng() % 4) + 1;
                c.omega(m, alpha) = Scalar(Rational(p, q));
            }
        out.push_back(std::move(c));
    }
    return out;
}

KernelBasis generic_kernel(const LieAlgebra& l, const ConstraintSystem& sys, const std::vector<Connection>& connections) {
    if (connections.empty()) throw std::invalid_argument("generic kernel needs at least one connection");
    KernelBasis k{Unknowns::algebra, SubspaceBasis::whole(l.dim())};
    std::vector<ConstraintSystem> restricted;
    for (const auto& omega : connections) {
        restricted.push_back(restrict_to_fundamental(l, sys, omega));
        k.basis = intersect(k.basis, nullspace(restricted.back().matrix));
    }
    for (const auto& r : restricted) verify_kernel(k, r);
    return k;
}

ReducedAlgebra reduced_subalgebra(const LieAlgebra& l, const KernelBasis& k) {
    if (k.mode != Unknowns::algebra) throw std::invalid_argument("reduced_subalgebra needs a kernel over the algebra");
    if (k.basis.ambient_dim() != l.dim()) throw DimensionError("kernel ambient dimension does not match algebra");
    ReducedAlgebra r{make_subalgebra(l, k.basis), std::nullopt};
    if (!r.raw.closed) r.closure = make_subalgebra(l, bracket_closure(l, k.basis));
    return r;
}

ReductiveSplit reductive_split(const LieAlgebra& l, const Subalgebra& r, const BilinearForm& form) {
    if (!r.closed) throw std::invalid_argument("reductive_split requires a closed subalgebra");
    if (form.dim() != l.dim() || r.span.ambient_dim() != l.dim()) throw DimensionError("split inputs have mismatched dimensions");
    const Complement c = orthogonal_complement(form, r.span);
    ReductiveSplit s{r.span, c.space, {}, c.degenerate};
    s.checks.r_closed = is_closed(l, r.span);
    s.checks.direct_sum = intersect(s.r, s.v).empty() && s.r.dim() + s.v.dim() == l.dim();
    s.checks.reductive = true;
    for (const auto& x : s.r.vectors())
        for (const auto& y : s.v.vectors())
            if (!s.v.contains(bracket(l, {x}, {y}).coords)) s.checks.reductive = false;
    return s;
}

namespace {

Matrix invariant_gram(const AlgebraSpec& spec) {
    switch (spec.kind) {
        case AlgebraSpec::Kind::su2:
        case AlgebraSpec::Kind::su3: return killing_form(make_standard_algebra(spec)).matrix();
        case AlgebraSpec::Kind::u1: return Matrix::identity(1);
        case AlgebraSpec::Kind::gl: {
            // tr(E_ij E_kl) = delta_jk delta_il
            const std::size_t n = spec.n;
            Matrix g(n * n, n * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) g(i * n + j, j * n + i) = Scalar(1);
            return g;
        }
        case AlgebraSpec::Kind::direct_sum: {
            std::vector<Matrix> blocks;
            std::size_t total = 0;
            for (const auto& p : spec.parts) {
                blocks.push_back(invariant_gram(p));
                total += blocks.back().rows();
            }
            Matrix g(total, total);
            std::size_t offset = 0;
            for (const auto& b : blocks) {
                for (std::size_t r = 0; r < b.rows(); ++r)
                    for (std::size_t c = 0; c < b.cols(); ++c) g(offset + r, offset + c) = b(r, c);
                offset += b.rows();
            }
            return g;
        }
    }
    throw std::logic_error("unhandled algebra kind");
}

}  // namespace

BilinearForm standard_invariant_form(const AlgebraSpec& spec) { return BilinearForm(invariant_gram(spec)); }

}  // namespace jred
