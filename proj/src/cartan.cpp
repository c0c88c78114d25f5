#include "jred/cartan.hpp"

namespace jred {

bool rank_condition(const KernelBasis& k, std::size_t x_dim) { return k.dim() == x_dim; }

std::string rank_condition_note(const KernelBasis& k, std::size_t x_dim) {
    const std::string dims = "dim ker = " + std::to_string(k.dim()) + ", dim X = " + std::to_string(x_dim);
    if (k.dim() == 0) return "trivial kernel: " + dims;
    return (k.dim() == x_dim ? "rank condition holds: " : "rank condition fails: ") + dims;
}

namespace {

void require(bool ok, const char* invariant, const std::string& detail) {
    if (!ok) throw CartanPreconditionError(invariant, detail);
}

void check_model(const SplitModel& m, const Matrix& p) {
    const std::size_t t = m.total_dim;
    require(m.vertical.ambient_dim() == t && m.horizontal.ambient_dim() == t && m.tq.ambient_dim() == t,
            "ambient dimension", "all subspaces must live in the total space");
    require(m.vertical.dim() + m.horizontal.dim() == t && intersect(m.vertical, m.horizontal).empty(),
            "vertical + horizontal = total", "the two models must be complementary");
    require(m.k_dim <= m.w_dim, "k inside w", "k_dim exceeds w_dim");
    require(p.rows() == m.w_dim && p.cols() == m.vertical.dim() && p.rows() == p.cols() && !determinant(p).is_zero(),
            "parallelism is an isomorphism", "expected an invertible w_dim x dim(vertical) matrix");
    if (m.brackets) {
        require(m.brackets->vertical_algebra.dim() == m.vertical.dim() && m.brackets->w_algebra.dim() == m.w_dim &&
                    m.brackets->k.ambient_dim() == m.w_dim && m.brackets->k.dim() == m.k_dim,
                "bracket data dimensions", "vertical algebra, W algebra and K must match the model");
    }
}

// Coordinates of x in the basis [vertical | horizontal].
Vector split_coordinates(const SplitModel& m, std::span<const Scalar> x) {
    std::vector<Vector> cols = m.vertical.vectors();
    cols.insert(cols.end(), m.horizontal.vectors().begin(), m.horizontal.vectors().end());
    return inverse(Matrix::from_columns(cols, m.total_dim)).apply(x);
}

Vector vertical_part(const SplitModel& m, std::span<const Scalar> x) {
    Vector c = split_coordinates(m, x);
    c.resize(m.vertical.dim());
    return c;
}

// Solves basis * c = x for a vector known to lie in the span.
Vector coordinates_in(const SubspaceBasis& s, std::span<const Scalar> x) {
    Matrix aug(s.ambient_dim(), s.dim() + 1);
    for (std::size_t j = 0; j < s.dim(); ++j)
        for (std::size_t i = 0; i < s.ambient_dim(); ++i) aug(i, j) = s.vectors()[j][i];
    for (std::size_t i = 0; i < s.ambient_dim(); ++i) aug(i, s.dim()) = x[i];
    const RrefResult r = rref(aug);
    Vector c(s.dim());
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
        if (r.pivots[k] == s.dim()) throw InvariantError("vector is not in the span");
        c[r.pivots[k]] = r.reduced(k, s.dim());
    }
    return c;
}

}  // namespace

CartanCheck cartan_restriction(const SplitModel& m, const Matrix& p) {
    check_model(m, p);
    CartanCheck out;
    out.rank_condition = m.kernel_dim == m.x_dim;
    out.transversal = intersect(m.tq, m.horizontal).empty();
    out.dim_match = m.w_dim - m.k_dim == m.x_dim;
    if (!(out.rank_condition && out.transversal && out.dim_match)) return out;

    // Project T_qQ along the horizontal model onto the vertical one, then apply the parallelism.
    Matrix restriction(m.w_dim, m.tq.dim());
    for (std::size_t j = 0; j < m.tq.dim(); ++j) {
        const Vector img = p.apply(vertical_part(m, m.tq.vectors()[j]));
        for (std::size_t i = 0; i < m.w_dim; ++i) restriction(i, j) = img[i];
    }
    out.injective = rank(restriction) == m.tq.dim();

    bool agrees = true;
    const SubspaceBasis vertical_tq = intersect(m.tq, m.vertical);
    for (const auto& u : vertical_tq.vectors()) {
        const Vector via_tq = restriction.apply(coordinates_in(m.tq, u));
        const Vector direct = p.apply(coordinates_in(m.vertical, u));
        agrees = agrees && via_tq == direct;
    }
    out.agrees_on_vertical = agrees;

    bool ok = *out.injective && agrees;
    if (m.brackets) {
        const BracketData& b = *m.brackets;
        // K-block: tq vectors whose image lies in K.  Solve restriction * c = K * d.
        Matrix joint(m.w_dim, m.tq.dim() + m.k_dim);
        for (std::size_t i = 0; i < m.w_dim; ++i) {
            for (std::size_t j = 0; j < m.tq.dim(); ++j) joint(i, j) = restriction(i, j);
            for (std::size_t j = 0; j < m.k_dim; ++j) joint(i, m.tq.dim() + j) = -b.k.vectors()[j][i];
        }
        std::vector<Vector> block;
        const SubspaceBasis solutions = nullspace(joint);
        for (const auto& v : solutions.vectors()) {
            Vector c(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m.tq.dim()));
            if (!is_zero(c)) block.push_back(c);
        }
        const SubspaceBasis k_block = SubspaceBasis::span_of(m.tq.dim(), block);
        out.k_block_onto = k_block.dim() == m.k_dim;

        // Vertical coordinates of each tq basis vector.
        std::vector<Vector> vert;
        for (const auto& t : m.tq.vectors()) vert.push_back(vertical_part(m, t));
        auto vertical_of = [&](std::span<const Scalar> c) {
            Vector acc(m.vertical.dim());
            for (std::size_t j = 0; j < c.size(); ++j)
                if (!c[j].is_zero()) acc = add(acc, scaled(c[j], vert[j]));
            return acc;
        };
        bool preserved = true;
        for (const auto& kc : k_block.vectors()) {
            const Vector kv = vertical_of(kc);
            for (const auto& tv : vert) {
                const Vector lhs = p.apply(bracket(b.vertical_algebra, {kv}, {tv}).coords);
                const Vector rhs = bracket(b.w_algebra, {p.apply(kv)}, {p.apply(tv)}).coords;
                preserved = preserved && lhs == rhs;
            }
        }
        out.brackets_preserved = preserved;
        ok = ok && *out.k_block_onto && preserved;
    }
    if (ok) out.restriction = std::move(restriction);
    return out;
}

}  // namespace jred
