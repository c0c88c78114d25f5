#include "jred/linalg.hpp"

#include <algorithm>
#include <utility>

namespace jred {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("row length mismatch");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw DimensionError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
    return Vector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector dimension mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
        }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum dimension mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference dimension mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix out = m;
    for (auto& x : out.data_) x *= s;
    return out;
}

namespace {

// Multiplies a row by the lcm of all its denominators so that every entry
// lies in Z[sqrt3].
void clear_denominators(Matrix& m, std::size_t r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const Scalar& s = m(r, c);
        if (s.is_zero()) continue;
        mpz_class d1 = s.rat().denominator();
        mpz_class d2 = s.irr().denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d1.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d2.get_mpz_t());
    }
    if (l == 1) return;
    const Scalar factor{Rational(mpq_class(l))};
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero()) m(r, c) *= factor;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// Fraction-free forward elimination. Returns the pivot columns; rows past
// the rank are zero on return.
std::vector<std::size_t> bareiss_forward(Matrix& m) {
    std::vector<std::size_t> pivots;
    Scalar previous(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        swap_rows(m, p, r);
        const Scalar pivot = m(r, c);
        for (std::size_t k = r + 1; k < m.rows(); ++k) {
            const Scalar lead = m(k, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                Scalar v = pivot * m(k, j);
                if (!lead.is_zero() && !m(r, j).is_zero()) v -= lead * m(r, j);
                m(k, j) = v.is_zero() ? Scalar() : v / previous;
            }
            m(k, c) = Scalar();
        }
        previous = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RrefResult rref(const Matrix& input) {
    Matrix m = input;
    for (std::size_t r = 0; r < m.rows(); ++r) clear_denominators(m, r);
    std::vector<std::size_t> pivots = bareiss_forward(m);

    for (std::size_t i = pivots.size(); i-- > 0;) {
        const std::size_t pc = pivots[i];
        const Scalar inv = m(i, pc).inverse();
        for (std::size_t j = pc; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) m(i, j) *= inv;
        for (std::size_t k = 0; k < i; ++k) {
            const Scalar factor = m(k, pc);
            if (factor.is_zero()) continue;
            for (std::size_t j = pc; j < m.cols(); ++j)
                if (!m(i, j).is_zero()) m(k, j) -= factor * m(i, j);
        }
    }
    const std::size_t r = pivots.size();
    return RrefResult{std::move(m), std::move(pivots), r};
}

std::size_t rank(const Matrix& input) {
    Matrix m = input;
    for (std::size_t r = 0; r < m.rows(); ++r) clear_denominators(m, r);
    return bareiss_forward(m).size();
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    RrefResult res = rref(aug);
    if (res.rank < n || (n > 0 && res.pivots[n - 1] != n - 1)) throw SingularMatrix("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = res.reduced(i, n + j);
    return inv;
}

Scalar determinant(const Matrix& input) {
    if (input.rows() != input.cols()) throw DimensionError("determinant of a non-square matrix");
    Matrix m = input;
    const std::size_t n = m.rows();
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Scalar();
        if (p != c) {
            swap_rows(m, p, c);
            det = -det;
        }
        det *= m(c, c);
        const Scalar inv = m(c, c).inverse();
        for (std::size_t k = c + 1; k < n; ++k) {
            if (m(k, c).is_zero()) continue;
            const Scalar f = m(k, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(k, j) -= f * m(c, j);
        }
    }
    return det;
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> independent)
    : ambient_(ambient_dim), vectors_(std::move(independent)) {
    for (const auto& v : vectors_)
        if (v.size() != ambient_) throw DimensionError("basis vector has wrong length");
    if (!vectors_.empty() && rank(Matrix::from_rows(vectors_, ambient_)) != vectors_.size())
        throw std::invalid_argument("basis vectors are linearly dependent");
}

SubspaceBasis SubspaceBasis::span_of(std::size_t ambient_dim, std::span<const Vector> vectors) {
    SubspaceBasis s(ambient_dim);
    if (vectors.empty()) return s;
    RrefResult res = rref(Matrix::from_rows(vectors, ambient_dim));
    for (std::size_t i = 0; i < res.rank; ++i) s.vectors_.push_back(res.reduced.row(i));
    return s;
}

SubspaceBasis SubspaceBasis::whole(std::size_t ambient_dim) {
    SubspaceBasis s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Vector e(ambient_dim);
        e[i] = Scalar(1);
        s.vectors_.push_back(std::move(e));
    }
    return s;
}

bool SubspaceBasis::contains(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw DimensionError("vector has wrong length");
    if (jred::is_zero(v)) return true;
    std::vector<Vector> rows = vectors_;
    rows.emplace_back(v.begin(), v.end());
    return rank(Matrix::from_rows(rows, ambient_)) == vectors_.size();
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("subspaces live in different ambient spaces");
    if (other.empty()) return true;
    std::vector<Vector> rows = vectors_;
    rows.insert(rows.end(), other.vectors_.begin(), other.vectors_.end());
    return rank(Matrix::from_rows(rows, ambient_)) == vectors_.size();
}

SubspaceBasis SubspaceBasis::canonical() const { return span_of(ambient_, vectors_); }

bool SubspaceBasis::same_span(const SubspaceBasis& other) const {
    return ambient_ == other.ambient_ && canonical().vectors_ == other.canonical().vectors_;
}

Matrix SubspaceBasis::as_columns() const { return Matrix::from_columns(vectors_, ambient_); }

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric()) throw std::invalid_argument("bilinear form must be square and symmetric");
}

Scalar BilinearForm::operator()(std::span<const Scalar> x, std::span<const Scalar> y) const {
    Vector gy = gram_.apply(y);
    if (x.size() != gy.size()) throw DimensionError("form argument has wrong length");
    Scalar s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !gy[i].is_zero()) s += x[i] * gy[i];
    return s;
}

SubspaceBasis nullspace(const Matrix& m) {
    RrefResult res = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : res.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < res.rank; ++i) v[res.pivots[i]] = -res.reduced(i, f);
        basis.push_back(std::move(v));
    }
    SubspaceBasis out(m.cols());
    // Free-column vectors are independent by construction.
    return basis.empty() ? out : SubspaceBasis(m.cols(), std::move(basis));
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("intersecting subspaces of different spaces");
    const std::size_t n = a.ambient_dim();
    if (a.empty() || b.empty()) return SubspaceBasis(n);
    // Solve sum x_i a_i - sum y_j b_j = 0.
    std::vector<Vector> cols = a.vectors();
    for (const auto& v : b.vectors()) cols.push_back(scaled(Scalar(-1), v));
    SubspaceBasis coeffs = nullspace(Matrix::from_columns(cols, n));
    std::vector<Vector> meet;
    for (const auto& c : coeffs.vectors()) {
        Vector v(n);
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!c[i].is_zero()) v = add(v, scaled(c[i], a.vectors()[i]));
        meet.push_back(std::move(v));
    }
    return SubspaceBasis::span_of(n, meet);
}

Complement orthogonal_complement(const BilinearForm& form, const SubspaceBasis& s) {
    if (form.dim() != s.ambient_dim()) throw DimensionError("form and subspace dimensions differ");
    const std::size_t n = s.ambient_dim();
    if (s.empty()) return {SubspaceBasis::whole(n), false};
    std::vector<Vector> rows;
    rows.reserve(s.dim());
    for (const auto& v : s.vectors()) rows.push_back(form.matrix().transpose().apply(v));
    Complement out{nullspace(Matrix::from_rows(rows, n)), false};
    Matrix sm = Matrix::from_rows(s.vectors(), n);
    out.degenerate = rank(sm * form.matrix() * sm.transpose()) < s.dim();
    return out;
}

Vector scaled(const Scalar& s, std::span<const Scalar> v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out[i] = s * v[i];
    return out;
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw DimensionError("vector sum dimension mismatch");
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) out[i] += b[i];
    return out;
}

bool is_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace jred
