#pragma once

#include "jred/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace jred {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
    static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    bool is_zero() const;
    bool is_symmetric() const;

    Matrix transpose() const;
    Vector apply(std::span<const Scalar> v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row echelon form.
///
/// Rows are first scaled to clear denominators, then eliminated fraction-free
/// (Bareiss) with the first-nonzero pivot rule, and finally back-substituted
/// to the canonical form with unit pivots.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Matrix inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Sequence of linearly independent vectors in a space of fixed dimension.
class SubspaceBasis {
public:
    explicit SubspaceBasis(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

    /// Throws std::invalid_argument if the vectors are dependent.
    SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> independent);

    /// Span of arbitrary vectors, stored in canonical (rref) form.
    static SubspaceBasis span_of(std::size_t ambient_dim, std::span<const Vector> vectors);
    static SubspaceBasis whole(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return vectors_.size(); }
    bool empty() const { return vectors_.empty(); }
    const std::vector<Vector>& vectors() const { return vectors_; }

    bool contains(std::span<const Scalar> v) const;
    bool contains(const SubspaceBasis& other) const;

    /// Nonzero rows of the rref of the basis; equal spans give equal results.
    SubspaceBasis canonical() const;
    bool same_span(const SubspaceBasis& other) const;

    /// Basis vectors as the columns of an ambient_dim x dim matrix.
    Matrix as_columns() const;

private:
    std::size_t ambient_;
    std::vector<Vector> vectors_;
};

/// Symmetric bilinear form given by its Gram matrix.
class BilinearForm {
public:
    BilinearForm() = default;
    /// Throws std::invalid_argument unless the matrix is square and symmetric.
    explicit BilinearForm(Matrix gram);

    static BilinearForm identity(std::size_t n) { return BilinearForm(Matrix::identity(n)); }

    const Matrix& matrix() const { return gram_; }
    std::size_t dim() const { return gram_.rows(); }
    Scalar operator()(std::span<const Scalar> x, std::span<const Scalar> y) const;
    bool nondegenerate() const { return rank(gram_) == gram_.rows(); }

private:
    Matrix gram_;
};

SubspaceBasis nullspace(const Matrix& m);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

struct Complement {
    SubspaceBasis space;
    /// The form restricted to the input subspace is singular.
    bool degenerate = false;
};

Complement orthogonal_complement(const BilinearForm& form, const SubspaceBasis& s);

Vector scaled(const Scalar& s, std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
bool is_zero(std::span<const Scalar> v);

}  // namespace jred
