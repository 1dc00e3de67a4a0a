#pragma once

#include "gca/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gca {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q or Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }
    Vector column(std::size_t c) const;

    const std::vector<Scalar>& data() const { return data_; }  // row-major, for flattening
    bool is_zero() const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Vector apply(std::span<const Scalar> v) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);

/// Brings m to reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}, as rows of a matrix in reduced row echelon form.
Matrix nullspace(const Matrix& m);

/// Span kept in reduced row echelon form under insertion, so the row set is canonical.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }

    /// Reduces v against the current rows; returns the residual.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;
    /// Inserts v; returns true when it enlarged the span.
    bool insert(const Vector& v);

    /// Rows sorted by pivot column.
    std::vector<Vector> rows() const;

private:
    std::size_t ambient_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Subspace of K^n stored as its canonical reduced echelon basis, so equality of
/// subspaces is equality of representations.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace full(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }
    bool is_full() const { return rows_.size() == ambient_; }
    const std::vector<Vector>& rows() const { return rows_; }
    bool contains(const Vector& v) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> rows_;
};

}  // namespace gca
