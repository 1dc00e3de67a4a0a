#include "gca/linalg.hpp"

#include "gca/errors.hpp"

#include <algorithm>
#include <numeric>

namespace gca {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("row length mismatch");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                const Scalar& b = o(k, c);
                if (!b.is_zero()) p(r, c) += a * b;
            }
        }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
    Matrix s = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] += o.data_[k];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
    Matrix s = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] -= o.data_[k];
    return s;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m = *this;
    for (auto& x : m.data_) x *= s;
    return m;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != lead_row)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
        const Scalar inv = Scalar(1) / m(lead_row, c);
        for (std::size_t k = c; k < m.cols(); ++k)
            if (!m(lead_row, k).is_zero()) m(lead_row, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, c).is_zero()) continue;
            const Scalar factor = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!m(lead_row, k).is_zero()) m(r, k) -= factor * m(lead_row, k);
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix nullspace(const Matrix& m) {
    Matrix r = m;
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    Matrix out = Matrix::from_rows(basis, m.cols());
    rref(out);
    return out;
}

Vector EchelonBasis::reduce(Vector v) const {
    if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (v[p].is_zero()) continue;
        const Scalar factor = v[p];
        const Vector& row = rows_[k];
        for (std::size_t c = p; c < ambient_; ++c)
            if (!row[c].is_zero()) v[c] -= factor * row[c];
    }
    return v;
}

bool EchelonBasis::contains(const Vector& v) const {
    const Vector r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool EchelonBasis::insert(const Vector& v) {
    Vector r = reduce(v);
    auto it = std::find_if(r.begin(), r.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it == r.end()) return false;
    const std::size_t p = static_cast<std::size_t>(it - r.begin());
    const Scalar inv = Scalar(1) / r[p];
    for (std::size_t c = p; c < ambient_; ++c)
        if (!r[c].is_zero()) r[c] *= inv;
    // keep every existing row reduced in the new pivot column
    for (auto& row : rows_) {
        if (row[p].is_zero()) continue;
        const Scalar factor = row[p];
        for (std::size_t c = p; c < ambient_; ++c)
            if (!r[c].is_zero()) row[c] -= factor * r[c];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

std::vector<Vector> EchelonBasis::rows() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<Vector> out;
    out.reserve(order.size());
    for (auto k : order) out.push_back(rows_[k]);
    return out;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
    EchelonBasis basis(ambient);
    for (const auto& v : vectors) basis.insert(v);
    Subspace s(ambient);
    s.rows_ = basis.rows();
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t k = 0; k < ambient; ++k) {
        Vector v(ambient);
        v[k] = 1;
        s.rows_.push_back(std::move(v));
    }
    return s;
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
    EchelonBasis basis(ambient_);
    for (const auto& r : rows_) basis.insert(r);
    return basis.contains(v);
}

}  // namespace gca
