#include "wheelinv/matrix.hpp"

#include <omp.h>

namespace wheelinv {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows: no rows");
    std::size_t c = rows[0].size();
    RatMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_ints(const std::vector<std::vector<long>>& rows, long den) {
    if (rows.empty()) throw std::invalid_argument("from_ints: no rows");
    std::size_t c = rows[0].size();
    RatMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("from_ints: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(rows[i][j], den);
    }
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
    return m;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Rational RatMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: square matrix required");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

RatVector RatMatrix::row(std::size_t i) const {
    RatVector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

RatVector RatMatrix::col(std::size_t j) const {
    RatVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::size_t RatMatrix::max_entry_bits() const {
    std::size_t best = 0;
    for (const auto& x : data_) {
        std::size_t b = x.bit_length();
        if (b > best) best = b;
    }
    return best;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix add: shape mismatch");
    RatMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) + b(i, j);
    return m;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sub: shape mismatch");
    RatMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) - b(i, j);
    return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return mul(a, b); }

RatMatrix mul_serial(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: shape mismatch");
    RatMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(i, j).add_mul(aik, b(k, j));
        }
    return m;
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: shape mismatch");
    RatMatrix m(a.rows(), b.cols());
    const long n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(static_cast<std::size_t>(i), k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(static_cast<std::size_t>(i), j).add_mul(aik, b(k, j));
        }
    }
    return m;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& x) {
    if (m.cols() != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    RatVector y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i].add_mul(m(i, j), x[j]);
    return y;
}

RatVector vec_mat(const RatVector& x, const RatMatrix& m) {
    if (m.rows() != x.size()) throw std::invalid_argument("vec_mat: shape mismatch");
    RatVector y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) y[j].add_mul(x[i], m(i, j));
    }
    return y;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s.add_mul(a[i], b[i]);
    return s;
}

RatMatrix outer(const RatVector& a, const RatVector& b) {
    RatMatrix m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
    return m;
}

RatVector scaled(const RatVector& x, const Rational& s) {
    RatVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] * s;
    return y;
}

Circulant::Circulant(RatVector first_row) : first_row_(std::move(first_row)) {
    if (first_row_.empty()) throw std::invalid_argument("Circulant: empty first row");
}

RatMatrix Circulant::to_dense() const {
    std::size_t n = order();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = first_row_[(j + n - i) % n];
    return m;
}

RatVector circ_mul_row(const RatVector& x, const Circulant& c) {
    std::size_t n = c.order();
    if (x.size() != n) throw std::invalid_argument("circ_mul_row: length mismatch");
    const RatVector& f = c.first_row();
    RatVector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        // row i of C contributes x[i] * f[(j - i) mod n] to position j
        for (std::size_t j = 0; j < n; ++j) y[j].add_mul(x[i], f[(j + n - i) % n]);
    }
    return y;
}

}  // namespace wheelinv
