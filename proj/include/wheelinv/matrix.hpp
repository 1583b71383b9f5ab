#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "wheelinv/rational.hpp"

namespace wheelinv {

using RatVector = std::vector<Rational>;

// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows);
    // integer entries divided by a common denominator, convenient for fixtures
    static RatMatrix from_ints(const std::vector<std::vector<long>>& rows, long den = 1);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMatrix transpose() const;
    RatMatrix scaled(const Rational& s) const;
    bool is_symmetric() const;
    bool is_zero() const;
    Rational trace() const;
    RatVector row(std::size_t i) const;
    RatVector col(std::size_t j) const;
    std::size_t max_entry_bits() const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);  // = mul(a, b)

// Product kernels. mul splits output rows across OpenMP threads; mul_serial is
// the plain triple loop kept as the reference the parallel kernel is tested
// against. Shapes must agree or std::invalid_argument.
RatMatrix mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mul_serial(const RatMatrix& a, const RatMatrix& b);

RatVector mat_vec(const RatMatrix& m, const RatVector& x);   // m * x
RatVector vec_mat(const RatVector& x, const RatMatrix& m);   // x' * m
Rational dot(const RatVector& a, const RatVector& b);
RatMatrix outer(const RatVector& a, const RatVector& b);     // a * b'
RatVector scaled(const RatVector& x, const Rational& s);

// Circulant matrix, stored as its first row. Row i is the first row cyclically
// shifted i positions to the right: dense(i, j) = first_row[(j - i) mod len].
class Circulant {
public:
    explicit Circulant(RatVector first_row);

    std::size_t order() const { return first_row_.size(); }
    const RatVector& first_row() const { return first_row_; }
    RatMatrix to_dense() const;

    friend bool operator==(const Circulant& a, const Circulant& b) {
        return a.first_row_ == b.first_row_;
    }
    friend bool operator!=(const Circulant& a, const Circulant& b) { return !(a == b); }

private:
    RatVector first_row_;
};

// x' * C without densifying C; |x| must equal C.order().
RatVector circ_mul_row(const RatVector& x, const Circulant& c);

}  // namespace wheelinv
