// Copyright 2026 The Flox Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace flox {

using Complex = std::complex<double>;

/// Small dense complex matrix, row-major. Sized for mode unitaries (d <= 64),
/// not for many-body operators.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_)
            throw std::invalid_argument("Matrix: entry count does not match shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix adjoint() const {
        Matrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
        if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix m(lhs.rows_, rhs.cols_);
        for (std::size_t r = 0; r < lhs.rows_; ++r)
            for (std::size_t k = 0; k < lhs.cols_; ++k) {
                const Complex v = lhs(r, k);
                if (v == 0.0) continue;
                for (std::size_t c = 0; c < rhs.cols_; ++c) m(r, c) += v * rhs(k, c);
            }
        return m;
    }

    /// max_{ij} |(U^dagger U - I)_{ij}|
    double unitarity_defect() const {
        if (rows_ != cols_) return 1.0;
        Matrix p = adjoint() * (*this);
        double worst = 0.0;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) {
                const Complex expect = (r == c) ? Complex(1.0) : Complex(0.0);
                worst = std::max(worst, std::abs(p(r, c) - expect));
            }
        return worst;
    }

    bool is_unitary(double tol) const { return unitarity_defect() <= tol; }

  private:
    std::size_t rows_, cols_;
    std::vector<Complex> a_;
};

} // namespace flox
