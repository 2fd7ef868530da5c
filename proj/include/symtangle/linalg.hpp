#pragma once

// Dense complex matrices and the Hermitian eigensolver for the float lane.

#include <cstddef>
#include <vector>

#include "symtangle/kernels.hpp"

namespace symtangle {

/// Dense row-major complex matrix.
class CMatrix {
   public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Complex *row(std::size_t r) { return data_.data() + r * cols_; }
    const Complex *row(std::size_t r) const { return data_.data() + r * cols_; }
    const std::vector<Complex> &data() const { return data_; }

    CMatrix operator*(const CMatrix &o) const;
    CMatrix operator+(const CMatrix &o) const;
    CMatrix operator-(const CMatrix &o) const;
    CMatrix scaled(Complex s) const;
    CMatrix adjoint() const;
    CMatrix conjugate() const;

    Complex trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    /// Largest |a_ij - conj(a_ji)|.
    double hermitian_defect() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

double max_abs_diff(const CMatrix &a, const CMatrix &b);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // column k belongs to values[k]
    int sweeps = 0;
};

/// Cyclic complex Jacobi on a Hermitian matrix. Throws std::invalid_argument
/// when the input is not Hermitian within 1e-10 relative to its size.
EigenDecomposition hermitian_eigen(const CMatrix &m);

/// Largest ||M v - lambda v|| over the decomposition.
double eigen_residual(const CMatrix &m, const EigenDecomposition &eig);

/// Principal square root of a Hermitian positive semidefinite matrix;
/// eigenvalues below zero (round-off) are clamped.
CMatrix sqrt_psd(const CMatrix &m);

}  // namespace symtangle
