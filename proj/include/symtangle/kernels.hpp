#pragma once

// Dense complex kernels used by the floating-point lane. A scalar reference
// table is always available; an AVX2 table is selected at runtime when the CPU
// supports it. SYMTANGLE_SIMD=scalar forces the reference path.

#include <complex>
#include <cstddef>
#include <vector>

namespace symtangle {

using Complex = std::complex<double>;

struct KernelTable {
    const char *name;
    // sum_i conj(x[i]) * y[i]
    Complex (*dotc)(const Complex *x, const Complex *y, std::size_t len);
    // c = a * b for square row-major matrices of order `order`
    void (*gemm)(const Complex *a, const Complex *b, Complex *c, std::size_t order);
    // (x, y) <- (m00 x + m01 y, m10 x + m11 y), elementwise
    void (*mix2)(Complex *x, Complex *y, std::size_t len, Complex m00, Complex m01, Complex m10, Complex m11);
    // y <- y + alpha * x
    void (*axpy)(Complex alpha, const Complex *x, Complex *y, std::size_t len);
};

const KernelTable &scalar_kernels();

/// AVX2 table, or nullptr when the build or the CPU lacks AVX2/FMA.
const KernelTable *avx2_kernels();

/// Every table usable on this machine, reference first.
std::vector<const KernelTable *> available_kernels();

/// Table chosen at first use: AVX2 when supported, unless overridden by the
/// SYMTANGLE_SIMD environment variable ("scalar" or "avx2").
const KernelTable &active_kernels();

}  // namespace symtangle
