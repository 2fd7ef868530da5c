#include "kernels/kernels_internal.hpp"

namespace symtangle::detail {

namespace {

Complex dotc_scalar(const Complex *x, const Complex *y, std::size_t len) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < len; ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

void gemm_scalar(const Complex *a, const Complex *b, Complex *c, std::size_t order) {
    for (std::size_t i = 0; i < order * order; ++i) {
        c[i] = Complex{0.0, 0.0};
    }
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t k = 0; k < order; ++k) {
            const Complex aik = a[i * order + k];
            if (aik == Complex{0.0, 0.0}) {
                continue;
            }
            const Complex *brow = b + k * order;
            Complex *crow = c + i * order;
            for (std::size_t j = 0; j < order; ++j) {
                crow[j] += aik * brow[j];
            }
        }
    }
}

void mix2_scalar(Complex *x, Complex *y, std::size_t len, Complex m00, Complex m01, Complex m10, Complex m11) {
    for (std::size_t i = 0; i < len; ++i) {
        const Complex xi = x[i];
        const Complex yi = y[i];
        x[i] = m00 * xi + m01 * yi;
        y[i] = m10 * xi + m11 * yi;
    }
}

void axpy_scalar(Complex alpha, const Complex *x, Complex *y, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
        y[i] += alpha * x[i];
    }
}

}  // namespace

const KernelTable kScalarTable{"scalar", dotc_scalar, gemm_scalar, mix2_scalar, axpy_scalar};

}  // namespace symtangle::detail
