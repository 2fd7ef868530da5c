#include "kernels/kernels_internal.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define SYMTANGLE_HAVE_AVX2_TARGET 1
#include <immintrin.h>
#endif

namespace symtangle::detail {

#ifdef SYMTANGLE_HAVE_AVX2_TARGET

namespace {

#define AVX2_FN __attribute__((target("avx2,fma")))

// Two complex doubles per register: [re0, im0, re1, im1].
AVX2_FN inline __m256d load2(const Complex *p) { return _mm256_loadu_pd(reinterpret_cast<const double *>(p)); }

AVX2_FN inline void store2(Complex *p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double *>(p), v); }

// Elementwise complex product of two packed pairs.
AVX2_FN inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);
    const __m256d b_im = _mm256_permute_pd(b, 0xF);
    const __m256d a_sw = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

// Packed pair times a broadcast scalar split into real/imag registers.
AVX2_FN inline __m256d cscale(__m256d x, __m256d s_re, __m256d s_im) {
    const __m256d x_sw = _mm256_permute_pd(x, 0x5);
    return _mm256_fmaddsub_pd(x, s_re, _mm256_mul_pd(x_sw, s_im));
}

AVX2_FN double hsum(__m256d v) {
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, v);
    return (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
}

AVX2_FN Complex dotc_avx2(const Complex *x, const Complex *y, std::size_t len) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        const __m256d xv = load2(x + i);
        const __m256d yv = load2(y + i);
        acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
        acc_im = _mm256_fmadd_pd(_mm256_permute_pd(xv, 0x5), yv, acc_im);
    }
    // acc_im lanes hold [xi*yr, xr*yi]; the imaginary part is odd minus even.
    alignas(32) double im_lanes[4];
    _mm256_store_pd(im_lanes, acc_im);
    Complex acc{hsum(acc_re), (im_lanes[1] - im_lanes[0]) + (im_lanes[3] - im_lanes[2])};
    for (; i < len; ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

AVX2_FN void axpy_avx2(Complex alpha, const Complex *x, Complex *y, std::size_t len) {
    const __m256d a_re = _mm256_set1_pd(alpha.real());
    const __m256d a_im = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        store2(y + i, _mm256_add_pd(load2(y + i), cscale(load2(x + i), a_re, a_im)));
    }
    for (; i < len; ++i) {
        y[i] += alpha * x[i];
    }
}

AVX2_FN void gemm_avx2(const Complex *a, const Complex *b, Complex *c, std::size_t order) {
    for (std::size_t i = 0; i < order * order; ++i) {
        c[i] = Complex{0.0, 0.0};
    }
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t k = 0; k < order; ++k) {
            const Complex aik = a[i * order + k];
            if (aik == Complex{0.0, 0.0}) {
                continue;
            }
            axpy_avx2(aik, b + k * order, c + i * order, order);
        }
    }
}

AVX2_FN void mix2_avx2(Complex *x, Complex *y, std::size_t len, Complex m00, Complex m01, Complex m10, Complex m11) {
    const __m256d m00r = _mm256_set1_pd(m00.real()), m00i = _mm256_set1_pd(m00.imag());
    const __m256d m01r = _mm256_set1_pd(m01.real()), m01i = _mm256_set1_pd(m01.imag());
    const __m256d m10r = _mm256_set1_pd(m10.real()), m10i = _mm256_set1_pd(m10.imag());
    const __m256d m11r = _mm256_set1_pd(m11.real()), m11i = _mm256_set1_pd(m11.imag());
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        const __m256d xv = load2(x + i);
        const __m256d yv = load2(y + i);
        store2(x + i, _mm256_add_pd(cscale(xv, m00r, m00i), cscale(yv, m01r, m01i)));
        store2(y + i, _mm256_add_pd(cscale(xv, m10r, m10i), cscale(yv, m11r, m11i)));
    }
    for (; i < len; ++i) {
        const Complex xi = x[i];
        const Complex yi = y[i];
        x[i] = m00 * xi + m01 * yi;
        y[i] = m10 * xi + m11 * yi;
    }
}

#undef AVX2_FN

const KernelTable kAvx2Table{"avx2", dotc_avx2, gemm_avx2, mix2_avx2, axpy_avx2};

}  // namespace

const KernelTable *avx2_table() { return &kAvx2Table; }

#else

const KernelTable *avx2_table() { return nullptr; }

#endif

}  // namespace symtangle::detail
