// AVX2 kernel variants. Compiled with -mavx2 -mfma; only dispatched to after a
// runtime cpuid check, so the rest of the binary stays baseline-ISA clean.

#include "bqlab/kernels.hpp"

#ifdef BQLAB_HAVE_AVX2

#include <immintrin.h>

#include <cmath>

namespace bqlab::kernels {

namespace {

const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void butterfly_adjacent_avx2(cplx* data, std::size_t n_pairs) {
    double* d = reinterpret_cast<double*>(data);
    const __m256d scale = _mm256_set1_pd(inv_sqrt2);
    std::size_t i = 0;
    for (; i < n_pairs; ++i) {
        // v = [re0 im0 re1 im1] for one (a, b) pair
        __m256d v = _mm256_loadu_pd(d + 4 * i);
        __m256d sw = _mm256_permute2f128_pd(v, v, 0x01);
        __m256d plus = _mm256_add_pd(v, sw);   // low lanes: a+b
        __m256d minus = _mm256_sub_pd(sw, v);  // high lanes: a-b
        __m256d out = _mm256_blend_pd(plus, minus, 0b1100);
        _mm256_storeu_pd(d + 4 * i, _mm256_mul_pd(out, scale));
    }
}

void butterfly_blocks_avx2(cplx* a, cplx* b, std::size_t n) {
    double* pa = reinterpret_cast<double*>(a);
    double* pb = reinterpret_cast<double*>(b);
    const __m256d scale = _mm256_set1_pd(inv_sqrt2);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        _mm256_storeu_pd(pa + 2 * i, _mm256_mul_pd(_mm256_add_pd(va, vb), scale));
        _mm256_storeu_pd(pb + 2 * i, _mm256_mul_pd(_mm256_sub_pd(va, vb), scale));
    }
    for (; i < n; ++i) {
        cplx x = a[i];
        cplx y = b[i];
        a[i] = (x + y) * inv_sqrt2;
        b[i] = (x - y) * inv_sqrt2;
    }
}

double norm_sq_avx2(const cplx* a, std::size_t n) {
    const double* d = reinterpret_cast<const double*>(a);
    const std::size_t len = 2 * n;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256d v0 = _mm256_loadu_pd(d + i);
        __m256d v1 = _mm256_loadu_pd(d + i + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < len; ++i) {
        s += d[i] * d[i];
    }
    return s;
}

cplx inner_conj_avx2(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        // swap re/im within each complex, then sign-correct the products
        __m256d vb_sw = _mm256_permute_pd(vb, 0b0101);
        acc_im = _mm256_fmadd_pd(_mm256_mul_pd(va, vb_sw), sign, acc_im);
    }
    double re = hsum(acc_re);
    double im = hsum(acc_im);
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

} // namespace

const Ops& avx2_ops() {
    static const Ops ops{
        butterfly_adjacent_avx2,
        butterfly_blocks_avx2,
        norm_sq_avx2,
        inner_conj_avx2,
    };
    return ops;
}

} // namespace bqlab::kernels

#endif // BQLAB_HAVE_AVX2
