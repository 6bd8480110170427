#include "bqlab/kernels.hpp"

#include <cmath>

namespace bqlab::kernels {

namespace {

const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

void butterfly_adjacent_scalar(cplx* data, std::size_t n_pairs) {
    for (std::size_t i = 0; i < n_pairs; ++i) {
        cplx a = data[2 * i];
        cplx b = data[2 * i + 1];
        data[2 * i] = (a + b) * inv_sqrt2;
        data[2 * i + 1] = (a - b) * inv_sqrt2;
    }
}

void butterfly_blocks_scalar(cplx* a, cplx* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        cplx x = a[i];
        cplx y = b[i];
        a[i] = (x + y) * inv_sqrt2;
        b[i] = (x - y) * inv_sqrt2;
    }
}

double norm_sq_scalar(const cplx* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return s;
}

cplx inner_conj_scalar(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{
        butterfly_adjacent_scalar,
        butterfly_blocks_scalar,
        norm_sq_scalar,
        inner_conj_scalar,
    };
    return ops;
}

} // namespace bqlab::kernels
