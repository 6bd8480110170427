#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>

// Data-parallel inner loops of the state-vector simulator. Every kernel has a
// scalar reference implementation and, where the CPU supports it, an AVX2
// variant. The active backend is chosen once at startup (overridable with the
// BQLAB_KERNELS environment variable or force_backend()); variants are
// equivalence-tested against the scalar reference.

namespace bqlab::kernels {

using cplx = std::complex<double>;

struct Ops {
    // In-place Hadamard butterfly on adjacent pairs: data holds 2*n amplitudes
    // laid out as n pairs (a, b); each pair becomes ((a+b)/sqrt2, (a-b)/sqrt2).
    void (*butterfly_adjacent)(cplx* data, std::size_t n_pairs);
    // In-place Hadamard butterfly across two contiguous blocks of n amplitudes.
    void (*butterfly_blocks)(cplx* a, cplx* b, std::size_t n);
    // Sum of squared magnitudes.
    double (*norm_sq)(const cplx* a, std::size_t n);
    // Inner product sum(conj(a[i]) * b[i]).
    cplx (*inner_conj)(const cplx* a, const cplx* b, std::size_t n);
};

enum class Backend { scalar, avx2 };

const Ops& scalar_ops();
bool backend_available(Backend b);

/// Kernels selected for this process (runtime CPU detection, env override).
const Ops& active_ops();
Backend active_backend();
std::string backend_name(Backend b);

/// Test/benchmark hook: pin the backend, or pass nullopt to restore detection.
void force_backend(std::optional<Backend> b);

} // namespace bqlab::kernels
