#include "bqlab/kernels.hpp"

#include <cstdlib>

namespace bqlab::kernels {

#ifdef BQLAB_HAVE_AVX2
const Ops& avx2_ops();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(BQLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect_backend() {
    if (const char* env = std::getenv("BQLAB_KERNELS")) {
        std::string v(env);
        if (v == "scalar") return Backend::scalar;
        if (v == "avx2" && cpu_has_avx2()) return Backend::avx2;
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::optional<Backend>& forced() {
    static std::optional<Backend> f;
    return f;
}

} // namespace

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return cpu_has_avx2();
    }
    return false;
}

Backend active_backend() {
    if (forced().has_value()) return *forced();
    static const Backend detected = detect_backend();
    return detected;
}

const Ops& active_ops() {
#ifdef BQLAB_HAVE_AVX2
    if (active_backend() == Backend::avx2) return avx2_ops();
#endif
    return scalar_ops();
}

std::string backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

void force_backend(std::optional<Backend> b) {
    if (b && !backend_available(*b)) b = Backend::scalar;
    forced() = b;
}

} // namespace bqlab::kernels
