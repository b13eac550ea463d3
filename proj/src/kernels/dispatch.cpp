#include <atomic>

#include "torusq/errors.hpp"
#include "torusq/kernels.hpp"

namespace torusq::kernels {

bool simd_available() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#elif defined(__aarch64__)
    return true; // NEON is baseline
#else
    return false;
#endif
}

namespace {

const char* simd_name() {
#if defined(__x86_64__)
    return "avx2";
#elif defined(__aarch64__)
    return "neon";
#else
    return "simd";
#endif
}

std::atomic<Kind> g_kind{Kind::auto_select};

bool use_simd(Kind k) {
    switch (k) {
        case Kind::scalar: return false;
        case Kind::simd: return true;
        case Kind::auto_select: return simd_available();
    }
    return false;
}

} // namespace

void select(Kind k) {
    if (k == Kind::simd && !simd_available())
        raise(errc::invalid_argument,
              "simd kernel requested but this CPU does not support it");
    g_kind.store(k, std::memory_order_relaxed);
}

Kind selected() { return g_kind.load(std::memory_order_relaxed); }

const char* active_name() {
    return use_simd(selected()) ? simd_name() : "scalar";
}

std::complex<double> weighted_cis_sum(const double* theta, const double* coeff,
                                      std::size_t n) {
    return use_simd(selected()) ? weighted_cis_sum_simd(theta, coeff, n)
                                : weighted_cis_sum_scalar(theta, coeff, n);
}

} // namespace torusq::kernels
