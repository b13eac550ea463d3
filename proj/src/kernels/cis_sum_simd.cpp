// Compiled with AVX2+FMA flags on x86-64 (see CMakeLists); the dispatcher
// only routes here after checking CPU support.  On aarch64 the native ABI
// is NEON and needs no extra flags.

#include "torusq/kernels.hpp"

#include "cis_sum_body.hpp"

namespace torusq::kernels {

std::complex<double> weighted_cis_sum_simd(const double* theta, const double* coeff,
                                           std::size_t n) {
    return detail::cis_sum_impl<detail::stdx::simd_abi::native<double>>(theta, coeff, n);
}

std::size_t simd_width() {
    return detail::stdx::native_simd<double>::size();
}

} // namespace torusq::kernels
