#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <experimental/simd>

#include "sincos_tables.hpp"

namespace torusq::kernels::detail {

namespace stdx = std::experimental;

// Scalar mirror of the vector polynomial path; used for the n mod W tail so
// every term goes through the same arithmetic.
inline void sincos_reduced_scalar(double theta, double& s_out, double& c_out) {
    const double j = std::floor(theta * kTwoOverPi + 0.5);
    const double u = (theta - j * kPio2Hi) - j * kPio2Lo;
    const double z = u * u;

    double ps = kSinCoef[0];
    for (int t = 1; t < 6; ++t) ps = std::fma(ps, z, kSinCoef[t]);
    const double sp = std::fma(u * z, ps, u);

    double pc = kCosCoef[0];
    for (int t = 1; t < 6; ++t) pc = std::fma(pc, z, kCosCoef[t]);
    const double cp = std::fma(z * z, pc, 1.0 - 0.5 * z);

    int q = static_cast<int>(j);
    if (q == 4) q = 0;
    switch (q) {
        case 0: s_out = sp;  c_out = cp;  break;
        case 1: s_out = cp;  c_out = -sp; break;
        case 2: s_out = -sp; c_out = -cp; break;
        default: s_out = -cp; c_out = sp; break;
    }
}

template <class Abi>
void sincos_0_2pi(const stdx::simd<double, Abi>& theta,
                  stdx::simd<double, Abi>& s_out,
                  stdx::simd<double, Abi>& c_out) {
    using V = stdx::simd<double, Abi>;

    const V j = stdx::floor(theta * V(kTwoOverPi) + V(0.5));
    const V u = (theta - j * V(kPio2Hi)) - j * V(kPio2Lo);
    const V z = u * u;

    V ps = V(kSinCoef[0]);
    for (int t = 1; t < 6; ++t) ps = stdx::fma(ps, z, V(kSinCoef[t]));
    const V sp = stdx::fma(u * z, ps, u);

    V pc = V(kCosCoef[0]);
    for (int t = 1; t < 6; ++t) pc = stdx::fma(pc, z, V(kCosCoef[t]));
    const V cp = stdx::fma(z * z, pc, V(1.0) - V(0.5) * z);

    V q = j;
    stdx::where(q == V(4.0), q) = V(0.0);

    V s = sp, c = cp;
    stdx::where(q == V(1.0), s) = cp;
    stdx::where(q == V(1.0), c) = -sp;
    stdx::where(q == V(2.0), s) = -sp;
    stdx::where(q == V(2.0), c) = -cp;
    stdx::where(q == V(3.0), s) = -cp;
    stdx::where(q == V(3.0), c) = sp;
    s_out = s;
    c_out = c;
}

template <class Abi>
std::complex<double> cis_sum_impl(const double* theta, const double* coeff, std::size_t n) {
    using V = stdx::simd<double, Abi>;
    constexpr std::size_t W = V::size();

    V acc_re(0.0), acc_im(0.0);
    std::size_t i = 0;
    for (; i + W <= n; i += W) {
        V th(&theta[i], stdx::element_aligned);
        V cf(&coeff[i], stdx::element_aligned);
        V s, c;
        sincos_0_2pi(th, s, c);
        acc_re = stdx::fma(cf, c, acc_re);
        acc_im = stdx::fma(cf, s, acc_im);
    }

    // Binary-tree lane reduction.
    double lanes_re[W], lanes_im[W];
    for (std::size_t l = 0; l < W; ++l) {
        lanes_re[l] = acc_re[l];
        lanes_im[l] = acc_im[l];
    }
    for (std::size_t step = 1; step < W; step *= 2)
        for (std::size_t l = 0; l + step < W; l += 2 * step) {
            lanes_re[l] += lanes_re[l + step];
            lanes_im[l] += lanes_im[l + step];
        }
    double re = lanes_re[0], im = lanes_im[0];

    for (; i < n; ++i) {
        double s, c;
        sincos_reduced_scalar(theta[i], s, c);
        re = std::fma(coeff[i], c, re);
        im = std::fma(coeff[i], s, im);
    }
    return {re, im};
}

} // namespace torusq::kernels::detail
