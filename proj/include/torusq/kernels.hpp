#pragma once

#include <complex>
#include <cstddef>

namespace torusq::kernels {

// Hot inner loop of the exact phase sums:
//
//     sum_i coeff[i] * (cos(theta[i]) + i sin(theta[i])),  theta[i] in [0, 2pi).
//
// Reduction order is fixed and documented: terms are accumulated into W
// lane accumulators (W = vector width; 1 for the scalar kernel) by block
// position, lanes are combined by a binary tree over the lane index, and
// the remaining n mod W terms are added one by one in index order.  For a
// fixed kernel the result is bit-stable across runs; scalar and SIMD
// kernels agree to rounding (equivalence-tested, not bit-identical).
std::complex<double> weighted_cis_sum_scalar(const double* theta, const double* coeff,
                                             std::size_t n);
std::complex<double> weighted_cis_sum_simd(const double* theta, const double* coeff,
                                           std::size_t n);

enum class Kind { auto_select, scalar, simd };

// True when the SIMD kernel can run on this machine.
bool simd_available();

// Width (doubles per vector) of the SIMD kernel as compiled.
std::size_t simd_width();

// Select the kernel used by weighted_cis_sum.  Throws errc::invalid_argument
// for Kind::simd on hardware without the required instructions.
void select(Kind k);
Kind selected();

// Name of the kernel that weighted_cis_sum will actually run.
const char* active_name();

std::complex<double> weighted_cis_sum(const double* theta, const double* coeff,
                                      std::size_t n);

} // namespace torusq::kernels
