#include <cmath>

#include "torusq/kernels.hpp"

namespace torusq::kernels {

// Reference kernel: straight loop over libm sin/cos, single accumulator.
std::complex<double> weighted_cis_sum_scalar(const double* theta, const double* coeff,
                                             std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += coeff[i] * std::cos(theta[i]);
        im += coeff[i] * std::sin(theta[i]);
    }
    return {re, im};
}

} // namespace torusq::kernels
