#pragma once

// Polynomial data shared by the scalar-mirror and vector sin/cos kernels.
// Minimax coefficients on [-pi/4, pi/4] (Cephes), with a two-term
// Cody-Waite split of pi/2 for quadrant reduction of arguments in [0, 2pi).

namespace torusq::kernels::detail {

inline constexpr double kTwoOverPi = 0.636619772367581343075535;
inline constexpr double kPio2Hi = 1.57079632679489655800e+00; // double nearest pi/2
inline constexpr double kPio2Lo = 6.12323399573676603587e-17; // pi/2 - kPio2Hi

// sin(x) = x + x*z*P(z), z = x^2; highest order first.
inline constexpr double kSinCoef[6] = {
    1.58962301576546568060e-10,
    -2.50507477628578072866e-8,
    2.75573136213857245213e-6,
    -1.98412698295895385996e-4,
    8.33333333332211858878e-3,
    -1.66666666666666307295e-1,
};

// cos(x) = 1 - z/2 + z^2*Q(z); highest order first.
inline constexpr double kCosCoef[6] = {
    -1.13585365213876817300e-11,
    2.08757008419747316778e-9,
    -2.75573141792967388112e-7,
    2.48015872888517179954e-5,
    -1.38888888888730564116e-3,
    4.16666666666665929218e-2,
};

} // namespace torusq::kernels::detail
