#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "torusq/exact_sum.hpp"
#include "torusq/knot.hpp"
#include "torusq/real.hpp"

namespace torusq {

// Rotated-line contour C_phi: the image of [-X, X] under x -> x e^{i phi}.
struct ContourSpec {
    double phi = 0.0;        // rotation angle (radians)
    double truncation = 0.0; // X; <= 0 selects the analytic tail bound
    int panels = 0;          // max quadrature panels; <= 0 selects the default
    double tol = 0.0;        // target relative error; <= 0 selects the default
    int jobs = 1;            // worker threads for the initial panel sweep
};

struct IntegralEstimate {
    std::complex<double> value;
    double error = 0.0;       // absolute error estimate
    long evaluations = 0;
    double truncation = 0.0;  // X actually used
};

// Adaptive quadrature of f over C_phi, parameterized as
// int_{-X}^{X} f(x e^{i phi}) e^{i phi} dx, with nested Clenshaw-Curtis
// panels (17-point with embedded 9-point error estimate).
IntegralEstimate line_integrate(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const ContourSpec& c);

struct VerifyResult {
    std::complex<double> lhs;
    std::complex<double> rhs;
    double rel_diff = 0.0;
    double phi = 0.0;
    double truncation = 0.0;
    long evaluations = 0;
    Precision precision = Precision::f64;
};

// Integral representation of the Gaussian sum:
//   lhs = gauss_sum(knot, k, h)
//   rhs = sqrt(mp/(pi h)) e^{-(h/4)(m/p+p/m)} int_{C_phi} e^{mp(kz - z^2/h)} tau(z) dz
// Requires Re(h e^{-2i phi}) > 0.  The square root is the analytic
// continuation from positive h (principal branch for |arg h| < pi).
// Working precision is chosen from the integrand envelope unless forced.
VerifyResult verify_lemma1(const TorusKnot& knot, Color color, std::complex<double> h,
                           const ContourSpec& c,
                           std::optional<Precision> force_precision = std::nullopt);

// Integral representation of the Kashaev invariant:
//   lhs = 2 kashaev_exact(knot, k)
//   rhs = (mpk/2)^{3/2} e^{-i pi/4} e^{-i pi (m/p+p/m)/(2k)}
//         int_{C_phi} e^{pi mpk (z + i z^2/2)} z^2 tau(pi z) dz
// Requires 0 < phi < pi/2.  The contour passes on the origin side of every
// pole of tau(pi z); the integrand envelope peaks at
// exp(pi mpk cos^2(phi) / (2 sin 2 phi)), and the working precision is
// raised to absorb that cancellation.
VerifyResult verify_lemma2(const TorusKnot& knot, Color color, const ContourSpec& c,
                           std::optional<Precision> force_precision = std::nullopt);

// The integral over the contour shifted through the saddle at z = i:
//   -2i e^{i pi mpk/2} int_{C_phi} e^{i pi mpk z^2/2} z tau(pi z) dz.
// Pure Gaussian decay; evaluated in double precision.
IntegralEstimate shifted_integral(const TorusKnot& knot, Color color, const ContourSpec& c);

struct ShiftIdentityResult {
    std::complex<double> direct;           // int_{C_phi} of the lemma-2 integrand
    std::complex<double> shifted;          // shifted_integral value
    std::complex<double> residue_sum;      // 2 pi i sum_j Res_{z_j}
    std::complex<double> shifted_plus_residues;
    double rel_diff = 0.0;
    Precision precision = Precision::f64;
};

// Contour-shift identity behind the asymptotic expansion:
// the direct integral equals the shifted integral plus 2 pi i times the
// residues at z_j = i j/(mp), 0 < j < mp (all computed numerically).
ShiftIdentityResult verify_shift(const TorusKnot& knot, Color color, const ContourSpec& c);

// (1/2 pi i) times the contour integral of f around the given circle,
// by the trapezoid rule with node doubling until two successive levels
// agree to tol (spectrally accurate for f analytic on the circle).
std::complex<double> residue_circle(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    std::complex<double> center, double radius, double tol = 1.0e-12);

// Radius keeping the lemma-2 integrand bounded on the circle around
// z_j = i j/(mp): min(1/(4mp), 5/(pi mp k (1 - j/mp))).
double residue_radius(const TorusKnot& knot, Color color, long j);

// Default phi for verify_lemma1: maximizes Re(h e^{-2i phi}).
double lemma1_default_phi(std::complex<double> h);

} // namespace torusq
