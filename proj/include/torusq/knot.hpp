#pragma once

#include <complex>
#include <vector>

#include "torusq/complex.hpp"
#include "torusq/errors.hpp"
#include "torusq/real.hpp"

namespace torusq {

// The (m,p) torus knot.  m and p are coprime positive integers; every
// derived quantity is symmetric under swapping them.  m == 1 or p == 1
// gives the unknot, which is accepted and flagged.
struct TorusKnot {
    long m = 0;
    long p = 0;
    bool unknot = false;

    long mp() const { return m * p; }
};

TorusKnot validate_knot(long m, long p);

// Pole data of tau(pi z): simple poles at z_j = i j/(mp), 1 <= j <= mp-1.
// The residue is exactly zero when j is a multiple of m or of p.
struct PoleDatum {
    long j = 0;
    std::complex<double> location;
    std::complex<double> residue;
};

std::vector<PoleDatum> poles(const TorusKnot& knot);

// Residue of tau(pi z) at z_j, as a plain real: (-1)^{j+1} 2 sin(pi j/m) sin(pi j/p) / (mp pi).
double pole_residue(const TorusKnot& knot, long j);

std::complex<double> alexander(const TorusKnot& knot, std::complex<double> t);
std::complex<double> torsion(const TorusKnot& knot, std::complex<double> z);

namespace detail {

// sinh(w)/w, stable down to w == 0 (value 1).  sinh itself carries no
// cancellation for small arguments, so the direct quotient is accurate at
// every scale above underflow of w.
template <class R>
cplx<R> sinhc(const cplx<R>& w) {
    if (w.re == R(0) && w.im == R(0)) return cplx<R>(R(1));
    return cx_sinh(w) / w;
}

// tau(z) = 2 sinh(mz) sinh(pz) / sinh(mpz), evaluated stably everywhere:
//  - away from zeros of sinh(mpz): direct formula;
//  - near z = i pi t (t integer incl. 0): 2 (-1)^t d sinhc(md) sinhc(pd) / sinhc(mpd);
//  - near a removable singularity (j multiple of m or p): matched sinhc ratio;
//  - near a genuine pole: PoleError once |sinh(mpz)| < 1e-10 max(|sinh(mz)sinh(pz)|, 1).
template <class R>
cplx<R> torsion_core(long m, long p, const cplx<R>& z) {
    using std::round;
    const R pi = pi_value<R>();
    const R mp = R(m) * R(p);
    const cplx<R> w = mp * z;

    // Nearest zero i*pi*j of sinh at the mp scale.
    const double jd = static_cast<double>(round(w.im / pi));
    if (!(std::abs(jd) < 4.0e15)) {
        // Pole proximity is unresolvable this far out; the direct formula
        // is as good as the input allows.
        return (R(2) * cx_sinh(R(m) * z) * cx_sinh(R(p) * z)) / cx_sinh(w);
    }
    const long j = static_cast<long>(jd);
    const cplx<R> wres{w.re, w.im - R(j) * pi};

    if (norm2(wres) >= R(1) / R(16)) { // |mp z - i pi j| >= 1/4
        return (R(2) * cx_sinh(R(m) * z) * cx_sinh(R(p) * z)) / cx_sinh(w);
    }

    const cplx<R> d = wres / mp; // z - i pi j/(mp)

    if (j % (m * p) == 0) {
        // Includes j == 0.  All three factors vanish together:
        // tau(i pi t + d) = (-1)^t 2 d sinhc(md) sinhc(pd) / sinhc(mpd).
        const long t = j / (m * p);
        const cplx<R> v = R(2) * d * sinhc(R(m) * d) * sinhc(R(p) * d) / sinhc(mp * d);
        return (t % 2 == 0) ? v : -v;
    }
    if (j % m == 0) {
        // sinh(pz) and sinh(mpz) vanish together; their ratio stays finite.
        const long t = j / m;
        const cplx<R> v = R(2) * cx_sinh(R(m) * z) * sinhc(R(p) * d) / (R(m) * sinhc(mp * d));
        return ((t * (1 - m)) % 2 == 0) ? v : -v;
    }
    if (j % p == 0) {
        const long t = j / p;
        const cplx<R> v = R(2) * cx_sinh(R(p) * z) * sinhc(R(m) * d) / (R(p) * sinhc(mp * d));
        return ((t * (1 - p)) % 2 == 0) ? v : -v;
    }

    // Genuine pole neighbourhood.
    const cplx<R> num = cx_sinh(R(m) * z) * cx_sinh(R(p) * z);
    const cplx<R> den = cx_sinh(w);
    R scale = cx_abs(num);
    if (scale < R(1)) scale = R(1);
    if (cx_abs(den) < R(1e-10) * scale) {
        raise(errc::pole_error,
              "torsion evaluated within tolerance of the pole at i pi " +
              std::to_string(j) + "/" + std::to_string(m * p));
    }
    return R(2) * num / den;
}

} // namespace detail

// tau(pi z) with the same stability guarantees; the form the contour
// integrands use.
template <class R>
cplx<R> torsion_pi(const TorusKnot& knot, const cplx<R>& z) {
    return detail::torsion_core<R>(knot.m, knot.p, pi_value<R>() * z);
}

} // namespace torusq
