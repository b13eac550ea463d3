#pragma once

#include <complex>
#include <span>
#include <vector>

#include "torusq/complex.hpp"
#include "torusq/errors.hpp"
#include "torusq/knot.hpp"
#include "torusq/real.hpp"

namespace torusq {

// The color: dimension k >= 1 of the module attached to the knot.
struct Color {
    long k = 0;
};

Color validate_color(long k);

// Unit-modulus factor exp(i pi E / (2k)) carried as the exact integer
// residue E mod 4k.  This is what keeps the phase sums exact at large k:
// the quadratic exponents are reduced in integer arithmetic before any
// floating-point evaluation.
class ExactPhase {
public:
    ExactPhase(Color color, long long exponent);

    long k() const { return k_; }
    long residue() const { return residue_; } // in [0, 4k)
    std::complex<double> value() const;

private:
    long k_ = 1;
    long residue_ = 0;
};

namespace detail {

// Integer exponent E(eps, s) = mp s^2 + 2 s (m + eps p) + 2 eps with
// s = 2r; the summand of the Gaussian sum is eps * exp((h/4) E).
inline long long phase_exponent(long m, long p, int eps, long long s) {
    return static_cast<long long>(m) * p * s * s + 2 * s * (m + eps * p) + 2 * eps;
}

// Visits the k terms per sign in a fixed order: eps = +1 then eps = -1,
// s ascending from -(k-1) by steps of 2.
template <class F>
void for_each_term(long m, long p, long k, F&& f) {
    for (int eps : {+1, -1})
        for (long long s = -(k - 1); s <= k - 1; s += 2)
            f(eps, s, phase_exponent(m, p, eps, s));
}

// Exponents must stay well inside int64 range.
inline void check_exponent_range(const TorusKnot& knot, long k) {
    if (static_cast<double>(knot.mp()) * k * k > 4.0e18)
        raise(errc::invalid_argument, "mp k^2 exceeds the exact integer range");
}

} // namespace detail

// Gaussian sum of the colored Jones formula:
// sum_{eps,r} eps exp(h(mp r^2 + r(m+eps p) + eps/2)), entire in h.
template <class R>
cplx<R> gauss_sum_core(const TorusKnot& knot, long k, const cplx<R>& h) {
    detail::check_exponent_range(knot, k);
    const double emax = static_cast<double>(knot.mp()) * k * k +
                        2.0 * k * (knot.m + knot.p) + 2.0;
    if (std::abs(static_cast<double>(h.re)) / 4.0 * emax > exp_overflow_limit<R>())
        raise(errc::overflow, "gauss_sum exponent |Re h| mp k^2 / 4 exceeds range");

    const cplx<R> h4 = h / R(4);
    cplx<R> acc{};
    detail::for_each_term(knot.m, knot.p, k, [&](int eps, long long, long long E) {
        const cplx<R> term = cx_exp(h4 * R(static_cast<double>(E)));
        acc += (eps > 0) ? term : -term;
    });
    if (!cx_isfinite(acc)) raise(errc::overflow, "gauss_sum overflowed");
    return acc;
}

std::complex<double> gauss_sum(const TorusKnot& knot, Color color, std::complex<double> h);

// J_{L,k}/J_{O,k} = gauss_sum / (2 sinh(kh/2)).  Throws DivisionNearZero
// when |sinh(kh/2)| < 1e-12: the caller is at (or numerically at) the root
// of unity and must use kashaev_exact instead.
std::complex<double> jones_ratio(const TorusKnot& knot, Color color, std::complex<double> h);

// <L>_k, the hyperbolic specification: the h -> 2 pi i / k limit of the
// ratio, evaluated in closed form (both numerator and denominator vanish;
// differentiating once gives an exact finite sum with phases reduced mod 4k):
//   <L>_k = -(1/k) sum_{eps,s} eps (E/4) exp(i pi (E mod 4k) / (2k)).
std::complex<double> kashaev_exact(const TorusKnot& knot, Color color);

// Generic-precision version of the same sum (sequential accumulation in
// term order; no kernel dispatch).
template <class R>
cplx<R> kashaev_core(const TorusKnot& knot, long k) {
    detail::check_exponent_range(knot, k);
    const R pi = pi_value<R>();
    const long long mod = 4LL * k;
    cplx<R> acc{};
    detail::for_each_term(knot.m, knot.p, k, [&](int eps, long long, long long E) {
        const long long r = ((E % mod) + mod) % mod;
        const R theta = pi * R(static_cast<double>(r)) / R(static_cast<double>(2 * k));
        const R c = R(static_cast<double>(eps)) * R(static_cast<double>(E)) / R(4);
        acc += cx_polar(c, theta);
    });
    return -(acc / R(static_cast<double>(k)));
}

struct LimitEstimate {
    std::complex<double> value;
    double error = 0.0;
};

// Independent check of kashaev_exact: evaluates jones_ratio at
// h = 2 pi i/k + delta and h = 2 pi i/k + i delta, Richardson-extrapolates
// each ladder to delta -> 0 and requires the two directional limits to
// agree within the estimate (NoConvergence beyond 10x).
LimitEstimate kashaev_limit_oracle(const TorusKnot& knot, Color color,
                                   std::span<const double> deltas);

// delta_0 = 1/(mp k^2) halved 9 times: keeps the real-direction terms,
// which scale like exp(delta mp k^2 / 4), within range at every k.
std::vector<double> default_limit_ladder(const TorusKnot& knot, Color color);

} // namespace torusq
