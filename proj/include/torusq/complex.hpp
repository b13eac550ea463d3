#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <utility>

namespace torusq {

// Minimal complex value type usable with double, long double and the
// multiprecision reals from real.hpp.  std::complex is specified only for
// the builtin floating types, so the handful of operations the library
// needs are spelled out here once, generically.
template <class R>
struct cplx {
    R re{};
    R im{};

    cplx() = default;
    cplx(R r) : re(std::move(r)) {}
    cplx(R r, R i) : re(std::move(r)), im(std::move(i)) {}

    template <class S>
    static cplx from(const std::complex<S>& z) {
        return cplx(R(z.real()), R(z.imag()));
    }
    std::complex<double> to_double() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    cplx& operator+=(const cplx& o) { re += o.re; im += o.im; return *this; }
    cplx& operator-=(const cplx& o) { re -= o.re; im -= o.im; return *this; }
};

template <class R> cplx<R> operator+(cplx<R> a, const cplx<R>& b) { return a += b; }
template <class R> cplx<R> operator-(cplx<R> a, const cplx<R>& b) { return a -= b; }
template <class R> cplx<R> operator-(const cplx<R>& a) { return {-a.re, -a.im}; }

template <class R>
cplx<R> operator*(const cplx<R>& a, const cplx<R>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class R> cplx<R> operator*(const R& s, const cplx<R>& a) { return {s * a.re, s * a.im}; }
template <class R> cplx<R> operator*(const cplx<R>& a, const R& s) { return {a.re * s, a.im * s}; }

template <class R>
cplx<R> operator/(const cplx<R>& a, const cplx<R>& b) {
    R d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
template <class R> cplx<R> operator/(const cplx<R>& a, const R& s) { return {a.re / s, a.im / s}; }

template <class R> cplx<R> conj(const cplx<R>& a) { return {a.re, -a.im}; }
template <class R> R norm2(const cplx<R>& a) { return a.re * a.re + a.im * a.im; }

template <class R>
R cx_abs(const cplx<R>& a) {
    using std::hypot;
    return hypot(a.re, a.im);
}

template <class R>
R cx_arg(const cplx<R>& a) {
    using std::atan2;
    return atan2(a.im, a.re);
}

template <class R>
cplx<R> cx_polar(const R& mag, const R& ang) {
    using std::cos; using std::sin;
    return {mag * cos(ang), mag * sin(ang)};
}

template <class R>
cplx<R> cx_exp(const cplx<R>& z) {
    using std::exp; using std::cos; using std::sin;
    R m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

template <class R>
cplx<R> cx_sinh(const cplx<R>& z) {
    using std::sinh; using std::cosh; using std::sin; using std::cos;
    return {sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im)};
}

template <class R>
cplx<R> cx_cosh(const cplx<R>& z) {
    using std::sinh; using std::cosh; using std::sin; using std::cos;
    return {cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im)};
}

// Principal square root.
template <class R>
cplx<R> cx_sqrt(const cplx<R>& z) {
    using std::sqrt;
    R r = cx_abs(z);
    if (r == R(0)) return {R(0), R(0)};
    return cx_polar(sqrt(r), cx_arg(z) / R(2));
}

// Principal logarithm.
template <class R>
cplx<R> cx_log(const cplx<R>& z) {
    using std::log;
    return {log(cx_abs(z)), cx_arg(z)};
}

// Finite check written against ==, so it works for builtin and
// multiprecision reals alike.
template <class R>
bool is_finite_value(const R& x) {
    if (!(x == x)) return false; // NaN
    if (std::numeric_limits<R>::has_infinity) {
        const R inf = std::numeric_limits<R>::infinity();
        if (x == inf || x == -inf) return false;
    }
    return true;
}

template <class R>
bool cx_isfinite(const cplx<R>& z) {
    return is_finite_value(z.re) && is_finite_value(z.im);
}

} // namespace torusq
