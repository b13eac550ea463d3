#include "torusq/series.hpp"

namespace torusq {

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double rational_to_double(const Rational& q) {
    return q.convert_to<double>();
}

RationalSeries sinh_series(long a, int order) {
    if (a < 1) raise(errc::invalid_argument, "sinh_series requires a >= 1");
    if (order < 2) raise(errc::invalid_argument, "sinh_series requires order >= 2");
    RationalSeries s(order);
    Rational c = a; // a^{2n+1}/(2n+1)! starting at n = 0
    for (int n = 1; n < order; n += 2) {
        s[n] = c;
        c *= Rational(a) * a;
        c /= Rational((n + 1)) * (n + 2);
    }
    return s;
}

RationalSeries sinh_over_x_series(long a, int order) {
    RationalSeries s(order);
    Rational c = a;
    for (int n = 0; n < order; n += 2) {
        s[n] = c;
        c *= Rational(a) * a;
        c /= Rational((n + 2)) * (n + 3);
    }
    return s;
}

RationalSeries ser_mul(const RationalSeries& a, const RationalSeries& b) {
    const int va = a.valuation(), vb = b.valuation();
    const int oa = a.order(), ob = b.order();
    const int n_out = std::min(oa + vb, ob + va);
    RationalSeries out(n_out);
    for (int n = 0; n < n_out; ++n) {
        const int lo = std::max(0, n - ob + 1);
        const int hi = std::min(n, oa - 1);
        Rational acc = 0;
        for (int i = lo; i <= hi; ++i) acc += a[i] * b[n - i];
        out[n] = acc;
    }
    return out;
}

RationalSeries ser_inv(const RationalSeries& a) {
    if (a.order() == 0 || a.valuation() == a.order())
        raise(errc::zero_leading_coefficient,
              "series is identically zero to its order");
    if (a[0] == 0)
        raise(errc::zero_leading_coefficient,
              "series has zero constant term; cancel the valuation first");
    RationalSeries out(a.order());
    out[0] = Rational(1) / a[0];
    for (int n = 1; n < a.order(); ++n) {
        Rational acc = 0;
        for (int i = 1; i <= n; ++i) acc += a[i] * out[n - i];
        out[n] = -acc / a[0];
    }
    return out;
}

RationalSeries shift_down(const RationalSeries& a, int v) {
    if (v < 0 || v > a.order())
        raise(errc::invalid_argument, "shift amount outside series order");
    for (int i = 0; i < v; ++i)
        if (a[i] != 0)
            raise(errc::invalid_argument,
                  "shift_down requires exact zeros below the shift");
    RationalSeries out(a.order() - v);
    for (int i = 0; i < out.order(); ++i) out[i] = a[i + v];
    return out;
}

RationalSeries x_tau_series(const TorusKnot& knot, int order) {
    if (order < 4 || order % 2 != 0)
        raise(errc::invalid_argument, "x_tau_series requires even order >= 4");
    const int work = order + 2;
    RationalSeries num = ser_mul(sinh_series(knot.m, work), sinh_series(knot.p, work));
    for (int i = 0; i < num.order(); ++i) num[i] *= 2;
    // x tau(x) = 2 sinh(mx) sinh(px) / (sinh(mpx)/x); the divisor has
    // constant term mp, so the inverse is a plain power series.
    RationalSeries inv_den = ser_inv(sinh_over_x_series(knot.mp(), work));
    return ser_mul(num, inv_den).truncated(order);
}

Rational even_derivative(const RationalSeries& s, int n) {
    if (n < 0) raise(errc::invalid_argument, "derivative index must be >= 0");
    if (2 * n >= s.order())
        raise(errc::order_exceeded, "series order " + std::to_string(s.order()) +
              " does not cover derivative 2n=" + std::to_string(2 * n));
    return Rational(factorial(2 * n)) * s[2 * n];
}

} // namespace torusq
