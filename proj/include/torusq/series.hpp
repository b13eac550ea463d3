#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <vector>

#include "torusq/errors.hpp"
#include "torusq/knot.hpp"

namespace torusq {

using Rational = boost::multiprecision::mpq_rational;
using BigInt   = boost::multiprecision::mpz_int;

// Truncated power series with exact rational coefficients.  Coefficient i
// is the coefficient of x^i; everything at index >= order() is unknown,
// not zero.  Arithmetic never extends the reliable order.
class RationalSeries {
public:
    RationalSeries() = default;
    explicit RationalSeries(int order) : coeff_(static_cast<std::size_t>(order)) {
        if (order < 0) raise(errc::invalid_argument, "series order must be >= 0");
    }

    int order() const { return static_cast<int>(coeff_.size()); }

    const Rational& operator[](int i) const { return coeff_.at(static_cast<std::size_t>(i)); }
    Rational& operator[](int i) { return coeff_.at(static_cast<std::size_t>(i)); }

    // Index of the first nonzero coefficient; order() if none is known.
    int valuation() const {
        for (int i = 0; i < order(); ++i)
            if (coeff_[static_cast<std::size_t>(i)] != 0) return i;
        return order();
    }

    RationalSeries truncated(int new_order) const {
        RationalSeries out(new_order < order() ? new_order : order());
        for (int i = 0; i < out.order(); ++i) out[i] = (*this)[i];
        return out;
    }

private:
    std::vector<Rational> coeff_;
};

// Maclaurin series of sinh(a x): a^{2n+1}/(2n+1)! at odd powers.
RationalSeries sinh_series(long a, int order);

// Series of sinh(a x)/x; constant term a, even powers only.
RationalSeries sinh_over_x_series(long a, int order);

// Cauchy product.  Result order = min(a.order + val(b), b.order + val(a)):
// below that index every contribution from unknown tails is blocked by a
// known-zero factor.
RationalSeries ser_mul(const RationalSeries& a, const RationalSeries& b);

// Multiplicative inverse of a series with nonzero constant term.
RationalSeries ser_inv(const RationalSeries& a);

// Divide by x^v; the first v coefficients must be exactly zero.
RationalSeries shift_down(const RationalSeries& a, int v);

// Series of x tau(x) = 2 x sinh(mx) sinh(px) / sinh(mpx), exact to the
// requested truncation order (exclusive).  Even function starting at x^2.
RationalSeries x_tau_series(const TorusKnot& knot, int order);

// (2n)! * coefficient of x^{2n}: the 2n-th derivative at 0.
Rational even_derivative(const RationalSeries& s, int n);

BigInt factorial(int n);

double rational_to_double(const Rational& q);

template <class R>
R rational_to_real(const Rational& q) {
    return R(numerator(q)) / R(denominator(q));
}

} // namespace torusq
