#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "torusq/errors.hpp"

namespace torusq {

namespace mp = boost::multiprecision;

// Fixed multiprecision tiers.  Static digit counts keep the types free of
// global precision state, so they can be used from worker threads.
using real50  = mp::number<mp::mpfr_float_backend<50>,  mp::et_off>;
using real100 = mp::number<mp::mpfr_float_backend<100>, mp::et_off>;
using real200 = mp::number<mp::mpfr_float_backend<200>, mp::et_off>;
using real400 = mp::number<mp::mpfr_float_backend<400>, mp::et_off>;

enum class Precision { f64, f80, d50, d100, d200, d400 };

const char* precision_name(Precision p);

// Decimal digits carried by a tier.
int precision_digits(Precision p);

// Smallest tier holding at least `digits10` decimal digits.
// Throws errc::tolerance_not_met past the d400 cap.
Precision precision_for_digits(int digits10);

// Smallest tier holding at least `bits` of significand.
Precision precision_for_bits(int bits);

// Invokes f with a value-initialized scalar of the tier's real type and
// returns its result.  All tiers of f must return the same type.
template <class F>
auto dispatch_real(Precision p, F&& f) {
    switch (p) {
        case Precision::f64:  return f(double{});
        case Precision::f80:  return f((long double){});
        case Precision::d50:  return f(real50{});
        case Precision::d100: return f(real100{});
        case Precision::d200: return f(real200{});
        case Precision::d400: return f(real400{});
    }
    raise(errc::invalid_argument, "unknown precision tier");
}

template <class R>
R pi_value() {
    if constexpr (std::is_same_v<R, double> || std::is_same_v<R, long double>) {
        return R(3.14159265358979323846264338327950288L);
    } else {
        using std::atan;
        static const R pi = R(4) * atan(R(1));
        return pi;
    }
}

// Largest x with exp(x) finite in R; used for overflow guards.
template <class R>
double exp_overflow_limit() {
    if constexpr (std::is_same_v<R, double>) return 709.0;
    else if constexpr (std::is_same_v<R, long double>) return 11355.0;
    else return 1.0e9; // mpfr exponent range is far wider than any use here
}

} // namespace torusq
