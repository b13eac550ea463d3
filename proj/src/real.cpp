#include "torusq/real.hpp"

namespace torusq {

const char* precision_name(Precision p) {
    switch (p) {
        case Precision::f64:  return "double";
        case Precision::f80:  return "long double";
        case Precision::d50:  return "mpfr-50";
        case Precision::d100: return "mpfr-100";
        case Precision::d200: return "mpfr-200";
        case Precision::d400: return "mpfr-400";
    }
    return "?";
}

int precision_digits(Precision p) {
    switch (p) {
        case Precision::f64:  return 15;
        case Precision::f80:  return 18;
        case Precision::d50:  return 50;
        case Precision::d100: return 100;
        case Precision::d200: return 200;
        case Precision::d400: return 400;
    }
    return 0;
}

Precision precision_for_digits(int digits10) {
    if (digits10 <= 15)  return Precision::f64;
    if (digits10 <= 18)  return Precision::f80;
    if (digits10 <= 50)  return Precision::d50;
    if (digits10 <= 100) return Precision::d100;
    if (digits10 <= 200) return Precision::d200;
    if (digits10 <= 400) return Precision::d400;
    raise(errc::tolerance_not_met,
          "required working precision of " + std::to_string(digits10) +
          " digits exceeds the 400-digit cap");
}

Precision precision_for_bits(int bits) {
    // 1 decimal digit ~ 3.32 bits
    return precision_for_digits(static_cast<int>(bits / 3.32) + 1);
}

} // namespace torusq
