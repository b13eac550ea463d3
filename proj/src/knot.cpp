#include "torusq/knot.hpp"

#include <cmath>
#include <numeric>

namespace torusq {

TorusKnot validate_knot(long m, long p) {
    if (m < 1 || p < 1)
        raise(errc::non_positive, "m and p must be positive (got m=" +
              std::to_string(m) + ", p=" + std::to_string(p) + ")");
    if (std::gcd(m, p) != 1)
        raise(errc::not_coprime, "m and p must be coprime (got m=" +
              std::to_string(m) + ", p=" + std::to_string(p) + ")");
    return TorusKnot{m, p, m == 1 || p == 1};
}

double pole_residue(const TorusKnot& knot, long j) {
    if (j < 1 || j > knot.mp() - 1)
        raise(errc::index_out_of_range, "pole index j=" + std::to_string(j) +
              " outside 1.." + std::to_string(knot.mp() - 1));
    if (j % knot.m == 0 || j % knot.p == 0) return 0.0;
    const double s = (j % 2 == 0) ? -1.0 : 1.0; // (-1)^{j+1}
    return s * 2.0 * std::sin(M_PI * j / knot.m) * std::sin(M_PI * j / knot.p) /
           (knot.mp() * M_PI);
}

std::vector<PoleDatum> poles(const TorusKnot& knot) {
    std::vector<PoleDatum> out;
    out.reserve(knot.mp() - 1);
    for (long j = 1; j <= knot.mp() - 1; ++j) {
        out.push_back(PoleDatum{
            j,
            {0.0, static_cast<double>(j) / knot.mp()},
            {pole_residue(knot, j), 0.0},
        });
    }
    return out;
}

std::complex<double> torsion(const TorusKnot& knot, std::complex<double> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        raise(errc::domain_error, "torsion argument must be finite");
    cplx<double> v = detail::torsion_core<double>(knot.m, knot.p, cplx<double>::from(z));
    if (!cx_isfinite(v))
        raise(errc::overflow, "torsion overflowed at |Re z| ~ " +
              std::to_string(std::abs(z.real())));
    return v.to_double();
}

namespace {

// Delta(t) written through u = Log(t)/2 (principal branch):
//   Delta = sinh(mpu) sinh(u) / (sinh(mu) sinh(pu)).
// Every zero of the denominator inside the principal strip |Im u| <= pi/2
// is cancelled by a zero of the numerator, so the quotient only has
// removable singularities; they are evaluated by matched sinhc ratios.
std::complex<double> alexander_impl(long m, long p, cplx<double> u) {
    using detail::sinhc;
    const double pi = pi_value<double>();
    const long mp = m * p;

    // t near 1: all four factors vanish like a*u.
    if (norm2(static_cast<double>(mp) * u) < 1.0 / 16.0) {
        return (sinhc(static_cast<double>(mp) * u) * sinhc(u) /
                (sinhc(static_cast<double>(m) * u) * sinhc(static_cast<double>(p) * u)))
            .to_double();
    }

    for (int which = 0; which < 2; ++which) {
        const long a = which == 0 ? m : p;  // factor whose zero we are near
        const long b = which == 0 ? p : m;
        const double au_im = a * u.im;
        const double cd = std::round(au_im / pi);
        const long c = static_cast<long>(cd);
        if (c == 0) continue;
        const cplx<double> d = (static_cast<double>(a) * u - cplx<double>(0.0, c * pi)) /
                               static_cast<double>(a); // u - i pi c/a
        if (norm2(static_cast<double>(mp) * d) >= 1.0 / 16.0) continue;
        // sinh(mp u) = (-1)^{cb} sinh(mp d), sinh(a u) = (-1)^c sinh(a d).
        const cplx<double> ratio =
            static_cast<double>(b) * sinhc(static_cast<double>(mp) * d) /
            sinhc(static_cast<double>(a) * d);
        const cplx<double> rest = cx_sinh(u) / cx_sinh(static_cast<double>(b) * u);
        const cplx<double> v = ratio * rest;
        return (((c * (b - 1)) % 2 == 0) ? v : -v).to_double();
    }

    const cplx<double> num = cx_sinh(static_cast<double>(mp) * u) * cx_sinh(u);
    const cplx<double> den =
        cx_sinh(static_cast<double>(m) * u) * cx_sinh(static_cast<double>(p) * u);
    if (cx_abs(den) == 0.0)
        raise(errc::domain_error, "alexander denominator vanished");
    return (num / den).to_double();
}

} // namespace

std::complex<double> alexander(const TorusKnot& knot, std::complex<double> t) {
    if (t == std::complex<double>(0.0, 0.0) || !std::isfinite(t.real()) ||
        !std::isfinite(t.imag()))
        raise(errc::domain_error, "alexander requires finite t != 0");
    const cplx<double> u = cx_log(cplx<double>::from(t)) / 2.0;
    std::complex<double> v = alexander_impl(knot.m, knot.p, u);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        raise(errc::overflow, "alexander overflowed");
    return v;
}

} // namespace torusq
