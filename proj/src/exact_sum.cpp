#include "torusq/exact_sum.hpp"

#include <cmath>

#include "torusq/kernels.hpp"

namespace torusq {

Color validate_color(long k) {
    if (k < 1) raise(errc::non_positive, "color k must be >= 1 (got " + std::to_string(k) + ")");
    if (k > 100000000L)
        raise(errc::invalid_argument, "color k too large for exact integer phases");
    return Color{k};
}

ExactPhase::ExactPhase(Color color, long long exponent) : k_(color.k) {
    const long long mod = 4LL * k_;
    residue_ = static_cast<long>(((exponent % mod) + mod) % mod);
}

std::complex<double> ExactPhase::value() const {
    return std::polar(1.0, M_PI * residue_ / (2.0 * k_));
}

std::complex<double> gauss_sum(const TorusKnot& knot, Color color, std::complex<double> h) {
    if (!std::isfinite(h.real()) || !std::isfinite(h.imag()))
        raise(errc::domain_error, "gauss_sum requires finite h");
    return gauss_sum_core<double>(knot, color.k, cplx<double>::from(h)).to_double();
}

std::complex<double> jones_ratio(const TorusKnot& knot, Color color, std::complex<double> h) {
    const std::complex<double> den = 2.0 * std::sinh(static_cast<double>(color.k) * h / 2.0);
    if (std::abs(den) < 2.0e-12)
        raise(errc::division_near_zero,
              "sinh(kh/2) vanishes; h is at a root of unity, use kashaev_exact");
    return gauss_sum(knot, color, h) / den;
}

std::complex<double> kashaev_exact(const TorusKnot& knot, Color color) {
    detail::check_exponent_range(knot, color.k);
    const long k = color.k;
    const long long mod = 4LL * k;
    const double scale = M_PI / (2.0 * k);

    std::vector<double> theta, coeff;
    theta.reserve(2 * static_cast<std::size_t>(k));
    coeff.reserve(2 * static_cast<std::size_t>(k));
    detail::for_each_term(knot.m, knot.p, k, [&](int eps, long long, long long E) {
        const long long r = ((E % mod) + mod) % mod;
        theta.push_back(scale * static_cast<double>(r));
        coeff.push_back(eps * static_cast<double>(E) / 4.0);
    });

    const std::complex<double> s =
        kernels::weighted_cis_sum(theta.data(), coeff.data(), theta.size());
    return -s / static_cast<double>(k);
}

std::vector<double> default_limit_ladder(const TorusKnot& knot, Color color) {
    const double d0 = 1.0 / (static_cast<double>(knot.mp()) * color.k * color.k);
    std::vector<double> ds(9);
    double d = d0;
    for (auto& x : ds) { x = d; d *= 0.5; }
    return ds;
}

namespace {

// Value at 0 of the polynomial through (x_i, y_i) (Neville).
std::complex<double> neville_at_zero(std::span<const double> xs,
                                     std::span<const std::complex<double>> ys) {
    std::vector<std::complex<double>> t(ys.begin(), ys.end());
    const std::size_t n = t.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i + j < n; ++i)
            t[i] = (xs[i + j] * t[i] - xs[i] * t[i + 1]) / (xs[i + j] - xs[i]);
    return t[0];
}

} // namespace

LimitEstimate kashaev_limit_oracle(const TorusKnot& knot, Color color,
                                   std::span<const double> deltas) {
    if (deltas.empty()) raise(errc::invalid_argument, "delta ladder is empty");
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (!(deltas[i] > 0.0))
            raise(errc::invalid_argument, "delta values must be positive");
        if (i > 0 && !(deltas[i] < deltas[i - 1]))
            raise(errc::invalid_argument, "delta values must be decreasing");
    }

    const double h0_im = 2.0 * M_PI / color.k;
    const std::complex<double> dirs[2] = {{1.0, 0.0}, {0.0, 1.0}};

    std::complex<double> limit[2];
    double est[2];
    for (int d = 0; d < 2; ++d) {
        std::vector<std::complex<double>> ys;
        ys.reserve(deltas.size());
        for (double dl : deltas) {
            const std::complex<double> h = std::complex<double>(0.0, h0_im) + dirs[d] * dl;
            ys.push_back(jones_ratio(knot, color, h));
        }
        if (deltas.size() == 1) {
            limit[d] = ys[0];
            est[d] = std::abs(ys[0]); // no extrapolation possible
            continue;
        }
        const std::complex<double> full = neville_at_zero(deltas, ys);
        const std::complex<double> sub = neville_at_zero(
            deltas.subspan(0, deltas.size() - 1),
            std::span<const std::complex<double>>(ys).subspan(0, ys.size() - 1));
        limit[d] = full;
        est[d] = std::abs(full - sub);
    }

    const double dir_diff = std::abs(limit[0] - limit[1]);
    const std::complex<double> value = (limit[0] + limit[1]) / 2.0;
    if (deltas.size() > 1) {
        const double floor = 1.0e-15 * (std::abs(limit[0]) + std::abs(limit[1]) + 1.0);
        if (dir_diff > 10.0 * std::max({est[0], est[1], floor}))
            raise(errc::no_convergence,
                  "directional limits disagree beyond 10x the extrapolation estimate");
    }
    return {value, std::max({est[0], est[1], dir_diff})};
}

} // namespace torusq
