#pragma once

// Precision-generic contour quadrature engine.  Internal to the library;
// the public entry points in quadrature.cpp pick a tier and dispatch here.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <queue>
#include <thread>
#include <vector>

#include "torusq/complex.hpp"
#include "torusq/errors.hpp"
#include "torusq/knot.hpp"
#include "torusq/real.hpp"

namespace torusq::detail {

// Nested Clenshaw-Curtis pair: 17 nodes with the 9-node rule embedded at
// the even positions.  Nodes cos(j pi/16) and the closed-form weights are
// computed once per real type at full working precision.
template <class R>
struct CCRule {
    std::array<R, 17> x;
    std::array<R, 17> w16;
    std::array<R, 9> w8;

    static const CCRule& get() {
        static const CCRule rule = make();
        return rule;
    }

private:
    template <int N>
    static std::array<R, N + 1> weights() {
        using std::cos;
        const R pi = pi_value<R>();
        std::array<R, N + 1> w{};
        w[0] = w[N] = R(1) / R(N * N - 1);
        for (int j = 1; j < N; ++j) {
            const R theta = pi * R(j) / R(N);
            R v = R(1);
            for (int t = 1; t < N / 2; ++t)
                v -= R(2) * cos(R(2 * t) * theta) / R(4 * t * t - 1);
            v -= cos(R(N) * theta) / R(N * N - 1);
            w[static_cast<std::size_t>(j)] = R(2) * v / R(N);
        }
        return w;
    }

    static CCRule make() {
        using std::cos;
        CCRule r;
        const R pi = pi_value<R>();
        for (int j = 0; j <= 16; ++j) r.x[static_cast<std::size_t>(j)] = cos(pi * R(j) / R(16));
        r.w16 = weights<16>();
        r.w8 = weights<8>();
        return r;
    }
};

template <class R>
struct QuadOutcome {
    cplx<R> value;
    double error = 0.0;
    long evaluations = 0;
    bool converged = false;
};

template <class R>
struct Panel {
    double a = 0.0, b = 0.0;
    cplx<R> value;
    double error = 0.0;
};

// Evaluates one panel of g over [a, b].
template <class R, class F>
Panel<R> evaluate_panel(F&& g, double a, double b) {
    const CCRule<R>& rule = CCRule<R>::get();
    const R c = (R(a) + R(b)) / R(2);
    const R h = (R(b) - R(a)) / R(2);

    cplx<R> i16{}, i8{};
    std::array<cplx<R>, 17> fx;
    for (int j = 0; j <= 16; ++j) {
        const R t = c + h * rule.x[static_cast<std::size_t>(j)];
        fx[static_cast<std::size_t>(j)] = g(t);
        if (!cx_isfinite(fx[static_cast<std::size_t>(j)]))
            raise(errc::non_finite_sample,
                  "integrand not finite at x = " + std::to_string(static_cast<double>(t)));
    }
    for (int j = 0; j <= 16; ++j) i16 += rule.w16[static_cast<std::size_t>(j)] * fx[static_cast<std::size_t>(j)];
    for (int j = 0; j <= 8; ++j) i8 += rule.w8[static_cast<std::size_t>(j)] * fx[static_cast<std::size_t>(2 * j)];

    Panel<R> p;
    p.a = a;
    p.b = b;
    p.value = h * i16;
    p.error = static_cast<double>(cx_abs(h * (i16 - i8)));
    return p;
}

// Adaptive composite quadrature over the given initial breakpoints.
// Worst panel first (ties by left endpoint); the final value is the sum of
// panel results in ascending order of the left endpoint, so the result is
// deterministic for any worker count.
template <class R, class F>
QuadOutcome<R> integrate_adaptive(F&& g, const std::vector<double>& breakpoints,
                                  int max_panels, double tol_rel, double tol_abs,
                                  int jobs) {
    std::vector<Panel<R>> panels(breakpoints.size() - 1);

    // Initial sweep; panels are independent, so spread them over workers.
    const int nw = std::max(1, jobs);
    if (nw > 1 && panels.size() > 8) {
        std::vector<std::thread> ws;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < nw; ++t)
            ws.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < panels.size();)
                    panels[i] = evaluate_panel<R>(g, breakpoints[i], breakpoints[i + 1]);
            });
        for (auto& w : ws) w.join();
    } else {
        for (std::size_t i = 0; i < panels.size(); ++i)
            panels[i] = evaluate_panel<R>(g, breakpoints[i], breakpoints[i + 1]);
    }
    long evals = static_cast<long>(panels.size()) * 17;

    auto worse = [&](std::size_t lhs, std::size_t rhs) {
        if (panels[lhs].error != panels[rhs].error)
            return panels[lhs].error < panels[rhs].error; // max-heap on error
        return panels[lhs].a > panels[rhs].a;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> queue(worse);
    double total_err = 0.0;
    cplx<R> total_val{};
    for (std::size_t i = 0; i < panels.size(); ++i) {
        queue.push(i);
        total_err += panels[i].error;
        total_val += panels[i].value;
    }

    auto good_enough = [&] {
        return total_err <= std::max(tol_abs, tol_rel * static_cast<double>(cx_abs(total_val)));
    };

    bool converged = good_enough();
    while (!converged && static_cast<int>(panels.size()) < max_panels && !queue.empty()) {
        const std::size_t idx = queue.top();
        queue.pop();
        const Panel<R> parent = panels[idx];
        if (parent.error <= 0.0) break; // nothing left to gain
        const double mid = 0.5 * (parent.a + parent.b);
        Panel<R> left = evaluate_panel<R>(g, parent.a, mid);
        Panel<R> right = evaluate_panel<R>(g, mid, parent.b);
        evals += 34;
        total_err += left.error + right.error - parent.error;
        total_val += left.value + right.value - parent.value;
        panels[idx] = left;
        panels.push_back(right);
        queue.push(idx);
        queue.push(panels.size() - 1);
        converged = good_enough();
    }

    std::sort(panels.begin(), panels.end(),
              [](const Panel<R>& l, const Panel<R>& r) { return l.a < r.a; });
    QuadOutcome<R> out;
    for (const auto& p : panels) {
        out.value += p.value;
        out.error += p.error;
    }
    out.evaluations = evals;
    out.converged = out.error <= std::max(tol_abs, tol_rel * static_cast<double>(cx_abs(out.value)));
    return out;
}

// tau(z) with the sinh factors built from a single complex exponential:
// w = e^z, sinh(a z) = (w^a - w^{-a})/2.  Near the zeros of sinh(mpz)
// (|Re(mp z)| < 1/4 is a cheap superset) this falls back to the fully
// guarded evaluation in torsion_core.
template <class R>
struct TauFast {
    long m, p;

    cplx<R> operator()(const cplx<R>& z) const {
        if (std::fabs(static_cast<double>(z.re)) * static_cast<double>(m * p) < 0.25)
            return torsion_core<R>(m, p, z);
        const cplx<R> w = cx_exp(z);
        const cplx<R> wm = ipow(w, m);
        const cplx<R> wmp = ipow(wm, p);
        const cplx<R> wp = ipow(w, p);
        const cplx<R> one{R(1), R(0)};
        const cplx<R> shm = (wm - one / wm) / R(2);
        const cplx<R> shp = (wp - one / wp) / R(2);
        const cplx<R> shmp = (wmp - one / wmp) / R(2);
        return R(2) * shm * shp / shmp;
    }

private:
    static cplx<R> ipow(cplx<R> base, long e) {
        cplx<R> acc{R(1), R(0)};
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }
};

// Breakpoints for an integrand whose phase along the contour is
// alpha x + beta x^2: panel edges every ~1.5 cycles, a minimum resolution
// of X/8, and a hard cap on the initial panel count.
std::vector<double> plan_breakpoints(double X, double alpha, double beta, int max_initial);

} // namespace torusq::detail
