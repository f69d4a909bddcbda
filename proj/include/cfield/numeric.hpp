#pragma once
#include <cmath>
#include <utility>
#include <vector>

#include "cfield/errors.hpp"

// Small scalar root-finding and optimization helpers shared by the analysis
// routines. All of them expect a valid bracket and leave precondition checks
// to the caller.

namespace cfield::num {

inline bool opposite_signs(double fa, double fb) {
    return (fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0);
}

// Plain bisection on [a,b] with f(a), f(b) of opposite sign (or zero at an
// endpoint). Converges unconditionally; used where robustness beats speed.
template <class F>
double bisect(F&& f, double a, double b, double xtol, int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (!opposite_signs(fa, fb))
        throw RootBracketFailure("bisect: no sign change over the bracket");
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if (opposite_signs(fa, fm)) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

// Brent's method: inverse quadratic / secant steps with a bisection fallback.
template <class F>
double brent_root(F&& f, double a, double b, double xtol, int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (!opposite_signs(fa, fb))
        throw RootBracketFailure("brent_root: no sign change over the bracket");
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if (opposite_signs(fb, fc) == false && opposite_signs(fb, fa)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        } else if (!opposite_signs(fb, fc)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    return b;
}

// Golden-section maximization of a unimodal function on [a,b].
// Returns the abscissa of the maximum.
template <class F>
double golden_max(F&& f, double a, double b, double xtol, int max_iter = 200) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

// Golden-section minimization; companion to golden_max.
template <class F>
double golden_min(F&& f, double a, double b, double xtol, int max_iter = 200) {
    return golden_max([&](double x) { return -f(x); }, a, b, xtol, max_iter);
}

// Logarithmically spaced grid on [lo, hi], endpoints included.
inline std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(n));
    const double la = std::log(lo);
    const double lb = std::log(hi);
    for (int i = 0; i < n; ++i)
        g.push_back(std::exp(la + (lb - la) * static_cast<double>(i) / (n - 1)));
    g.front() = lo;
    g.back() = hi;
    return g;
}

} // namespace cfield::num
