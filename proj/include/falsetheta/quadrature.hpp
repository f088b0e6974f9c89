// Adaptive Gauss-Legendre quadrature for complex-valued integrands of a real
// variable, plus semi-infinite drivers for exponentially decaying integrands.
#ifndef FALSETHETA_QUADRATURE_HPP
#define FALSETHETA_QUADRATURE_HPP

#include <functional>
#include <map>
#include <vector>

#include "types.hpp"

namespace ft {

struct GLRule {
    std::vector<double> x;  // nodes on [-1,1]
    std::vector<double> w;
};

// Gauss-Legendre nodes/weights by Newton iteration on Legendre polynomials.
inline const GLRule& gl_rule(int n) {
    static std::map<int, GLRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    GLRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return cache.emplace(n, std::move(r)).first->second;
}

using RealFn = std::function<cplx(double)>;

inline cplx gl_panel(const RealFn& f, double a, double b, int n) {
    const GLRule& r = gl_rule(n);
    const double c = 0.5 * (b - a), m = 0.5 * (a + b);
    cplx s = 0.0;
    for (int i = 0; i < n; ++i) s += r.w[i] * f(m + c * r.x[i]);
    return c * s;
}

// Adaptive bisection on [a,b]: accept a panel when GL(25) and GL(15) agree
// to the requested absolute tolerance or to near machine precision relative
// to the panel value.  The tolerance is not shrunk on recursion (subpanel
// errors are already far smaller once the integrand is resolved); the depth
// cap bounds the work on genuinely rough integrands.
inline cplx integrate_adaptive(const RealFn& f, double a, double b, double tol,
                               int depth = 0) {
    cplx hi = gl_panel(f, a, b, 25);
    cplx lo = gl_panel(f, a, b, 15);
    double err = std::abs(hi - lo);
    if (err <= tol || err <= 1e-14 * std::abs(hi) || depth >= 16) return hi;
    double m = 0.5 * (a + b);
    return integrate_adaptive(f, a, m, tol * 0.6, depth + 1) +
           integrate_adaptive(f, m, b, tol * 0.6, depth + 1);
}

// Integral over [a, infinity) of an integrand bounded by C e^{-rate * u} for
// large u.  Panels double in width; stops when the analytic tail bound and the
// last panels are below tol.
inline cplx integrate_to_inf(const RealFn& f, double a, double rate, double tol,
                             double first_width = 1.0) {
    if (rate <= 0) throw std::invalid_argument("integrate_to_inf: rate must be positive");
    cplx total = 0.0;
    double left = a, width = first_width;
    int small_streak = 0;
    for (int panel = 0; panel < 80; ++panel) {
        double right = left + width;
        cplx part = integrate_adaptive(f, left, right, tol * 0.25);
        total += part;
        // Estimate the integrand scale near the right edge to bound the tail:
        // |f(u)| <= M e^{-rate (u - right)}  =>  tail <= M / rate.
        double M = std::abs(f(right));
        double tail_bound = M / rate;
        if (std::abs(part) < tol * 0.1 && tail_bound < tol * 0.1) {
            if (++small_streak >= 2) break;
        } else {
            small_streak = 0;
        }
        left = right;
        width = std::min(width * 2.0, 16.0);
    }
    return total;
}

}  // namespace ft

#endif
