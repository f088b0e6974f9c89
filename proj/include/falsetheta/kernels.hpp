// The Gaussian kernels entering the Euler-Maclaurin expansions:
//
//   K1(x1,x2) = e^{-Q(x)}         (Q the rank-two form)
//   L1(x1,x2) = x2 e^{-Q(x)}
//   K2(x)     = e^{-x^2}
//   L2(x)     = x e^{-x^2}
//
// Every partial derivative is (polynomial) * kernel; the polynomials follow
// the Rodrigues-type recurrences
//   H_{n1+1,n2} = d/dx1 H - (6x1+3x2) H,   H_{n1,n2+1} = d/dx2 H - (3x1+2x2) H,
// and for e^{-x^2}: h_{n+1} = h' - 2x h.  Restricting to an axis leaves a
// one-variable polynomial times e^{-c x^2}, so half-line boundary integrals
// reduce to the moments  int_0^inf x^j e^{-c x^2} dx = Gamma((j+1)/2)/(2
// c^{(j+1)/2}).
#ifndef FALSETHETA_KERNELS_HPP
#define FALSETHETA_KERNELS_HPP

#include <map>
#include <utility>

#include "shifts.hpp"

namespace ft {

// Sparse bivariate polynomial with double coefficients.
struct Poly2 {
    std::map<std::pair<int, int>, double> c;  // (i,j) -> coeff of x1^i x2^j

    void add(int i, int j, double v) {
        auto& r = c[{i, j}];
        r += v;
        if (r == 0.0) c.erase({i, j});
    }
    double eval(double x1, double x2) const {
        double s = 0.0;
        for (const auto& [ij, v] : c)
            s += v * std::pow(x1, ij.first) * std::pow(x2, ij.second);
        return s;
    }
    double at00() const {
        auto it = c.find({0, 0});
        return it == c.end() ? 0.0 : it->second;
    }
};

namespace detail {

// H with d^{n1} d^{n2} e^{-Q} = H_{n1,n2} e^{-Q}, cached.
inline const Poly2& gauss2_deriv_poly(int n1, int n2) {
    static std::map<std::pair<int, int>, Poly2> cache;
    auto key = std::make_pair(n1, n2);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Poly2 h;
    if (n1 == 0 && n2 == 0) {
        h.add(0, 0, 1.0);
    } else {
        // peel one derivative (x1 first if available)
        const Poly2& prev = (n1 > 0) ? gauss2_deriv_poly(n1 - 1, n2)
                                     : gauss2_deriv_poly(n1, n2 - 1);
        for (const auto& [ij, v] : prev.c) {
            auto [i, j] = ij;
            if (n1 > 0) {
                if (i > 0) h.add(i - 1, j, v * i);  // d/dx1
                h.add(i + 1, j, -6.0 * v);          // -(6x1+3x2)
                h.add(i, j + 1, -3.0 * v);
            } else {
                if (j > 0) h.add(i, j - 1, v * j);  // d/dx2
                h.add(i + 1, j, -3.0 * v);          // -(3x1+2x2)
                h.add(i, j + 1, -2.0 * v);
            }
        }
    }
    return cache.emplace(key, std::move(h)).first->second;
}

// h_n with d^n e^{-x^2} = h_n e^{-x^2}  (coefficients of x^j), cached.
inline const std::vector<double>& gauss1_deriv_poly(int n) {
    static std::vector<std::vector<double>> cache{{1.0}};
    while ((int)cache.size() <= n) {
        const auto& p = cache.back();
        std::vector<double> q(p.size() + 1, 0.0);
        for (size_t j = 0; j < p.size(); ++j) {
            if (j > 0) q[j - 1] += p[j] * double(j);  // derivative
            q[j + 1] -= 2.0 * p[j];                   // -2x p
        }
        cache.push_back(std::move(q));
    }
    return cache[n];
}

// int_0^inf x^j e^{-c x^2} dx
inline double half_gauss_moment(int j, double c) {
    return 0.5 * std::tgamma(0.5 * (j + 1)) / std::pow(c, 0.5 * (j + 1));
}

}  // namespace detail

// ---- K1 = e^{-Q} -----------------------------------------------------------

// d^{(n1,n2)} K1 at a point
inline double K1_deriv(int n1, int n2, double x1, double x2) {
    return detail::gauss2_deriv_poly(n1, n2).eval(x1, x2) *
           std::exp(-quad_Q(x1, x2));
}
inline double K1_deriv00(int n1, int n2) {
    return detail::gauss2_deriv_poly(n1, n2).at00();
}

// int_0^inf K1^{(0,n2)}(x1, 0) dx1   (restriction has weight e^{-3 x1^2})
inline double K1_boundary_x2(int n2) {
    const Poly2& h = detail::gauss2_deriv_poly(0, n2);
    double s = 0.0;
    for (const auto& [ij, v] : h.c)
        if (ij.second == 0) s += v * detail::half_gauss_moment(ij.first, 3.0);
    return s;
}

// int_0^inf K1^{(n1,0)}(0, x2) dx2   (restriction has weight e^{-x2^2})
inline double K1_boundary_x1(int n1) {
    const Poly2& h = detail::gauss2_deriv_poly(n1, 0);
    double s = 0.0;
    for (const auto& [ij, v] : h.c)
        if (ij.first == 0) s += v * detail::half_gauss_moment(ij.second, 1.0);
    return s;
}

// ---- L1 = x2 e^{-Q}:  L1^{(n1,n2)} = (x2 H_{n1,n2} + n2 H_{n1,n2-1}) e^{-Q}

inline double L1_deriv(int n1, int n2, double x1, double x2) {
    double s = x2 * detail::gauss2_deriv_poly(n1, n2).eval(x1, x2);
    if (n2 > 0)
        s += n2 * detail::gauss2_deriv_poly(n1, n2 - 1).eval(x1, x2);
    return s * std::exp(-quad_Q(x1, x2));
}
inline double L1_deriv00(int n1, int n2) {
    return n2 > 0 ? n2 * detail::gauss2_deriv_poly(n1, n2 - 1).at00() : 0.0;
}

// int_0^inf L1^{(0,n2)}(x1, 0) dx1   (the x2-part dies on the axis)
inline double L1_boundary_x2(int n2) {
    if (n2 == 0) return 0.0;
    const Poly2& h = detail::gauss2_deriv_poly(0, n2 - 1);
    double s = 0.0;
    for (const auto& [ij, v] : h.c)
        if (ij.second == 0) s += v * detail::half_gauss_moment(ij.first, 3.0);
    return n2 * s;
}

// int_0^inf L1^{(n1,0)}(0, x2) dx2
inline double L1_boundary_x1(int n1) {
    const Poly2& h = detail::gauss2_deriv_poly(n1, 0);
    double s = 0.0;
    for (const auto& [ij, v] : h.c)
        if (ij.first == 0)
            s += v * detail::half_gauss_moment(ij.second + 1, 1.0);
    return s;
}

// ---- one-variable kernels --------------------------------------------------

// K2^{(n)}(0) with K2 = e^{-x^2}
inline double K2_deriv0(int n) {
    const auto& p = detail::gauss1_deriv_poly(n);
    return p[0];
}

// L2^{(n)}(0) with L2 = x e^{-x^2}:  L2^{(n)} = (x h_n + n h_{n-1}) e^{-x^2}
inline double L2_deriv0(int n) {
    return n > 0 ? n * detail::gauss1_deriv_poly(n - 1)[0] : 0.0;
}

// int_0^inf x e^{-x^2} dx = 1/2
inline constexpr double L2_full_integral = 0.5;

}  // namespace ft

#endif
