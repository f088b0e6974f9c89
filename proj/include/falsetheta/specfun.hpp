// One- and two-dimensional Gaussian error-type functions.
//
//   E(u)  = 2 int_0^u e^{-pi w^2} dw = erf(sqrt(pi) u)
//   M(u)  = E(u) - sgn(u) = -sgn(u) Gamma(1/2, pi u^2)/sqrt(pi),  |M| <= 2 e^{-pi u^2}
//   E2(kappa; u) = int_{R^2} sgn(w1) sgn(w2 + kappa w1)
//                    e^{-pi((w1-u1)^2 + (w2-u2)^2)} dw,   even in u
//   M2(kappa; u) = E2(kappa; u) - sgn(u2) M(u1)
//                    - sgn(u1 - kappa u2) M((u2 + kappa u1)/sqrt(1+kappa^2))
//                    - sgn(u1) sgn(u2 + kappa u1)
//
// M2 is primarily evaluated through the semi-infinite representation
//
//   M2(kappa; u) = -int_1^oo [ u1 e^{-pi u1^2 w} M(u2 sqrt(w))
//        + (u2+kappa u1)/sqrt(1+kappa^2) e^{-pi (u2+kappa u1)^2 w/(1+kappa^2)}
//            M(sqrt(w) (u1-kappa u2)/sqrt(1+kappa^2)) ] dw / sqrt(w)
//
// which avoids the cancellation inherent in the E2 combination.  Near the
// degenerate set (u2 = 0 or u1 = kappa u2) or for small ||u|| (slow decay of
// the integrand) the E2-combination route is used instead.
#ifndef FALSETHETA_SPECFUN_HPP
#define FALSETHETA_SPECFUN_HPP

#include <limits>

#include "quadrature.hpp"
#include "types.hpp"

namespace ft {

inline double erf_E(double u) { return std::erf(std::sqrt(pi) * u); }

// Upper incomplete gamma at 1/2: Gamma(1/2, u) = sqrt(pi) erfc(sqrt(u)), u >= 0.
inline double gamma_half(double u) {
    if (u < 0) throw std::invalid_argument("gamma_half: u must be >= 0");
    return std::sqrt(pi) * std::erfc(std::sqrt(u));
}

inline double mordell_M(double u) {
    // -sgn(u) erfc(sqrt(pi)|u|); exactly 0 at u = 0 (sgn(0) = 0 convention).
    if (u == 0.0) return 0.0;
    return -sgn(u) * std::erfc(std::sqrt(pi) * std::abs(u));
}

// M*(u) = E(u) - sgn*(u): one-sided companion, differs from M only at u = 0.
inline double mordell_M_star(double u) { return erf_E(u) - sgn_star(u); }

// E2 by exact reduction of the w2 integral:
//   E2(kappa; u) = int_R sgn(w) E(u2 + kappa w) e^{-pi(w-u1)^2} dw
// folded onto [0, oo).  The Gaussian factor localizes near w = |u1|.
inline double E2(double kappa, double u1, double u2, double tol = 1e-13) {
    auto g = [&](double w) -> cplx {
        return erf_E(u2 + kappa * w) * std::exp(-pi * (w - u1) * (w - u1)) -
               erf_E(u2 - kappa * w) * std::exp(-pi * (w + u1) * (w + u1));
    };
    double hi = std::abs(u1) + 4.6;  // e^{-pi 4.6^2} ~ 6e-29
    return integrate_adaptive(g, 0.0, hi, tol).real();
}

// Product-quadrature evaluation of E2 straight from the 2-D definition,
// splitting the plane along the sign discontinuities w1 = 0 and
// w2 = -kappa w1.  Slow; kept as an independent cross-check oracle.
inline double E2_product_quadrature(double kappa, double u1, double u2,
                                    int n = 80) {
    // Integrate w1 over (-R, 0) and (0, R); for each w1 split the w2 line at
    // -kappa w1.  Gauss-Legendre in both directions on +-R boxes around the
    // Gaussian center.
    double R = 6.0;
    auto inner = [&](double w1) {
        auto f2 = [&](double w2) -> cplx {
            return sgn(w2 + kappa * w1) *
                   std::exp(-pi * (w2 - u2) * (w2 - u2));
        };
        double split = -kappa * w1;
        double lo = std::min(u2 - R, split), hi2 = std::max(u2 + R, split);
        return gl_panel(f2, lo, split, n) + gl_panel(f2, split, hi2, n);
    };
    auto f1 = [&](double w1) -> cplx {
        return sgn(w1) * std::exp(-pi * (w1 - u1) * (w1 - u1)) * inner(w1);
    };
    double lo = std::min(u1 - R, 0.0), hi = std::max(u1 + R, 0.0);
    return (gl_panel(f1, lo, 0.0, n) + gl_panel(f1, 0.0, hi, n)).real();
}

namespace detail {

// M2 jumps across the lines u2 = 0 and u1 = kappa u2, with the convention
// that the value on a line is the midpoint of the one-sided limits.  Callers
// often hit these lines only up to roundoff (e.g. sqrt(3 v) n vs
// sqrt(3) sqrt(v) n), and a last-ulp remainder would select a one-sided
// limit instead of the midpoint, so sign-determining combinations are
// snapped to zero when they are negligible against the argument scale.
inline double snap_zero(double x, double scale) {
    return std::abs(x) < 1e-12 * scale ? 0.0 : x;
}

}  // namespace detail

// E2-combination route for M2 (valid everywhere; cancellation-prone when M2
// is exponentially small but fine in absolute terms).
inline double M2_via_E2(double kappa, double u1, double u2,
                        double tol = 1e-13) {
    double rt = std::sqrt(1.0 + kappa * kappa);
    double sc = 1.0 + std::abs(u1) + std::abs(u2);
    // M itself jumps at 0, so its arguments need the same snapping as the
    // sign factors: a last-ulp remainder in u2 + kappa u1 would make M
    // return a one-sided limit (+-1) instead of M(0) = 0.
    double a = detail::snap_zero(u2 + kappa * u1, sc);
    return E2(kappa, u1, u2, tol) -
           sgn(detail::snap_zero(u2, sc)) *
               mordell_M(detail::snap_zero(u1, sc)) -
           sgn(detail::snap_zero(u1 - kappa * u2, sc)) * mordell_M(a / rt) -
           sgn(detail::snap_zero(u1, sc)) * sgn(a);
}

// Semi-infinite integral route for M2.
inline double M2_via_integral(double kappa, double u1, double u2,
                              double tol = 1e-13) {
    double rt = std::sqrt(1.0 + kappa * kappa);
    double sc = 1.0 + std::abs(u1) + std::abs(u2);
    u2 = detail::snap_zero(u2, sc);
    double a = u2 + kappa * u1;   // second-term amplitude
    double b = detail::snap_zero((u1 - kappa * u2) / rt, sc);
    auto f = [&](double w) -> cplx {
        double sw = std::sqrt(w);
        return (u1 * std::exp(-pi * u1 * u1 * w) * mordell_M(u2 * sw) +
                (a / rt) * std::exp(-pi * a * a * w / (rt * rt)) *
                    mordell_M(sw * b)) /
               sw;
    };
    // Term-wise decay rates: pi(u1^2 + u2^2) and pi(a^2/(1+k^2) + b^2); a
    // term with zero amplitude contributes nothing, so its rate is ignored.
    double rate = std::numeric_limits<double>::infinity();
    if (u1 != 0.0) rate = std::min(rate, pi * (u1 * u1 + u2 * u2));
    if (a != 0.0) rate = std::min(rate, pi * (a * a / (rt * rt) + b * b));
    if (!std::isfinite(rate) || rate <= 0) return 0.0;  // integrand vanishes
    return -integrate_to_inf(f, 1.0, rate, tol).real();
}

// Dispatching M2: the E2-combination is used only for small ||u||, where the
// integral route's decay rate collapses and the cancellation is harmless
// (M2 = O(1) there).  Away from the origin the integral route is used even
// on the sign-boundary lines u2 = 0 and u1 = kappa u2: a vanishing amplitude
// simply drops the corresponding term (M(0) = 0), which reproduces the
// midpoint convention, and the E2-combination there would lose all relative
// accuracy to cancellation in the far field.
inline double M2(double kappa, double u1, double u2, double tol = 1e-13) {
    double n2 = u1 * u1 + u2 * u2;
    return n2 < 0.4 ? M2_via_E2(kappa, u1, u2, tol)
                    : M2_via_integral(kappa, u1, u2, tol);
}

// Closed-form first partials of M2.
struct M2Partials {
    double d1;  // d/du1
    double d2;  // d/du2
};

inline M2Partials M2_partials(double kappa, double u1, double u2) {
    double rt = std::sqrt(1.0 + kappa * kappa);
    double common = 2.0 / rt *
                    std::exp(-pi * (u2 + kappa * u1) * (u2 + kappa * u1) /
                             (rt * rt)) *
                    mordell_M((u1 - kappa * u2) / rt);
    M2Partials p;
    p.d2 = common;
    p.d1 = 2.0 * std::exp(-pi * u1 * u1) * mordell_M(u2) + kappa * common;
    return p;
}

// One-sided two-dimensional companion in lattice coordinates x = (x1, x2),
// carrying the arguments u = (kappa(2x1+x2), x2):
//   M2*(kappa; x) = E2(kappa; u) + sgn*(x1) sgn*(x2)
//       - sgn*(x2) E(u1) - sgn*(x1) E(2 kappa^2 x1/sqrt(1+kappa^2)
//                                      + sqrt(1+kappa^2) x2)
// i.e. the M2 combination with sgn replaced by the one-sided sgn*.  For
// kappa = sqrt3 the last argument is 3x1 + 2x2.  Away from x1 x2 = 0 this
// coincides with M2(kappa; u).
inline double M2_star(double kappa, double x1, double x2,
                      double tol = 1e-13) {
    double rt = std::sqrt(1.0 + kappa * kappa);
    double u1 = kappa * (2.0 * x1 + x2), u2 = x2;
    return E2(kappa, u1, u2, tol) + sgn_star(x1) * sgn_star(x2) -
           sgn_star(x2) * erf_E(u1) -
           sgn_star(x1) * erf_E(2.0 * kappa * kappa * x1 / rt + rt * x2);
}

}  // namespace ft

#endif
