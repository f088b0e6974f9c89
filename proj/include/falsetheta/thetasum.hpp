// Lattice theta sums built from the two-dimensional error functions:
//
//   * the weight-one and weight-two sums as M2-weighted series over the
//     shifted lattice (the counterpart of the iterated-integral route),
//   * the per-lattice-point identity expressing an M2 value as a pair of
//     iterated integrals with single-exponential kernels,
//   * four-dimensional indefinite theta series with kernels built from M2,
//     sign factors, and their smooth E2 regularizations, together with a
//     finite-difference check of the defining differential equation.
#ifndef FALSETHETA_THETASUM_HPP
#define FALSETHETA_THETASUM_HPP

#include <array>

#include "eichler.hpp"
#include "specfun.hpp"

namespace ft {

namespace detail {

// Sum f over the square shells of a shifted 2-d lattice a + Z^2; stops after
// two consecutive shells whose largest term is below tol.
template <class F>
cplx shell_sum_2d(double a1, double a2, double tol, const F& f,
                  int max_R = 600) {
    KahanSum acc;
    int small_streak = 0;
    for (int R = 0; R <= max_R; ++R) {
        double shell_max = 0.0;
        auto visit = [&](long long m1, long long m2) {
            cplx t = f(a1 + double(m1), a2 + double(m2));
            shell_max = std::max(shell_max, std::abs(t));
            acc.add(t);
        };
        if (R == 0) {
            visit(0, 0);
        } else {
            for (long long m = -R; m <= R; ++m) {
                visit(m, R);
                visit(m, -R);
                if (std::llabs(m) < R) {
                    visit(R, m);
                    visit(-R, m);
                }
            }
        }
        if (shell_max < tol * 0.01) {
            if (++small_streak >= 2) break;
        } else {
            small_streak = 0;
        }
        if (R == max_R) throw std::runtime_error("shell_sum_2d: no convergence");
    }
    return acc.value();
}

}  // namespace detail

// ---- single-exponential iterated integrals ---------------------------------

// int_{-conj tau}^{i inf} e^{2 pi i a w1} (-i(w1+tau))^{-1/2}
//   int_{w1}^{i inf} e^{2 pi i b w2} (-i(w2+tau))^{-1/2} dw2 dw1,  a, b > 0.
inline cplx mono_double(double a, double b, cplx tau, double tol = 1e-10) {
    if (a <= 0 || b <= 0)
        throw std::invalid_argument("mono_double: exponents must be positive");
    double v = tau.imag();
    cplx w0 = -std::conj(tau);
    auto g2 = [&](double t) {
        return std::exp(2.0 * pi * iunit * b * (w0 + iunit * t)) /
               std::sqrt(2.0 * v + t);
    };
    cplx T2 = integrate_to_inf(g2, 0.0, 2.0 * pi * b, tol * 0.1);
    double X = detail::decay_cutoff(a + b, tol);
    cplx I = detail::iterated_line_integral(
        [&](double s, cplx C) {
            return std::exp(2.0 * pi * iunit * a * (w0 + iunit * s)) /
                   std::sqrt(2.0 * v + s) * (T2 - C);
        },
        g2, X, tol);
    return -I;
}

// Residual of the per-lattice-point identity
//   M2(sqrt3; sqrt(3v)(2n1+n2), sqrt(v) n2)
//     = -(sqrt3/2)(2n1+n2) n2 q^{Q(n)} J(3(2n1+n2)^2/4, n2^2/4)
//       -(sqrt3/2)(3n1+2n2) n1 q^{Q(n)} J((3n1+2n2)^2/4, 3 n1^2/4)
// with J = mono_double.  Terms with vanishing coefficient are dropped.
inline cplx M2_double_integral_residual(double n1, double n2, cplx tau,
                                        double tol = 1e-9) {
    double v = tau.imag();
    double s3 = std::sqrt(3.0);
    cplx lhs = M2(s3, std::sqrt(3.0 * v) * (2 * n1 + n2), std::sqrt(v) * n2);
    cplx qq = qpow(tau, quad_Q(n1, n2));
    cplx rhs = 0.0;
    if ((2 * n1 + n2) * n2 != 0.0)
        rhs += -0.5 * s3 * (2 * n1 + n2) * n2 * qq *
               mono_double(0.75 * (2 * n1 + n2) * (2 * n1 + n2),
                           0.25 * n2 * n2, tau, tol);
    if ((3 * n1 + 2 * n2) * n1 != 0.0)
        rhs += -0.5 * s3 * (3 * n1 + 2 * n2) * n1 * qq *
               mono_double(0.25 * (3 * n1 + 2 * n2) * (3 * n1 + 2 * n2),
                           0.75 * n1 * n1, tau, tol);
    return lhs - rhs;
}

// ---- the lattice sums ------------------------------------------------------

// sum over the three folded shifts of
//   sum_{n in alpha+Z^2} M2(sqrt3; sqrt(3v)(2n1+n2), sqrt(v) n2) q^{-Q(n)}
// with the position weights, times 1/2.
inline cplx E1_theta_sum(long long p, cplx tau, double tol = 1e-11) {
    ShiftTable st(p);
    double v = tau.imag();
    double s3 = std::sqrt(3.0);
    KahanSum acc;
    for (int idx : st.star_idx) {
        const ShiftEntry& e = st.S[idx];
        cplx part = detail::shell_sum_2d(
            e.a1.value(), e.a2.value(), tol, [&](double x1, double x2) {
                // termwise bound |M2 q^{-Q}| <= 3 e^{-2 pi Q v}
                double Q = quad_Q(x1, x2);
                if (3.0 * std::exp(-2.0 * pi * Q * v) < tol * 1e-3)
                    return cplx(0.0);
                // q^{-Q} amplifies absolute errors in M2 by e^{2 pi Q v},
                // so M2 must be computed to a tolerance relative to its own
                // termwise bound, not to a fixed absolute one.
                double tm = 1e-13 * 3.0 * std::exp(-4.0 * pi * Q * v);
                return M2(s3, std::sqrt(3.0 * v) * (2 * x1 + x2),
                          std::sqrt(v) * x2, tm) *
                       qpow(tau, -Q);
            });
        acc.add(0.5 * double(e.eps) * part);
    }
    return acc.value();
}

// weight-two analogue: the shifts enter without weights, and each term picks
// up the lattice coordinate n2 plus a one-dimensional correction.
inline cplx E2_theta_sum(long long p, cplx tau, double tol = 1e-11) {
    ShiftTable st(p);
    double v = tau.imag();
    double s3 = std::sqrt(3.0);
    KahanSum acc;
    for (int idx : st.star_idx) {
        const ShiftEntry& e = st.S[idx];
        cplx part = detail::shell_sum_2d(
            e.a1.value(), e.a2.value(), tol, [&](double x1, double x2) {
                double Q = quad_Q(x1, x2);
                if ((3.0 * std::abs(x2) + 1.0) *
                        std::exp(-2.0 * pi * Q * v) <
                    tol * 1e-3)
                    return cplx(0.0);
                double tm = 1e-13 * 3.0 * std::exp(-4.0 * pi * Q * v);
                double m2 = M2(s3, std::sqrt(3.0 * v) * (2 * x1 + x2),
                               std::sqrt(v) * x2, tm);
                double corr = std::exp(-pi * (3 * x1 + 2 * x2) *
                                       (3 * x1 + 2 * x2) * v) *
                              mordell_M(std::sqrt(3.0 * v) * x1) /
                              (2.0 * pi * std::sqrt(v));
                return (x2 * m2 + corr) * qpow(tau, -Q);
            });
        acc.add(0.5 * part);
    }
    return acc.value();
}

// ---- four-dimensional indefinite theta functions ---------------------------

// Q1 extends Q by the off-diagonal pairing of the two halves.
inline double quad_Q1(const std::array<double, 4>& n) {
    return quad_Q(n[0], n[1]) + quad_B0(n[0], n[1], n[2], n[3]);
}

// theta with kernel 1 over A0 (positive definite part)
inline cplx theta_A0_unit(double a1, double a2, cplx tau,
                          double tol = 1e-12) {
    return detail::shell_sum_2d(a1, a2, tol, [&](double x1, double x2) {
        return qpow(tau, quad_Q(x1, x2));
    });
}

// theta with kernel M2 over -A0; equals twice the weight-one pair sum
// restricted to one shift class.
inline cplx theta_A0_M2(double a1, double a2, cplx tau, double tol = 1e-11) {
    double v = tau.imag();
    double s3 = std::sqrt(3.0);
    return detail::shell_sum_2d(a1, a2, tol, [&](double x1, double x2) {
        double Q = quad_Q(x1, x2);
        if (3.0 * std::exp(-2.0 * pi * Q * v) < tol * 1e-3)
            return cplx(0.0);
        double tm = 1e-13 * 3.0 * std::exp(-4.0 * pi * Q * v);
        return M2(s3, std::sqrt(3.0 * v) * (2 * x1 + x2), std::sqrt(v) * x2,
                  tm) *
               qpow(tau, -Q);
    });
}

// four-dimensional theta with the M2 kernel acting on the last two
// coordinates; summed over nested max-norm shells.
inline cplx theta_A1_M2(const std::array<double, 4>& a, cplx tau,
                        double tol = 1e-10, int max_R = 40) {
    double v = tau.imag();
    double s3 = std::sqrt(3.0);
    KahanSum acc;
    int small_streak = 0;
    for (int R = 0; R <= max_R; ++R) {
        double shell_max = 0.0;
        for (long long m1 = -R; m1 <= R; ++m1)
            for (long long m2 = -R; m2 <= R; ++m2)
                for (long long m3 = -R; m3 <= R; ++m3)
                    for (long long m4 = -R; m4 <= R; ++m4) {
                        if (std::max(std::max(std::llabs(m1), std::llabs(m2)),
                                     std::max(std::llabs(m3),
                                              std::llabs(m4))) != R)
                            continue;
                        std::array<double, 4> n{
                            a[0] + double(m1), a[1] + double(m2),
                            a[2] + double(m3), a[3] + double(m4)};
                        // |M2 q^{Q1}| <= 3 e^{-2 pi (Q(n12+n34)+Q(n34)) v}
                        double bexp = quad_Q(n[0] + n[2], n[1] + n[3]) +
                                      quad_Q(n[2], n[3]);
                        double tm = 1e-13 * 3.0 *
                                    std::exp(-4.0 * pi * quad_Q(n[2], n[3]) * v);
                        cplx t = 3.0 * std::exp(-2.0 * pi * bexp * v) <
                                         tol * 1e-3
                                     ? cplx(0.0)
                                     : M2(s3,
                                          std::sqrt(v) * s3 *
                                              (2 * n[2] + n[3]),
                                          std::sqrt(v) * n[3], tm) *
                                           qpow(tau, quad_Q1(n));
                        shell_max = std::max(shell_max, std::abs(t));
                        acc.add(t);
                    }
        if (shell_max < tol * 0.01) {
            if (++small_streak >= 2) break;
        } else {
            small_streak = 0;
        }
        if (R == max_R)
            throw std::runtime_error("theta_A1_M2: no convergence");
    }
    return acc.value();
}

// Residual of the splitting of the four-dimensional M2 theta into the
// two-dimensional M2 theta times a positive definite theta (a pure lattice
// shift identity on the quadratic form).
inline cplx theta_factorization_residual(const std::array<double, 4>& a,
                                         cplx tau, double tol = 1e-10) {
    // substituting n12 = y - n34 gives Q1(y - n34, n34) = Q(y) - Q(n34), so
    // the positive definite factor runs over y in (a1+a3, a2+a4) + Z^2
    return theta_A1_M2(a, tau, tol) -
           theta_A0_M2(a[2], a[3], tau, tol) *
               theta_A0_unit(a[0] + a[2], a[1] + a[3], tau, tol);
}

// Offsets a = (1/p) A1^{-1} k for integer k; A1^{-1} = [[0,C],[C,-C]] with
// C = (1/3)[[2,-3],[-3,6]].
inline std::array<Frac, 4> theta_offset(long long p,
                                        const std::array<long long, 4>& k) {
    auto C = [](long long x, long long y) {
        return std::array<Frac, 2>{Frac(2 * x - 3 * y, 3), Frac(-x + 2 * y)};
    };
    auto c34 = C(k[2], k[3]);
    auto c12 = C(k[0], k[1]);
    Frac ip(1, p);
    return {c34[0] * ip, c34[1] * ip, (c12[0] - c34[0]) * ip,
            (c12[1] - c34[1]) * ip};
}

// ---- theta kernels on R^4 --------------------------------------------------

// The full weight-one kernel: one M2, a product of sign sums, and two
// one-dimensional boundary terms.
inline double theta_kernel_P(const std::array<double, 4>& n) {
    double s3 = std::sqrt(3.0);
    double l1 = 2 * n[2] + n[3], l2 = 3 * n[2] + 2 * n[3];
    return M2(s3, s3 * l1, n[3]) +
           (sgn(l1) + sgn(n[0])) * (sgn(l2) + sgn(n[1])) +
           (sgn(n[3]) + sgn(n[1])) * mordell_M(s3 * l1) +
           (sgn(n[2]) + sgn(n[0])) * mordell_M(l2);
}

// Smooth regularization of theta_kernel_P: four E2 terms whose eps -> 0
// limits reproduce the sign factors and boundary terms.
inline double theta_kernel_P_eps(double eps, const std::array<double, 4>& n) {
    double s3 = std::sqrt(3.0);
    double l1 = 2 * n[2] + n[3], l2 = 3 * n[2] + 2 * n[3];
    double r = 1.0 / (eps * (2.0 * s3 - 3.0));
    return E2(eps / 3.0, s3 * l1,
              -eps * (n[0] + n[2] + n[3] / s3) + 3.0 * n[1] * r) +
           E2(eps / 2.0, l2, 3.0 * n[0] * r - eps * (n[1] + s3 * n[2] + n[3])) +
           E2(s3, s3 * l1, n[3]) +
           E2(-s3, n[1] / (2.0 * eps) - 0.5 * eps * (n[1] + 2.0 * n[3]),
              s3 / (2.0 * eps) * (2.0 * n[0] + n[1]) -
                  0.5 * s3 * eps * (2.0 * n[0] + n[1] + 4.0 * n[2] + 2.0 * n[3]));
}

// Finite-difference residual of the second-order differential equation
//   (sum_i w_i d_i - (1/4 pi) sum_{ij} (A1^{-1})_{ij} d_i d_j) P = 0
// for the smooth kernel at eps > 0; refining h must shrink the residual.
inline double theta_pde_residual(double eps, const std::array<double, 4>& x,
                                 double h) {
    static const double A1inv[4][4] = {{0, 0, 2.0 / 3.0, -1},
                                       {0, 0, -1, 2},
                                       {2.0 / 3.0, -1, -2.0 / 3.0, 1},
                                       {-1, 2, 1, -2}};
    auto f = [&](const std::array<double, 4>& y) {
        return theta_kernel_P_eps(eps, y);
    };
    double f0 = f(x);
    double euler = 0.0, lap = 0.0;
    for (int i = 0; i < 4; ++i) {
        auto xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        double fp = f(xp), fm = f(xm);
        euler += x[i] * (fp - fm) / (2.0 * h);
        lap += A1inv[i][i] * (fp - 2.0 * f0 + fm) / (h * h);
        for (int j = i + 1; j < 4; ++j) {
            auto pp = x, pm = x, mp = x, mm = x;
            pp[i] += h; pp[j] += h;
            pm[i] += h; pm[j] -= h;
            mp[i] -= h; mp[j] += h;
            mm[i] -= h; mm[j] -= h;
            lap += 2.0 * A1inv[i][j] * (f(pp) - f(pm) - f(mp) + f(mm)) /
                   (4.0 * h * h);
        }
    }
    return euler - lap / (4.0 * pi);
}

// ---- termwise decay bound --------------------------------------------------

// Counts violations of |M2(sqrt3; sqrt(3v)(2n1+n2), sqrt(v)n2)|
//   <= c1 e^{-4 pi Q(n) v} over all shifted lattice points in a box.
inline int bound_violations(long long p, const std::vector<double>& vgrid,
                            int range, double c1) {
    ShiftTable st(p);
    double s3 = std::sqrt(3.0);
    int bad = 0;
    for (int idx : st.star_idx) {
        const ShiftEntry& e = st.S[idx];
        for (double v : vgrid)
            for (int m1 = -range; m1 <= range; ++m1)
                for (int m2 = -range; m2 <= range; ++m2) {
                    double x1 = e.a1.value() + m1, x2 = e.a2.value() + m2;
                    double lhs = std::abs(
                        M2(s3, std::sqrt(3.0 * v) * (2 * x1 + x2),
                           std::sqrt(v) * x2));
                    double rhs = c1 * std::exp(-4.0 * pi * quad_Q(x1, x2) * v);
                    if (lhs > rhs) ++bad;
                }
    }
    return bad;
}

}  // namespace ft

#endif
