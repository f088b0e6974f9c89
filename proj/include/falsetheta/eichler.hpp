// Iterated period integrals of theta kernels along vertical paths:
//
//   I_f(tau)        = int_{-conj(tau)}^{i inf} f(w) (-i(w+tau))^{k-2} dw
//   r_{f,d/c}(tau)  = int_{d/c}^{i inf}       f(w) (-i(w+tau))^{k-2} dw
//   I_{f1,f2}(tau)  = double integral, inner from w1 to i inf
//   r_{f1,f2,d/c}   = double integral, inner from w1 back to d/c
//
// On the path -conj(tau)+is the denominator is the real number 2v+s; on the
// cusp line d/c+is it is (s+v) - i(d/c+u), always in the right half-plane,
// so principal powers are used throughout.
//
// Weight-1/2 kernels need care twice: their value c0 at i inf makes the
// outer/inner integrals converge only conditionally (the c0 part is
// integrated in closed form), and on cusp lines they blow up like s^{-1/2}
// as s -> 0 (removed by the substitution s = x^2).
//
// The double integrals run over a composite Gauss-Legendre grid in x with
// the inner cumulative advanced incrementally between consecutive nodes, so
// the total cost is linear, not quadratic, in the node count.
#ifndef FALSETHETA_EICHLER_HPP
#define FALSETHETA_EICHLER_HPP

#include "quadrature.hpp"
#include "thetafactor.hpp"

namespace ft {

namespace detail {

// cutoff S with e^{-2 pi rate S} ~ tol
inline double decay_cutoff(double rate, double tol) {
    if (rate <= 0) throw std::invalid_argument("decay_cutoff: rate must be positive");
    return (-std::log(tol * 1e-2) / (2.0 * pi * rate)) + 2.0;
}

// int_0^X hout(s, C(s)) ds with C(s) = int_0^s hin(t) dt, both smooth after
// s = x^2; inner cumulative advanced segment by segment.
template <class FOut, class FIn>
cplx iterated_line_integral(const FOut& hout, const FIn& hin, double X,
                            double tol, int panels = 40) {
    double Xr = std::sqrt(X);
    const GLRule& R = gl_rule(25);
    cplx total = 0.0, cum = 0.0;
    double xprev = 0.0;
    auto hin_x = [&](double t) { return hin(t * t) * (2.0 * t); };
    for (int pnl = 0; pnl < panels; ++pnl) {
        double a = Xr * pnl / panels, b = Xr * (pnl + 1) / panels;
        double half = 0.5 * (b - a), mid = 0.5 * (a + b);
        for (int i = 0; i < 25; ++i) {
            double x = mid + half * R.x[i];
            cum += integrate_adaptive(hin_x, xprev, x, tol * 1e-3);
            xprev = x;
            total += half * R.w[i] * hout(x * x, cum) * (2.0 * x);
        }
    }
    return total;
}

}  // namespace detail

// ---- single integrals ------------------------------------------------------

// I_f(tau); path w = -conj(tau) + is, denominator (2v+s)^{2-k}.
inline cplx eichler_single(const ThetaFactor& f, cplx tau,
                           double tol = 1e-11) {
    double v = tau.imag();
    double k = f.weight();
    cplx w0 = -std::conj(tau);
    cplx c0 = f.const_coeff();
    cplx main = integrate_to_inf(
        [&](double s) {
            return (f.eval(w0 + iunit * s) - c0) *
                   std::pow(2.0 * v + s, k - 2.0);
        },
        0.0, 2.0 * pi * f.decay_rate(), tol);
    if (c0 != 0.0)
        main += c0 * std::pow(2.0 * v, k - 1.0) / (1.0 - k);
    return iunit * main;
}

// r_{f,d/c}(tau); path w = d/c + is, denominator D(s) = (s+v) - i(d/c+u).
inline cplx error_single(const ThetaFactor& f, long long d, long long c,
                         cplx tau, double tol = 1e-11) {
    double v = tau.imag();
    double k = f.weight();
    double rho = double(d) / double(c) + tau.real();
    cplx c0 = f.const_coeff();
    auto D = [&](double s) { return cplx(s + v, -rho); };
    auto g = [&](double s) {
        return (f.eval_line(d, c, s) - c0) * std::pow(D(s), k - 2.0);
    };
    // s = x^2 on [0,1] removes the s^{-1/2} cusp-line singularity
    cplx main = integrate_adaptive(
        [&](double x) { return g(x * x) * (2.0 * x); }, 0.0, 1.0, tol);
    main += integrate_to_inf(g, 1.0, 2.0 * pi * f.decay_rate(), tol);
    if (c0 != 0.0) main += c0 * std::pow(D(0.0), k - 1.0) / (1.0 - k);
    return iunit * main;
}

// ---- double integrals ------------------------------------------------------

// I_{f1,f2}(tau)
inline cplx eichler_double(const ThetaFactor& f1, const ThetaFactor& f2,
                           cplx tau, double tol = 1e-9) {
    double v = tau.imag();
    double k1 = f1.weight(), k2 = f2.weight();
    cplx w0 = -std::conj(tau);
    cplx c01 = f1.const_coeff(), c02 = f2.const_coeff();
    if (c01 != 0.0 && c02 != 0.0)
        throw std::invalid_argument("eichler_double: both kernels non-cuspidal");
    double a1 = f1.decay_rate(), a2 = f2.decay_rate();

    // inner tail T2 = int_0^inf (f2 - c02)(2v+t)^{k2-2} dt
    auto g2 = [&](double t) {
        return (f2.eval(w0 + iunit * t) - c02) *
               std::pow(2.0 * v + t, k2 - 2.0);
    };
    cplx T2 = integrate_to_inf(g2, 0.0, 2.0 * pi * a2, tol * 0.1);

    double rate_out = (c01 == 0.0 ? a1 : 0.0) + (c02 == 0.0 ? a2 : 0.0);
    double X = detail::decay_cutoff(rate_out, tol);
    cplx I = detail::iterated_line_integral(
        [&](double s, cplx C) {
            cplx G = T2 - C;  // int_s^inf (f2-c02)(...) dt
            if (c02 != 0.0)
                G += c02 * std::pow(2.0 * v + s, k2 - 1.0) / (1.0 - k2);
            return f1.eval(w0 + iunit * s) * std::pow(2.0 * v + s, k1 - 2.0) *
                   G;
        },
        g2, X, tol);
    return -I;  // (i ds1)(i ds2)
}

// r_{f1,f2,d/c}(tau)
inline cplx error_double(const ThetaFactor& f1, const ThetaFactor& f2,
                         long long d, long long c, cplx tau,
                         double tol = 1e-9) {
    double v = tau.imag();
    double k1 = f1.weight(), k2 = f2.weight();
    double rho = double(d) / double(c) + tau.real();
    cplx c01 = f1.const_coeff(), c02 = f2.const_coeff();
    if (c01 != 0.0 && c02 != 0.0)
        throw std::invalid_argument("error_double: both kernels non-cuspidal");
    auto D = [&](double s) { return cplx(s + v, -rho); };
    auto g2 = [&](double t) {
        return f2.eval_line(d, c, t) * std::pow(D(t), k2 - 2.0);
    };
    // Unlike the iterated integral toward i inf, the inner cumulative here
    // tends to a nonzero constant, so the outer tail decays only at f1's own
    // rate (the closed-form c01 tail below is handled separately).
    double X = detail::decay_cutoff(f1.decay_rate(), tol);

    cplx Hend = 0.0;  // H(X), captured on the last node via the closure
    cplx r = detail::iterated_line_integral(
        [&](double s, cplx H) {
            Hend = H;
            return f1.eval_line(d, c, s) * std::pow(D(s), k1 - 2.0) * H;
        },
        g2, X, tol);
    if (c01 != 0.0) {
        // f1 ~ c01 beyond X while H is already H(inf) up to tol: add the
        // closed-form tail  c01 H(inf) int_X^inf D^{k1-2} ds.
        r += c01 * Hend * std::pow(D(X), k1 - 1.0) / (1.0 - k1);
    }
    return r;  // (i ds1)(-i ds2)
}

// ---- cocycle residuals -----------------------------------------------------
//
// Substituting w -> M* w in the integrals gives, for M = (a,b;c,d) with the
// kernels transforming under M* with multipliers chi and index maps h -> a h:
//
//   I_{f'}(tau) - chi^{-1} (c tau + d)^{k-2} I_f(M tau) = r_{f',d/c}(tau)
//
// and for the iterated integral the extra boundary path contributes the
// single integral times a single error:
//
//   I_{f1',f2'}(tau) - chi1^{-1} chi2^{-1} (c tau + d)^{k1+k2-4} I_{f1,f2}(M tau)
//     = r_{f1',f2',d/c}(tau) + I_{f1'}(tau) r_{f2',d/c}(tau).
//
// The residuals below are the left side minus the right side; they vanish
// identically and measure the combined quadrature error.

inline cplx single_cocycle_residual(const ThetaFactor& f, const Matrix2& M,
                                    cplx tau, double tol = 1e-10) {
    ThetaMultiplier mu = conj_multiplier(f, M);
    ThetaFactor fp = f.with_h(mu.new_h);
    double k = f.weight();
    cplx j = double(M.c) * tau + double(M.d);
    cplx lhs = eichler_single(fp, tau, tol) -
               std::pow(j, k - 2.0) / mu.factor *
                   eichler_single(f, M.apply(tau), tol);
    return lhs - error_single(fp, M.d, M.c, tau, tol);
}

inline cplx double_cocycle_residual(const ThetaFactor& f1,
                                    const ThetaFactor& f2, const Matrix2& M,
                                    cplx tau, double tol = 1e-9) {
    ThetaMultiplier mu1 = conj_multiplier(f1, M);
    ThetaMultiplier mu2 = conj_multiplier(f2, M);
    ThetaFactor f1p = f1.with_h(mu1.new_h), f2p = f2.with_h(mu2.new_h);
    double k1 = f1.weight(), k2 = f2.weight();
    cplx j = double(M.c) * tau + double(M.d);
    cplx lhs = eichler_double(f1p, f2p, tau, tol) -
               std::pow(j, k1 + k2 - 4.0) / (mu1.factor * mu2.factor) *
                   eichler_double(f1, f2, M.apply(tau), tol);
    cplx rhs = error_double(f1p, f2p, M.d, M.c, tau, tol) +
               eichler_single(f1p, tau, tol * 0.1) *
                   error_single(f2p, M.d, M.c, tau, tol * 0.1);
    return lhs - rhs;
}

// Residual of the shuffle relation I_{f1,f2} + I_{f2,f1} = I_{f1} I_{f2}.
inline cplx shuffle_residual(const ThetaFactor& f1, const ThetaFactor& f2,
                             cplx tau, double tol = 1e-9) {
    return eichler_double(f1, f2, tau, tol) +
           eichler_double(f2, f1, tau, tol) -
           eichler_single(f1, tau, tol * 0.1) *
               eichler_single(f2, tau, tol * 0.1);
}

// Residual of the lowering identity.  With L = -2i v^2 d/d(conj tau), only
// the lower endpoint -conj(tau) of the outer integral depends on conj(tau),
// so L(I_{f1,f2}) = -i 2^{k1-1} v^{k1} f1(-conj tau) I_{f2}.  The derivative
// is taken by central differences in u and v.
inline cplx lowering_residual(const ThetaFactor& f1, const ThetaFactor& f2,
                              cplx tau, double delta = 1e-3,
                              double tol = 1e-9) {
    double v = tau.imag(), k1 = f1.weight();
    cplx du = (eichler_double(f1, f2, tau + delta, tol) -
               eichler_double(f1, f2, tau - delta, tol)) /
              (2.0 * delta);
    cplx dv = (eichler_double(f1, f2, tau + iunit * delta, tol) -
               eichler_double(f1, f2, tau - iunit * delta, tol)) /
              (2.0 * delta);
    cplx dtaubar = 0.5 * (du + iunit * dv);
    cplx L = -2.0 * iunit * v * v * dtaubar;
    cplx rhs = -iunit * std::pow(2.0, k1 - 1.0) * std::pow(v, k1) *
               f1.eval(-std::conj(tau)) * eichler_single(f2, tau, tol * 0.1);
    return L - rhs;
}

// ---- shuffle-type products -------------------------------------------------

// The weighted pair sums representing the two lattice Eichler integrals:
// value(tau) = sum_j coef_j I_{f1_j, f2_j}(tau).
struct EichlerPair {
    ThetaFactor f1, f2;
    double coef;
};

// Pairs for the weight-one sum: two families of six products of weight-3/2
// kernels, with the residue sets and signs induced by the shift list.
inline std::vector<EichlerPair> E1_pairs(long long p) {
    std::vector<EichlerPair> out;
    double pref = -std::sqrt(3.0) / (4.0 * double(p));
    // Each folded shift splits into two residue pairs; the elements below are
    // listed in that order, so they inherit the position weights
    // (-2,-2,1,1,1,1).  (Looking the weight up by residue class instead
    // breaks down for p = 2, where distinct positions coincide mod Z^2.)
    const std::array<int, 6> wt{-2, -2, 1, 1, 1, 1};
    const std::array<std::array<long long, 2>, 6> Aset{
        {{0, 2}, {p, p + 2}, {p - 1, p - 1}, {-1, -1}, {p + 1, p - 1}, {1, -1}}};
    for (int j = 0; j < 6; ++j) {
        auto [A1, A2] = Aset[j];
        out.push_back({ThetaFactor{1, 2 * p, A1, 2 * p, 3},
                       ThetaFactor{1, 2 * p, A2, 2 * p, 1}, pref * wt[j]});
    }
    const std::array<std::array<long long, 2>, 6> Bset{
        {{p + 1, p - 1}, {1, -1}, {p + 2, p}, {2, 0}, {1, 1}, {p + 1, p + 1}}};
    for (int j = 0; j < 6; ++j) {
        auto [B1, B2] = Bset[j];
        out.push_back({ThetaFactor{1, 2 * p, B1, 2 * p, 1},
                       ThetaFactor{1, 2 * p, B2, 2 * p, 3}, pref * wt[j]});
    }
    return out;
}

// Pairs for the weight-two sum: eighteen products mixing weight-3/2 and
// weight-1/2 kernels (the latter may be non-cuspidal).
inline std::vector<EichlerPair> E2_pairs(long long p) {
    std::vector<EichlerPair> out;
    double pref = std::sqrt(3.0) / (8.0 * pi * double(p));
    const std::array<std::array<long long, 2>, 6> Aset{
        {{0, 2}, {p, p + 2}, {p - 1, p - 1}, {-1, -1}, {p + 1, p - 1}, {1, -1}}};
    // First-slot residues as produced by the index split.  Two of them are
    // the negatives of the residues used in E1_pairs (p-2 = -(p+2) and -2
    // mod 2p); there the second slot vanished identically for those entries,
    // here it does not, and Theta_1 is odd in the residue, so the sign of the
    // representative matters.
    const std::array<std::array<long long, 2>, 6> Bset{
        {{p + 1, p - 1}, {1, -1}, {p - 2, p}, {-2, 0}, {1, 1}, {p + 1, p + 1}}};
    for (auto [A1, A2] : Aset)
        out.push_back({ThetaFactor{1, 2 * p, A1, 2 * p, 3},
                       ThetaFactor{0, 2 * p, A2, 2 * p, 1}, 2.0 * pref});
    for (auto [B1, B2] : Bset)
        out.push_back({ThetaFactor{1, 2 * p, B1, 2 * p, 1},
                       ThetaFactor{0, 2 * p, B2, 2 * p, 3}, -pref});
    for (auto [B1, B2] : Bset)
        out.push_back({ThetaFactor{0, 2 * p, B1, 2 * p, 1},
                       ThetaFactor{1, 2 * p, B2, 2 * p, 3}, pref});
    return out;
}

inline cplx eval_pairs(const std::vector<EichlerPair>& pairs, cplx tau,
                       double tol = 1e-9) {
    KahanSum s;
    for (const auto& P : pairs) s.add(P.coef * eichler_double(P.f1, P.f2, tau, tol));
    return s.value();
}

// The weight-one and weight-two iterated-integral sums (arguments as on the
// upper half-plane; the lattice normalization divides tau by p).
inline cplx E1_eichler(long long p, cplx tau, double tol = 1e-9) {
    return eval_pairs(E1_pairs(p), tau, tol);
}
inline cplx E2_eichler(long long p, cplx tau, double tol = 1e-9) {
    return eval_pairs(E2_pairs(p), tau, tol);
}

// Aggregated cocycle residual for a weighted pair sum E = sum_j coef_j
// I_{f1_j,f2_j}: for M in the relevant congruence subgroup the primed pair
// list is a permutation of the original and the per-pair multipliers
// collapse to the single character chi, so
//
//   E(tau) - chi^{-1} (c tau + d)^{k1+k2-4} E(M tau)
//     = sum_j coef_j [ r_{f1_j',f2_j',d/c}(tau)
//                      + I_{f1_j'}(tau) r_{f2_j',d/c}(tau) ].
//
// Returns left minus right.
inline cplx pair_sum_cocycle_residual(const std::vector<EichlerPair>& pairs,
                                      cplx chi, const Matrix2& M, cplx tau,
                                      double tol = 1e-8) {
    cplx j = double(M.c) * tau + double(M.d);
    double kw = pairs[0].f1.weight() + pairs[0].f2.weight() - 4.0;
    cplx lhs = eval_pairs(pairs, tau, tol) -
               std::pow(j, kw) / chi * eval_pairs(pairs, M.apply(tau), tol);
    KahanSum rhs;
    for (const auto& P : pairs) {
        ThetaFactor f1p = P.f1.with_h(conj_multiplier(P.f1, M).new_h);
        ThetaFactor f2p = P.f2.with_h(conj_multiplier(P.f2, M).new_h);
        rhs.add(P.coef *
                (error_double(f1p, f2p, M.d, M.c, tau, tol) +
                 eichler_single(f1p, tau, tol * 0.1) *
                     error_single(f2p, M.d, M.c, tau, tol * 0.1)));
    }
    return lhs - rhs.value();
}

// The two concrete instances: the weight-one sum transforms with the odd
// character mod 3 in d and weight -1, the weight-two sum with the even
// character and weight -2.
inline cplx E1_transformation_residual(long long p, const Matrix2& M,
                                       cplx tau, double tol = 1e-8) {
    return pair_sum_cocycle_residual(E1_pairs(p),
                                     double(kronecker(-3, M.d)), M, tau, tol);
}
inline cplx E2_transformation_residual(long long p, const Matrix2& M,
                                       cplx tau, double tol = 1e-8) {
    return pair_sum_cocycle_residual(E2_pairs(p),
                                     double(kronecker(3, M.d)), M, tau, tol);
}

}  // namespace ft

#endif
