// One-variable theta kernels  f(w) = Theta_nu(A, h, N; scale * w)  (see
// qseries.hpp for Theta_nu) as integrands of the iterated integrals, together
// with the arithmetic needed for their modular transformations:
//
//   * evaluation on upper half-plane points (direct series),
//   * evaluation on vertical lines  d/c + i s  above a rational point, where
//     the direct series degenerates: the root-of-unity phase is periodic in
//     the summation index with an exactly computed period T, and the
//     remaining Gaussian sums over progressions are Poisson-transformed, so
//     the dual series converges the faster the smaller s is,
//   * Kronecker symbols, the eps_d factor, and the theta multiplier system.
#ifndef FALSETHETA_THETAFACTOR_HPP
#define FALSETHETA_THETAFACTOR_HPP

#include "qseries.hpp"

namespace ft {

// ---- Kronecker symbol and theta multiplier --------------------------------

// Kronecker symbol (a/n), full extension (n any integer).
inline int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    int r = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        long long am8 = ((a % 8) + 8) % 8;
        if (am8 == 3 || am8 == 5) r = -r;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) r = -r;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) r = -r;
        a %= n;
    }
    return n == 1 ? sign * r : 0;
}

// eps_d = 1 for d = 1 (mod 4), i for d = 3 (mod 4); d odd.
inline cplx eps_d(long long d) {
    long long r = ((d % 4) + 4) % 4;
    if (r == 1) return {1.0, 0.0};
    if (r == 3) return {0.0, 1.0};
    throw std::invalid_argument("eps_d: d must be odd");
}

struct Matrix2 {
    long long a, b, c, d;
    cplx apply(cplx tau) const {
        return (double(a) * tau + double(b)) / (double(c) * tau + double(d));
    }
    Matrix2 star() const { return {a, -b, -c, d}; }  // conjugation by diag(-1,1)
};

// Membership in the congruence group under which the paired Eichler
// integrals transform: level 12p, with the upper-right entry divisible by 4p
// and lower-right congruent to +-1 mod 2p.
inline bool in_gamma_p(const Matrix2& M, long long p) {
    if (M.a * M.d - M.b * M.c != 1) return false;
    if (M.c % (12 * p) != 0) return false;
    if (M.b % (4 * p) != 0) return false;
    long long r = ((M.d % (2 * p)) + 2 * p) % (2 * p);
    return r == 1 || r == 2 * p - 1;
}

// Multiplier and index map of Theta_nu(A,h,N; .) under M in Gamma_0(2N) with
// b even:  Theta_nu(A,h,N; M tau) = factor * (c tau + d)^{1/2+nu}
//          * Theta_nu(A, a h, N; tau).
struct ThetaMultiplier {
    cplx factor;
    long long new_h;
};

inline ThetaMultiplier shimura_multiplier(long long A, long long h,
                                          long long N, const Matrix2& M,
                                          int nu) {
    if (M.c % (2 * N) != 0 || M.b % 2 != 0)
        throw std::invalid_argument("shimura_multiplier: M not in Gamma_0(2N) with even b");
    // e(a b A h^2 / (2N^2)): reduce the exponent exactly
    long long num = M.a * M.b * A * h % (2 * N * N) * h % (2 * N * N);
    num = ((num % (2 * N * N)) + 2 * N * N) % (2 * N * N);
    cplx e = std::exp(2.0 * pi * iunit * (double(num) / double(2 * N * N)));
    cplx f = e * double(kronecker(2 * A * M.c, M.d)) / eps_d(M.d);
    return {f, M.a * h};
}

// ---- theta kernels on lines -----------------------------------------------

struct ThetaFactor;
inline ThetaMultiplier conj_multiplier(const ThetaFactor& f, const Matrix2& M);

// f(w) = Theta_nu(A, h, N; scale * w); weight 1/2 + nu.
struct ThetaFactor {
    int nu = 0;
    long long A = 1, h = 0, N = 1, scale = 1;

    double weight() const { return 0.5 + nu; }

    // coefficient of m^2 in the exponent: q^{c2 m^2} with q = e^{2 pi i w}
    // and c2 = scale * A / (2 N^2)
    double c2() const { return double(scale * A) / double(2 * N * N); }

    // constant term at i infinity
    cplx const_coeff() const {
        return (nu == 0 && ((h % N) + N) % N == 0) ? cplx(1.0) : cplx(0.0);
    }

    // exponential decay rate of f - const_coeff on vertical lines:
    // |f(x+iy) - c0| <= C e^{-2 pi decay_rate y}
    double decay_rate() const {
        long long r = ((h % N) + N) % N;
        long long m0 = std::min(r == 0 ? N : r, N - r == 0 ? N : N - r);
        if (r == 0 && nu == 0) m0 = N;  // first nonconstant term
        return c2() * double(m0) * double(m0);
    }

    cplx eval(cplx w, double tol = 1e-13) const {
        return shimura_theta(nu, A, h, N, double(scale) * w, tol);
    }

    // f(d/c + i s): phase-periodic decomposition + Poisson-dual Gaussian
    // sums; accurate uniformly in s > 0.
    cplx eval_line(long long d, long long c, double s,
                   double tol = 1e-13) const;

    ThetaFactor with_h(long long h2) const {
        ThetaFactor g = *this;
        g.h = h2;
        return g;
    }
};

// Multiplier of f(w) = Theta_nu(A,h,N;scale w) under the conjugated matrix
// M* = (a,-b;-c,d):  f(M* w) = factor * (-c w + d)^{1/2+nu} f[h -> new_h](w).
// Needs scale | c so the scaling commutes with the matrix.
inline ThetaMultiplier conj_multiplier(const ThetaFactor& f, const Matrix2& M) {
    if (M.c % f.scale != 0)
        throw std::invalid_argument("conj_multiplier: scale must divide c");
    Matrix2 Ms{M.a, -M.b * f.scale, -(M.c / f.scale), M.d};
    return shimura_multiplier(f.A, f.h, f.N, Ms, f.nu);
}

namespace detail {

// smallest period T of the phase  n -> e(d' scale A (h + N n)^2 / (2 N^2 c'))
inline long long phase_period(long long d, long long c, long long A,
                              long long h, long long N, long long scale) {
    auto ok = [&](long long T) {
        // increments must be integers for all n:
        //   d*scale*A*T*(h + N n)/(N c) in Z for all n  and  d*scale*A*T^2/(2c) in Z
        __int128 base = (__int128)d * scale * A * T;
        if ((base * h) % ((__int128)N * c) != 0) return false;
        if ((base * N) % ((__int128)N * c) != 0) return false;
        if ((base * T) % ((__int128)2 * c) != 0) return false;
        return true;
    };
    long long Tmax = 2 * N * std::llabs(c);
    for (long long T = 1; T <= Tmax; ++T)
        if (Tmax % T == 0 && ok(T)) return T;
    throw std::logic_error("phase_period: no period found");
}

}  // namespace detail

inline cplx ThetaFactor::eval_line(long long d, long long c, double s,
                                   double tol) const {
    if (c == 0) return eval(cplx(double(d), s), tol);
    if (c < 0) { c = -c; d = -d; }
    double beta = 2.0 * pi * s * c2();  // e^{-beta m^2}
    if (beta >= 1.0) {
        // direct series converges quickly
        return eval(cplx(double(d) / double(c), s), tol);
    }
    long long T = detail::phase_period(d, c, A, h, N, scale);
    // f = sum_{r mod T} e(phase(r)) sum_{n = r mod T} (h+Nn)^nu e^{-beta (h+Nn)^2}
    // and the inner sum is evaluated by Poisson summation.
    long long mod = 2 * N * N * c;  // exact denominator of the phase exponent
    KahanSum acc;
    double dual_rate = pi * pi / (beta * double(N) * double(N) * double(T) * double(T));
    long long K = (long long)std::ceil(std::sqrt(std::max(0.0, -std::log(tol * 0.01)) / dual_rate)) + 2;
    double spb = std::sqrt(pi / beta);
    for (long long r = 0; r < T; ++r) {
        long long m = h + N * r;
        __int128 e = (__int128)d * scale * A % mod * m % mod * m % mod;
        long long er = (long long)(e % mod);
        er = ((er % mod) + mod) % mod;
        cplx phase = std::exp(2.0 * pi * iunit * (double(er) / double(mod)));
        // Poisson: sum_j F(r + T j) = (1/T) sum_k Fhat(k/T) e^{2 pi i k r / T}
        KahanSum inner;
        for (long long k = -K; k <= K; ++k) {
            double xi = double(k) / double(T);
            double b = 2.0 * pi * xi / double(N);
            cplx fh;
            if (nu == 0)
                fh = spb * std::exp(-b * b / (4.0 * beta));
            else
                fh = -iunit * (b / (2.0 * beta)) * spb *
                     std::exp(-b * b / (4.0 * beta));
            fh *= std::exp(2.0 * pi * iunit * (xi * double(h) / double(N))) /
                  double(N);
            inner.add(fh * std::exp(2.0 * pi * iunit * (xi * double(r))));
        }
        acc.add(phase * inner.value() / double(T));
    }
    return acc.value();
}

}  // namespace ft

#endif
