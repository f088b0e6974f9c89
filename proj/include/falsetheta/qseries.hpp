// Direct q-series evaluation in the upper half-plane:
//
//   eval_F      -- the rank-two false theta sum over m1 = m2 (mod 3)
//   eval_f123   -- the Weyl-chamber pieces f1, f2, f3 with F/2 = f1+f2+f3
//   eval_F1/F2  -- the shifted-lattice decomposition components, with
//                  F(q) = (2/p) F1(q^p) + 2 F2(q^p)
//   rank_one    -- F_{j,p} and f_{j,p} (1-D false/cuspidal partners)
//   shimura_theta -- Theta_nu(A,h,N;tau) = sum_{m = h (N)} m^nu q^{A m^2/(2N^2)}
//   kontsevich_K  -- sum_m (q;q)_m at a root of unity (finite there)
//
// All powers q^r are computed as exp(2 pi i tau r) with r carried as an exact
// rational for as long as possible; summation order is deterministic and
// accumulation is compensated (Kahan).
#ifndef FALSETHETA_QSERIES_HPP
#define FALSETHETA_QSERIES_HPP

#include <array>

#include "shifts.hpp"
#include "types.hpp"

namespace ft {

// Compensated complex accumulator.
struct KahanSum {
    cplx s{0.0, 0.0}, c{0.0, 0.0};
    void add(cplx x) {
        cplx y = x - c;
        cplx t = s + y;
        c = (t - s) - y;
        s = t;
    }
    cplx value() const { return s; }
};

// q^r = exp(2 pi i tau r) for real r.
inline cplx qpow(cplx tau, double r) {
    return std::exp(2.0 * pi * iunit * tau * r);
}

// Truncation bound: pick M with e^{-2 pi v (p/3 M^2 - 2M)} * 8(M+2) < tol.
inline long long f_trunc_bound(long long p, double v, double tol) {
    for (long long M = 4;; M += 2) {
        double expo = 2.0 * pi * v * (double(p) / 3.0 * M * M - 2.0 * M);
        if (expo > 0 && 8.0 * (M + 2) * std::exp(-expo) < tol * 0.1) return M + 2;
        if (M > 100000) throw std::runtime_error("f_trunc_bound: no convergence");
    }
}

// F(q), q = e^{2 pi i tau}:
//   sum over m1,m2 >= 1, m1 = m2 (mod 3) of min(m1,m2)
//     q^{p/3 (m1^2+m2^2+m1 m2) - m1 - m2 + 1/p} (1-q^{m1})(1-q^{m2})(1-q^{m1+m2}).
inline cplx eval_F(long long p, cplx tau, double tol = 1e-13) {
    double v = tau.imag();
    if (v <= 0) throw std::invalid_argument("eval_F: Im tau > 0 required");
    long long M = f_trunc_bound(p, v, tol);
    KahanSum acc;
    for (long long m1 = 1; m1 <= M; ++m1) {
        for (long long m2 = 1; m2 <= M; ++m2) {
            if ((m1 - m2) % 3 != 0) continue;
            // exponent: integer part p/3(...) - m1 - m2, plus 1/p
            long long e3 = m1 * m1 + m2 * m2 + m1 * m2;  // divisible by 3
            double r = double(p) * double(e3 / 3) - m1 - m2 + 1.0 / double(p);
            cplx t = double(std::min(m1, m2)) * qpow(tau, r) *
                     (1.0 - qpow(tau, double(m1))) * (1.0 - qpow(tau, double(m2))) *
                     (1.0 - qpow(tau, double(m1 + m2)));
            acc.add(t);
        }
    }
    return acc.value();
}

// Weyl-chamber pieces; the n1 = 0 row is weighted 1/2.
inline std::array<cplx, 3> eval_f123(long long p, cplx tau, double tol = 1e-13) {
    double v = tau.imag();
    if (v <= 0) throw std::invalid_argument("eval_f123: Im tau > 0 required");
    // Terms are bounded by n2 q^{p Q(n) - 3n1 - 2n2}; reuse the F bound scale.
    long long M = f_trunc_bound(p, v, tol);
    std::array<KahanSum, 3> acc;
    cplx pref = qpow(tau, 1.0 / double(p));
    for (long long n1 = 0; n1 <= M; ++n1) {
        double w = (n1 == 0) ? 0.5 : 1.0;
        for (long long n2 = 0; n2 <= 2 * M; ++n2) {
            if (n2 == 0) continue;  // weight n2
            double base = double(p) * quad_Q(double(n1), double(n2));
            cplx qb = qpow(tau, base) * (w * double(n2)) * pref;
            double a = 3.0 * n1 + 2.0 * n2;
            acc[0].add(qb * (qpow(tau, -a) - qpow(tau, a)));
            acc[1].add(qb * (qpow(tau, double(n2)) - qpow(tau, -double(n2))));
            double b = 3.0 * n1 + 1.0 * n2;
            acc[2].add(qb * (qpow(tau, b) - qpow(tau, -b)));
        }
    }
    return {acc[0].value(), acc[1].value(), acc[2].value()};
}

// F_{j,p}(tau) = sum_m sgn(m + j/2p) q^{(m+j/2p)^2}  (false partner)
// f_{j,p}(tau) = sum_m (m + j/2p) q^{(m+j/2p)^2}     (weight-3/2 cusp form)
inline cplx rank_one_F(long long j, long long p, cplx tau, double tol = 1e-14) {
    double v = tau.imag();
    double mu0 = double(j) / double(2 * p);
    KahanSum acc;
    for (long long m = 0;; ++m) {
        double mu = m + mu0, nu = -(m + 1) + mu0;
        cplx t = sgn(mu) * qpow(tau, mu * mu) + sgn(nu) * qpow(tau, nu * nu);
        acc.add(t);
        if (m > 2 && std::exp(-2.0 * pi * v * mu * mu) < tol * 0.1) break;
        if (m > 1000000) throw std::runtime_error("rank_one_F: no convergence");
    }
    return acc.value();
}

inline cplx rank_one_f(long long j, long long p, cplx tau, double tol = 1e-14) {
    double v = tau.imag();
    double mu0 = double(j) / double(2 * p);
    KahanSum acc;
    for (long long m = 0;; ++m) {
        double mu = m + mu0, nu = -(m + 1) + mu0;
        acc.add(mu * qpow(tau, mu * mu) + nu * qpow(tau, nu * nu));
        if (m > 2 && (std::abs(mu) + 1) * std::exp(-2.0 * pi * v * mu * mu) < tol * 0.1) break;
        if (m > 1000000) throw std::runtime_error("rank_one_f: no convergence");
    }
    return acc.value();
}

// Generic shifted positive-definite lattice sum
//   sum_{alpha in S} w(alpha) sum_{n in alpha + N_0^2} (weight) q^{Q(n)}
// weight = 1 (use_eps) or n2 (use_eta).  Square shells with stop rule: two
// consecutive shells below tol/10.
inline cplx lattice_sum_F12(const ShiftTable& st, cplx tau, bool weighted_n2,
                            double tol = 1e-13) {
    double v = tau.imag();
    if (v <= 0) throw std::invalid_argument("lattice_sum_F12: Im tau > 0 required");
    KahanSum acc;
    int small_streak = 0;
    for (long long s = 0; s < 100000; ++s) {
        double shell_mag = 0.0;
        for (const auto& e : st.S) {
            int w = weighted_n2 ? e.eta : e.eps;
            auto term = [&](long long n1, long long n2) {
                double x1 = n1 + e.a1.value(), x2 = n2 + e.a2.value();
                double Qv = quad_Q(x1, x2);
                cplx t = double(w) * qpow(tau, Qv);
                if (weighted_n2) t *= x2;
                acc.add(t);
                shell_mag += std::abs(t);
            };
            // shell: max(n1,n2) == s
            for (long long n1 = 0; n1 < s; ++n1) term(n1, s);
            for (long long n2 = 0; n2 <= s; ++n2) term(s, n2);
        }
        if (shell_mag < tol * 0.1) {
            if (++small_streak >= 2) break;
        } else {
            small_streak = 0;
        }
    }
    return acc.value();
}

// F1(q) = sum_{alpha} eps(alpha) sum_{n in alpha+N_0^2} q^{Q(n)} + 1/2 F_{2,p}(tau)
inline cplx eval_F1(long long p, cplx tau, double tol = 1e-13) {
    ShiftTable st(p);
    return lattice_sum_F12(st, tau, false, tol) +
           0.5 * rank_one_F(2, p, tau, tol);
}

// F2(q) = sum_{alpha} eta(alpha) sum n2 q^{Q(n)} - 1/2 sum |m+1/p| q^{(m+1/p)^2}
inline cplx eval_F2(long long p, cplx tau, double tol = 1e-13) {
    ShiftTable st(p);
    double v = tau.imag();
    KahanSum tail;
    double mu0 = 1.0 / double(p);
    for (long long m = 0;; ++m) {
        double mu = m + mu0, nu = -(m + 1) + mu0;
        tail.add(std::abs(mu) * qpow(tau, mu * mu) +
                 std::abs(nu) * qpow(tau, nu * nu));
        if (m > 2 && (std::abs(mu) + 1) * std::exp(-2.0 * pi * v * mu * mu) < tol * 0.1) break;
    }
    return lattice_sum_F12(st, tau, true, tol) - 0.5 * tail.value();
}

// Theta_nu(A,h,N;tau) = sum_{m = h (mod N)} m^nu e^{2 pi i tau A m^2 / (2N^2)}
inline cplx shimura_theta(int nu, long long A, long long h, long long N,
                          cplx tau, double tol = 1e-13) {
    if (nu != 0 && nu != 1) throw std::invalid_argument("shimura_theta: nu in {0,1}");
    double v = tau.imag();
    if (v <= 0) throw std::invalid_argument("shimura_theta: Im tau > 0 required");
    double c = double(A) / (2.0 * double(N) * double(N));
    KahanSum acc;
    for (long long j = 0;; ++j) {
        double m1 = h + double(j) * N, m2 = h - double(j + 1) * N;
        cplx t1 = qpow(tau, c * m1 * m1), t2 = qpow(tau, c * m2 * m2);
        if (nu == 1) { t1 *= m1; t2 *= m2; }
        acc.add(t1 + t2);
        double mm = std::min(m1 * m1, m2 * m2);
        if (j > 2 && (std::abs(m1) + std::abs(m2) + 1) *
                         std::exp(-2.0 * pi * v * c * mm) < tol * 0.1)
            break;
        if (j > 10000000) throw std::runtime_error("shimura_theta: no convergence");
    }
    return acc.value();
}

// K(q) = sum_{m >= 0} (q;q)_m at q a primitive k-th root of unity: terms with
// m >= k vanish, so the sum is finite.
inline cplx kontsevich_K(const Cusp& c) {
    cplx q = std::exp(2.0 * pi * iunit * (double(c.h) / double(c.k)));
    cplx acc = 0.0, poch = 1.0;
    for (long long m = 0; m < c.k; ++m) {
        acc += poch;                    // (q;q)_m
        poch *= (1.0 - std::pow(q, double(m + 1)));
    }
    return acc;
}

}  // namespace ft

#endif
