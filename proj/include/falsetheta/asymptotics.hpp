// Radial asymptotic expansions of the two lattice pieces at roots of unity:
// as t -> 0^+,
//
//   F1(e^{2 pi i h/k - t}) ~ sum_{m>=0} a_{h,k}(m) t^m
//   F2(e^{2 pi i h/k - t}) ~ sum_{m>=0} b_{h,k}(m) t^m
//
// assembled from the Euler-Maclaurin formula applied to the Gaussian kernels
// of kernels.hpp.  The potentially growing contributions (the 1/t and
// 1/t^{3/2} main terms, and for F2 the two competing 1/t terms) cancel
// through the exact Gauss-sum identities of gausssums.hpp; the assembly
// *asserts* those cancellations and throws if one fails, rather than
// silently dropping divergent terms.
#ifndef FALSETHETA_ASYMPTOTICS_HPP
#define FALSETHETA_ASYMPTOTICS_HPP

#include "gausssums.hpp"
#include "kernels.hpp"

namespace ft {

struct AsymptoticSeries {
    std::vector<cplx> a;  // value(t) ~ sum_m a[m] t^m

    cplx eval(double t, int upto = -1) const {
        size_t n = (upto < 0) ? a.size() : std::min(a.size(), size_t(upto) + 1);
        cplx s = 0.0;
        double tm = 1.0;
        for (size_t m = 0; m < n; ++m, tm *= t) s += a[m] * tm;
        return s;
    }
};

namespace detail {

inline double factorial(int n) {
    double f = 1.0;
    for (int j = 2; j <= n; ++j) f *= j;
    return f;
}

// e^{2 pi i e / N}
inline cplx root_of_unity(long long e, long long N) {
    long long r = e % N;
    if (r < 0) r += N;
    return std::exp(2.0 * pi * iunit * (double(r) / double(N)));
}

}  // namespace detail

// Coefficients a_{h,k}(m), m = 0..M.
inline AsymptoticSeries asympt_F1(long long h, long long k, long long p,
                                  int M) {
    if (std::gcd(std::llabs(h), k) != 1)
        throw std::invalid_argument("asympt_F1: gcd(h,k) != 1");
    // The 1/t main term carries the full eps-weighted Gauss sum; it must
    // vanish exactly for the expansion to start at t^0.
    if (!gauss_sum_main(h, k, p).zero)
        throw std::runtime_error("asympt_F1: main-term Gauss sum nonzero");

    ShiftTable st(p);
    long long delta = detail::gauss_delta(h, p);
    long long L = k * p / delta;
    long long N = k * p * p;
    double step = double(k * p) / double(delta);  // kp/delta
    AsymptoticSeries out;
    out.a.assign(M + 1, cplx(0.0));

    for (int j : st.star_idx) {
        const auto& e = st.S[j];
        double w = e.eps;
        long long a1 = e.a1.num * (p / e.a1.den), a2 = e.a2.num * (p / e.a2.den);
        for (long long l1 = 0; l1 < L; ++l1) {
            for (long long l2 = 0; l2 < L; ++l2) {
                cplx ph = detail::root_of_unity(
                    detail::q_exponent(h, p, l1, l2, a1, a2), N);
                double u1 = double(delta * (p * l1 + a1)) / double(k * p * p);
                double u2 = double(delta * (p * l2 + a2)) / double(k * p * p);
                for (int m = 0; m <= M; ++m) {
                    double sm = std::pow(step, 2 * m);
                    // axis terms (orders n = 2m+1; even orders cancel in pairs)
                    out.a[m] += -2.0 * w * ph * bernoulli_poly(2 * m + 2, u2) /
                                detail::factorial(2 * m + 2) *
                                K1_boundary_x2(2 * m + 1) * sm;
                    out.a[m] += -2.0 * w * ph * bernoulli_poly(2 * m + 2, u1) /
                                detail::factorial(2 * m + 2) *
                                K1_boundary_x1(2 * m + 1) * sm;
                }
                // corner term: n1 = n2 (mod 2), total degree n1+n2 = 2m
                for (int n1 = 0; n1 <= 2 * M; ++n1) {
                    for (int n2 = n1 % 2; n1 + n2 <= 2 * M; n2 += 2) {
                        double d00 = K1_deriv00(n1, n2);
                        if (d00 == 0.0) continue;
                        out.a[(n1 + n2) / 2] +=
                            2.0 * w * ph * bernoulli_poly(n1 + 1, u1) /
                            detail::factorial(n1 + 1) *
                            bernoulli_poly(n2 + 1, u2) /
                            detail::factorial(n2 + 1) * d00 *
                            std::pow(step, n1 + n2);
                    }
                }
            }
        }
    }

    // rank-one piece: the signed sum over m in 1/p + Z
    for (long long r = 0; r < L; ++r) {
        long long mm = p * r + 1;
        cplx ph = detail::root_of_unity(h * mm * mm, N);
        double u = double(delta * mm) / double(k * p * p);
        for (int m = 0; m <= M; ++m)
            out.a[m] += -ph * bernoulli_poly(2 * m + 1, u) /
                        detail::factorial(2 * m + 1) * K2_deriv0(2 * m) *
                        std::pow(step, 2 * m);
    }
    return out;
}

// Coefficients b_{h,k}(m), m = 0..M.
inline AsymptoticSeries asympt_F2(long long h, long long k, long long p,
                                  int M) {
    if (std::gcd(std::llabs(h), k) != 1)
        throw std::invalid_argument("asympt_F2: gcd(h,k) != 1");
    // 1/t^{3/2} main term: eta-weighted Gauss sum must vanish.
    if (!gauss_sum_main(h, k, p, /*eta_weight=*/true).zero)
        throw std::runtime_error("asympt_F2: main-term Gauss sum nonzero");
    // The two 1/t contributions (corner n1 = 0 axis term vs the |m|-sum main
    // term) cancel exactly by the B_1-weighted identity.
    if (!bernoulli_gauss_identity(h, k, p, GaussIdentity::sumsmatch).zero)
        throw std::runtime_error("asympt_F2: 1/t terms do not cancel");

    ShiftTable st(p);
    long long delta = detail::gauss_delta(h, p);
    long long L = k * p / delta;
    long long N = k * p * p;
    double step = double(k * p) / double(delta);
    AsymptoticSeries out;
    out.a.assign(M + 1, cplx(0.0));

    for (int j : st.star_idx) {
        const auto& e = st.S[j];
        long long a1 = e.a1.num * (p / e.a1.den), a2 = e.a2.num * (p / e.a2.den);
        for (long long l1 = 0; l1 < L; ++l1) {
            for (long long l2 = 0; l2 < L; ++l2) {
                cplx ph = detail::root_of_unity(
                    detail::q_exponent(h, p, l1, l2, a1, a2), N);
                double u1 = double(delta * (p * l1 + a1)) / double(k * p * p);
                double u2 = double(delta * (p * l2 + a2)) / double(k * p * p);
                for (int m = 0; m <= M; ++m) {
                    int n = m + 1;  // t^{n-1}; the n=0/n1=0 terms are handled
                                    // by the asserted cancellations above
                    out.a[m] += -2.0 * ph * bernoulli_poly(2 * n + 1, u2) /
                                detail::factorial(2 * n + 1) *
                                L1_boundary_x2(2 * n) *
                                std::pow(step, 2 * n - 1);
                    out.a[m] += -2.0 * ph * bernoulli_poly(2 * n + 1, u1) /
                                detail::factorial(2 * n + 1) *
                                L1_boundary_x1(2 * n) *
                                std::pow(step, 2 * n - 1);
                }
                // corner term: n1 + n2 odd, t^{(n1+n2-1)/2}
                for (int n1 = 0; n1 <= 2 * M + 1; ++n1) {
                    for (int n2 = (n1 + 1) % 2; n1 + n2 <= 2 * M + 1; n2 += 2) {
                        double d00 = L1_deriv00(n1, n2);
                        if (d00 == 0.0) continue;
                        out.a[(n1 + n2 - 1) / 2] +=
                            2.0 * ph * bernoulli_poly(n1 + 1, u1) /
                            detail::factorial(n1 + 1) *
                            bernoulli_poly(n2 + 1, u2) /
                            detail::factorial(n2 + 1) * d00 *
                            std::pow(step, n1 + n2);
                    }
                }
            }
        }
    }

    // rank-one piece: the |.|-weighted sum over m in 1/p + Z
    for (long long r = 0; r < L; ++r) {
        long long mm = p * r + 1;
        cplx ph = detail::root_of_unity(h * mm * mm, N);
        double u = double(delta * mm) / double(k * p * p);
        for (int m = 0; m <= M; ++m)
            out.a[m] += ph * bernoulli_poly(2 * m + 2, u) /
                        detail::factorial(2 * m + 2) * L2_deriv0(2 * m + 1) *
                        std::pow(step, 2 * m + 1);
    }
    return out;
}

// Least-squares slope of log(y) against log(x); used to confirm the order of
// vanishing of expansion residuals.
inline double loglog_slope(const std::vector<std::pair<double, double>>& pts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (auto [x, y] : pts) {
        if (y <= 0.0) continue;  // residual at rounding floor
        double lx = std::log(x), ly = std::log(y);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        ++n;
    }
    if (n < 2) throw std::runtime_error("loglog_slope: need >= 2 usable points");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Neville polynomial extrapolation of f(t_j) to t = 0.
inline cplx richardson_limit(const std::vector<std::pair<double, cplx>>& pts) {
    std::vector<cplx> v;
    std::vector<double> t;
    for (auto& [tj, fj] : pts) { t.push_back(tj); v.push_back(fj); }
    size_t n = v.size();
    for (size_t l = 1; l < n; ++l)
        for (size_t j = 0; j + l < n; ++j)
            v[j] = (t[j + l] * v[j] - t[j] * v[j + 1]) / (t[j + l] - t[j]);
    return v[0];
}

}  // namespace ft

#endif
