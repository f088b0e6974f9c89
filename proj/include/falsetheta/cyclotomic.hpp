// Exact arithmetic in Z[zeta_N]: finite sums  sum_j c_j zeta_N^j  with exact
// rational coefficients.  The zero test reduces the coefficient polynomial
// modulo the N-th cyclotomic polynomial Phi_N (computed by exact division of
// x^N - 1 by the Phi_d for proper divisors d), which is the criterion for the
// sum to vanish as an algebraic number.
#ifndef FALSETHETA_CYCLOTOMIC_HPP
#define FALSETHETA_CYCLOTOMIC_HPP

#include <map>
#include <vector>

#include "types.hpp"

namespace ft {

// Integer polynomials, ascending coefficients.
using IPoly = std::vector<bigint>;

inline void ipoly_trim(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division p / d for monic d; throws if the division leaves a remainder
// (callers only divide by exact monic factors).
inline IPoly ipoly_div_exact(IPoly p, const IPoly& d) {
    ipoly_trim(p);
    if (d.empty() || d.back() != 1) throw std::invalid_argument("ipoly_div_exact: divisor not monic");
    IPoly q;
    if (p.size() < d.size()) { if (!p.empty()) throw std::runtime_error("ipoly_div_exact: remainder"); return q; }
    q.assign(p.size() - d.size() + 1, bigint(0));
    for (auto i = std::ssize(p) - 1; i >= std::ssize(d) - 1; --i) {
        bigint c = p[i];
        q[i - d.size() + 1] = c;
        if (c != 0)
            for (size_t j = 0; j < d.size(); ++j) p[i - d.size() + 1 + j] -= c * d[j];
    }
    for (const auto& c : p)
        if (c != 0) throw std::runtime_error("ipoly_div_exact: nonzero remainder");
    return q;
}

// Remainder of p modulo monic d.
inline IPoly ipoly_mod(IPoly p, const IPoly& d) {
    ipoly_trim(p);
    while (p.size() >= d.size()) {
        bigint c = p.back();
        size_t off = p.size() - d.size();
        if (c != 0)
            for (size_t j = 0; j < d.size(); ++j) p[off + j] -= c * d[j];
        p.pop_back();
        ipoly_trim(p);
    }
    return p;
}

inline const IPoly& cyclotomic_poly(long long N) {
    static std::map<long long, IPoly> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    // x^N - 1 divided by all Phi_d, d | N, d < N
    IPoly p(N + 1, bigint(0));
    p[0] = -1;
    p[N] = 1;
    for (long long d = 1; d < N; ++d)
        if (N % d == 0) p = ipoly_div_exact(std::move(p), cyclotomic_poly(d));
    return cache.emplace(N, std::move(p)).first->second;
}

struct CyclotomicSum {
    long long N = 1;
    std::vector<bigrat> coeff;  // coeff[j] * zeta_N^j

    explicit CyclotomicSum(long long N_ = 1) : N(N_), coeff(N_, bigrat(0)) {}

    // add c * zeta_N^e (e any integer, reduced mod N)
    void add(long long e, const bigrat& c) {
        long long r = e % N;
        if (r < 0) r += N;
        coeff[size_t(r)] += c;
    }

    CyclotomicSum& operator+=(const CyclotomicSum& o) {
        if (o.N != N) throw std::invalid_argument("CyclotomicSum: mixed N");
        for (long long j = 0; j < N; ++j) coeff[j] += o.coeff[j];
        return *this;
    }

    void scale(const bigrat& s) {
        for (auto& c : coeff) c *= s;
    }

    // True iff the sum vanishes in Z[zeta_N]: clear denominators and reduce
    // the integer coefficient polynomial mod Phi_N.
    bool is_zero() const {
        bigint den = 1;
        for (const auto& c : coeff) {
            bigint d = boost::multiprecision::denominator(c);
            den = boost::multiprecision::lcm(den, d);
        }
        IPoly p(N, bigint(0));
        bool any = false;
        for (long long j = 0; j < N; ++j) {
            bigrat scaled = coeff[j] * bigrat(den);
            p[j] = boost::multiprecision::numerator(scaled);
            if (p[j] != 0) any = true;
        }
        if (!any) return true;
        IPoly r = ipoly_mod(std::move(p), cyclotomic_poly(N));
        return r.empty();
    }

    // Numerical value (for cross-checks and the oversized-N fallback).
    cplx numeric() const {
        cplx s = 0.0;
        for (long long j = 0; j < N; ++j)
            if (coeff[j] != 0)
                s += to_d(coeff[j]) *
                     std::exp(2.0 * pi * iunit * (double(j) / double(N)));
        return s;
    }
};

}  // namespace ft

#endif
