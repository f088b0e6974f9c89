// Exact Bernoulli numbers and Bernoulli polynomials over the rationals.
//
// B_n are generated by t/(e^t - 1); B_n(x) = sum_j C(n,j) B_j x^{n-j}.
// Everything is computed with exact rational arithmetic and cached.
#ifndef FALSETHETA_BERNOULLI_HPP
#define FALSETHETA_BERNOULLI_HPP

#include <vector>

#include "types.hpp"

namespace ft {

inline bigint binomial_big(unsigned n, unsigned k) {
    if (k > n) return 0;
    bigint r = 1;
    for (unsigned j = 0; j < k; ++j) { r *= (n - j); r /= (j + 1); }
    return r;
}

// Bernoulli numbers B_0..B_n (convention B_1 = -1/2), exact.
inline const std::vector<bigrat>& bernoulli_numbers(unsigned n) {
    static std::vector<bigrat> cache{bigrat(1)};
    while (cache.size() <= n) {
        unsigned m = static_cast<unsigned>(cache.size());
        // sum_{j=0}^{m} C(m+1,j) B_j = 0  =>  solve for B_m
        bigrat s = 0;
        for (unsigned j = 0; j < m; ++j) s += bigrat(binomial_big(m + 1, j)) * cache[j];
        cache.push_back(-s / bigrat(binomial_big(m + 1, m)));
    }
    return cache;
}

// Exact value of the Bernoulli polynomial B_n(x) at a rational point.
inline bigrat bernoulli_poly_exact(unsigned n, const bigrat& x) {
    const auto& B = bernoulli_numbers(n);
    bigrat acc = 0, xp = 1;  // xp = x^{n-j} built from the top down
    // Evaluate via Horner in x: B_n(x) = sum_j C(n,j) B_j x^{n-j}
    for (unsigned j = 0; j <= n; ++j) {
        // term order: accumulate with powers; simple loop, n is tiny (<= 34)
        bigrat term = bigrat(binomial_big(n, j)) * B[j];
        bigrat pw = 1;
        for (unsigned e = 0; e < n - j; ++e) pw *= x;
        acc += term * pw;
    }
    (void)xp;
    return acc;
}

// Coefficient list of B_n(x) in ascending powers of x, exact.
inline std::vector<bigrat> bernoulli_poly_coeffs(unsigned n) {
    const auto& B = bernoulli_numbers(n);
    std::vector<bigrat> c(n + 1);
    for (unsigned j = 0; j <= n; ++j) c[n - j] = bigrat(binomial_big(n, j)) * B[j];
    return c;
}

inline double bernoulli_poly(unsigned n, double x) {
    const auto& B = bernoulli_numbers(n);
    double acc = 0.0;
    for (unsigned j = 0; j <= n; ++j) {
        double pw = std::pow(x, double(n - j));
        acc += to_d(bigrat(binomial_big(n, j)) * B[j]) * pw;
    }
    return acc;
}

}  // namespace ft

#endif
