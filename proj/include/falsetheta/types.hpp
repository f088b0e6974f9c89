// Basic shared types: complex alias, exact rationals, cusps h/k, and the
// runtime configuration knobs used across the library.
#ifndef FALSETHETA_TYPES_HPP
#define FALSETHETA_TYPES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ft {

using cplx = std::complex<double>;
using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

inline constexpr double pi = std::numbers::pi;
inline const cplx iunit{0.0, 1.0};

// Exact small rational on int64, used for lattice shifts and exponents where
// values stay tiny.  Always kept normalized with den > 0.
struct Frac {
    long long num = 0;
    long long den = 1;

    constexpr Frac() = default;
    Frac(long long n, long long d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Frac: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(std::llabs(num), den);
        if (g > 1) { num /= g; den /= g; }
    }
    double value() const { return double(num) / double(den); }
    Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
    Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
    Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
    Frac operator-() const { Frac r; r.num = -num; r.den = den; return r; }
    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
    bool is_integer() const { return den == 1; }
    // Representative of the class mod 1 in [0,1).
    Frac mod1() const {
        long long r = num % den;
        if (r < 0) r += den;
        Frac f; f.num = r; f.den = den; f.normalize(); return f;
    }
};

// Cusp h/k in lowest terms, k > 0.  h may be negative.
struct Cusp {
    long long h = 0;
    long long k = 1;

    Cusp() = default;
    Cusp(long long h_, long long k_) : h(h_), k(k_) {
        if (k <= 0) throw std::invalid_argument("Cusp: k must be positive");
        if (std::gcd(std::llabs(h), k) != 1) throw std::invalid_argument("Cusp: gcd(h,k) != 1");
    }
    double value() const { return double(h) / double(k); }
};

// Radial approach to a cusp: tau = h/k + i t / (2 pi), i.e. q = e^{2 pi i h/k - t}.
inline cplx tau_radial(const Cusp& c, double t) {
    return {c.value(), t / (2.0 * pi)};
}

// Runtime tolerances.  Defaults match the documented interface contract; the
// environment variable FALSETHETA_TOL overrides the default target tolerance.
struct RunConfig {
    double tol = 1e-10;        // target absolute tolerance for series/quadrature
    double quad_tol = 1e-12;   // tolerance for low-level quadrature building blocks
    int max_shells = 4096;     // hard cap on lattice truncation growth

    static RunConfig from_env() {
        RunConfig rc;
        if (const char* s = std::getenv("FALSETHETA_TOL")) {
            char* end = nullptr;
            double v = std::strtod(s, &end);
            if (end != s && v > 0) { rc.tol = v; rc.quad_tol = v * 1e-2; }
        }
        return rc;
    }
};

inline double to_d(const bigrat& r) { return r.convert_to<double>(); }
inline double to_d(const bigint& r) { return r.convert_to<double>(); }

inline double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }
// One-sided sign: limit from the right, sgn*(0) = +1.
inline double sgn_star(double x) { return x >= 0 ? 1.0 : -1.0; }

}  // namespace ft

#endif
