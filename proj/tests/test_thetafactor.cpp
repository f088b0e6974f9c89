// Tests for the one-variable theta kernels: Kronecker symbol arithmetic,
// evaluation on vertical lines above rationals (Poisson-dual route against
// the direct series in their overlap region), and the multiplier system of
// the transformation law, checked numerically to high precision.
#include <catch2/catch_amalgamated.hpp>

#include "falsetheta/thetafactor.hpp"

using namespace ft;

TEST_CASE("kronecker symbol basics") {
    // Euler criterion against small odd primes
    for (long long p : {3LL, 5LL, 7LL, 11LL, 13LL}) {
        for (long long a = 1; a < p; ++a) {
            long long e = 1;
            for (long long j = 0; j < (p - 1) / 2; ++j) e = e * a % p;
            long long expect = (e == 1) ? 1 : -1;
            CHECK(kronecker(a, p) == expect);
        }
    }
    // (2/n) via the second supplement
    CHECK(kronecker(2, 7) == 1);
    CHECK(kronecker(2, 3) == -1);
    CHECK(kronecker(2, 5) == -1);
    CHECK(kronecker(2, 9) == 1);
    // (-1/n)
    CHECK(kronecker(-1, 5) == 1);
    CHECK(kronecker(-1, 7) == -1);
    // common factor
    CHECK(kronecker(6, 9) == 0);
    // n = 1 and negative n
    CHECK(kronecker(7, 1) == 1);
    CHECK(kronecker(-3, -1) == -1);
}

TEST_CASE("line evaluation agrees with the direct series") {
    // Small s: the direct series still converges (slowly) above a rational
    // point, giving an independent check of the Poisson-dual route.
    struct P { int nu; long long A, h, N, scale, d, c; };
    std::vector<P> cases = {
        {0, 4, 1, 4, 1, 1, 1},  {0, 4, 0, 4, 1, 1, 2},
        {1, 4, 1, 4, 3, 1, 1},  {1, 4, 3, 4, 1, 2, 3},
        {0, 6, 2, 6, 1, 1, 4},  {1, 6, 1, 6, 3, -1, 6},
        {1, 4, 1, 4, 1, 1, 24}, {0, 6, 3, 6, 3, 5, 12},
    };
    for (const auto& cs : cases) {
        ThetaFactor f{cs.nu, cs.A, cs.h, cs.N, cs.scale};
        for (double s : {0.02, 0.07, 0.31}) {
            cplx dual = f.eval_line(cs.d, cs.c, s);
            cplx direct = f.eval(cplx(double(cs.d) / double(cs.c), s), 1e-14);
            INFO("nu=" << cs.nu << " A=" << cs.A << " h=" << cs.h
                       << " scale=" << cs.scale << " d/c=" << cs.d << "/"
                       << cs.c << " s=" << s);
            CHECK(std::abs(dual - direct) < 1e-11);
        }
    }
}

TEST_CASE("line evaluation is continuous across the crossover") {
    ThetaFactor f{1, 4, 1, 4, 1};  // crossover at 2 pi s c2 = 1
    double s0 = 1.0 / (2.0 * pi * f.c2());
    cplx lo = f.eval_line(1, 3, s0 * (1 - 1e-9));
    cplx hi = f.eval_line(1, 3, s0 * (1 + 1e-9));
    CHECK(std::abs(lo - hi) < 1e-8);
}

TEST_CASE("transformation law under the congruence group") {
    struct M2 { Matrix2 M; long long A, N; };
    std::vector<M2> cases = {
        {{1, 0, 8, 1}, 4, 4},    {{1, 2, 8, 17}, 4, 4},
        {{3, 2, 16, 11}, 4, 4},  {{1, 0, 12, 1}, 6, 6},
        {{5, 2, 12, 5}, 6, 6},
    };
    for (const auto& cs : cases) {
        for (int nu : {0, 1}) {
            for (long long h : {1LL, 2LL, cs.N - 1}) {
                ThetaMultiplier mult =
                    shimura_multiplier(cs.A, h, cs.N, cs.M, nu);
                cplx tau{0.3, 0.8};
                cplx jtau = double(cs.M.c) * tau + double(cs.M.d);
                cplx lhs = shimura_theta(nu, cs.A, h, cs.N, cs.M.apply(tau));
                cplx rhs = mult.factor * std::pow(jtau, 0.5 + nu) *
                           shimura_theta(nu, cs.A, mult.new_h, cs.N, tau);
                INFO("a=" << cs.M.a << " b=" << cs.M.b << " c=" << cs.M.c
                          << " d=" << cs.M.d << " nu=" << nu << " h=" << h);
                CHECK(std::abs(lhs - rhs) < 1e-10);
            }
        }
    }
}

TEST_CASE("index reflection") {
    // Theta_nu(A,-h) = (-1)^nu Theta_nu(A,h)
    cplx tau{0.1, 0.6};
    CHECK(std::abs(shimura_theta(0, 4, -1, 4, tau) -
                   shimura_theta(0, 4, 1, 4, tau)) < 1e-13);
    CHECK(std::abs(shimura_theta(1, 4, -1, 4, tau) +
                   shimura_theta(1, 4, 1, 4, tau)) < 1e-13);
}

TEST_CASE("congruence group membership") {
    CHECK(in_gamma_p({1, 0, 24, 1}, 2));
    CHECK(in_gamma_p({7, 8, 48, 55}, 2));   // 7*55 - 8*48 = 1, 55 = -1 mod 4
    CHECK(in_gamma_p({1, 0, 36, 1}, 3));
    CHECK_FALSE(in_gamma_p({1, 0, 12, 1}, 2));   // c not divisible by 24
    CHECK_FALSE(in_gamma_p({1, 4, 24, 97}, 2));  // b not divisible by 8
    CHECK_FALSE(in_gamma_p({3, 8, 48, 0}, 2));   // not unimodular
}
