// Unit tests for the q-series evaluators: the rank-two decomposition, the
// Weyl-chamber rewrite, theta basics, and the Kontsevich sum.
#include <catch2/catch_amalgamated.hpp>

#include "falsetheta/qseries.hpp"

using namespace ft;

static const std::vector<cplx> taus = {
    {0.0, 1.0}, {0.3, 0.8}, {-0.41, 0.33}, {0.12, 0.05}, {0.5, 2.0}};

TEST_CASE("decomposition F(q) = 2/p F1(q^p) + 2 F2(q^p)") {
    for (long long p : {2, 3, 5}) {
        for (cplx tau : taus) {
            cplx lhs = eval_F(p, tau);
            cplx rhs = 2.0 / double(p) * eval_F1(p, double(p) * tau) +
                       2.0 * eval_F2(p, double(p) * tau);
            INFO("p=" << p << " tau=" << tau);
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }
}

TEST_CASE("Weyl-chamber rewrite F/2 = f1 + f2 + f3") {
    for (long long p : {2, 3, 5}) {
        for (cplx tau : taus) {
            cplx lhs = 0.5 * eval_F(p, tau);
            auto f = eval_f123(p, tau);
            INFO("p=" << p << " tau=" << tau);
            CHECK(std::abs(lhs - (f[0] + f[1] + f[2])) < 1e-12);
        }
    }
}

TEST_CASE("truncation is stable under doubling the shell budget") {
    cplx tau{0.1, 0.07};
    cplx a = eval_F1(2, tau, 1e-12);
    cplx b = eval_F1(2, tau, 1e-15);
    CHECK(std::abs(a - b) < 1e-11);
}

TEST_CASE("rank-one partners") {
    cplx tau{0.2, 0.9};
    // F_{j,p} reduces to signed sum; j = p gives the symmetric point 1/2.
    cplx v = rank_one_F(2, 2, tau);  // shifts m + 1/2
    // compare against a directly coded sum
    KahanSum direct;
    for (long long m = -40; m <= 40; ++m) {
        double mu = m + 0.5;
        direct.add(sgn(mu) * qpow(tau, mu * mu));
    }
    CHECK(std::abs(v - direct.value()) < 1e-12);
    // f_{j,p} is the m-weighted partner
    cplx w = rank_one_f(1, 2, tau);
    KahanSum direct2;
    for (long long m = -40; m <= 40; ++m) {
        double mu = m + 0.25;
        direct2.add(mu * qpow(tau, mu * mu));
    }
    CHECK(std::abs(w - direct2.value()) < 1e-12);
}

TEST_CASE("shimura_theta against direct summation and rank-one bridge") {
    cplx tau{0.13, 0.6};
    // Theta_1(4,1,4;tau) = sum_{m=1 (4)} m q^{m^2/8}
    cplx v = shimura_theta(1, 4, 1, 4, tau);
    KahanSum direct;
    for (long long m = -201; m <= 201; ++m)
        if (((m % 4) + 4) % 4 == 1) direct.add(double(m) * qpow(tau, m * m / 8.0));
    CHECK(std::abs(v - direct.value()) < 1e-12);
    // f_{j,p}(tau) = (1/2p) Theta_1(2p, j, 2p; tau/p)
    for (long long p : {2, 3}) {
        for (long long j = 1; j < 2 * p; ++j) {
            cplx lhs = rank_one_f(j, p, tau);
            cplx rhs = shimura_theta(1, 2 * p, j, 2 * p, tau / double(p)) /
                       double(2 * p);
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }
}

TEST_CASE("Kontsevich sum at roots of unity") {
    CHECK(std::abs(kontsevich_K(Cusp(1, 2)) - cplx(3.0, 0.0)) < 1e-13);
    CHECK(std::abs(kontsevich_K(Cusp(0, 1)) - cplx(1.0, 0.0)) < 1e-13);
    // K at q and q-bar are conjugate
    cplx a = kontsevich_K(Cusp(1, 5)), b = kontsevich_K(Cusp(-1, 5));
    CHECK(std::abs(a - std::conj(b)) < 1e-12);
}

// The sum-of-tails identity behind the Kontsevich sum:
//   sum_{m>=0} (eta(tau) - q^{1/24} (q;q)_m) = eta(tau) D(tau) + 1/2 eta~(tau)
static int kron12(long long m) {
    long long r = ((m % 12) + 12) % 12;
    if (r == 1 || r == 11) return 1;
    if (r == 5 || r == 7) return -1;
    return 0;
}

TEST_CASE("sum-of-tails identity, numerical spot check") {
    cplx tau{0.0, 1.0};
    cplx q = std::exp(2.0 * pi * iunit * tau);
    cplx eta = 0.0, etat = 0.0;
    for (long long m = 1; m <= 60; ++m) {
        eta += double(kron12(m)) * qpow(tau, m * m / 24.0);
        etat += double(kron12(m) * m) * qpow(tau, m * m / 24.0);
    }
    cplx D = -0.5;
    for (long long m = 1; m <= 200; ++m)
        D += std::pow(q, double(m)) / (1.0 - std::pow(q, double(m)));
    cplx lhs = 0.0, poch = 1.0;
    for (long long m = 0; m <= 300; ++m) {
        lhs += eta - qpow(tau, 1.0 / 24.0) * poch;
        poch *= (1.0 - std::pow(q, double(m + 1)));
    }
    CHECK(std::abs(lhs - (eta * D + 0.5 * etat)) < 1e-10);
}
