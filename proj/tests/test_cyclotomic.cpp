// Unit tests for exact root-of-unity arithmetic and the quadratic Gauss-sum
// identities.
#include <catch2/catch_amalgamated.hpp>

#include "falsetheta/gausssums.hpp"

using namespace ft;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == IPoly{-1, 1});
    CHECK(cyclotomic_poly(2) == IPoly{1, 1});
    CHECK(cyclotomic_poly(4) == IPoly{1, 0, 1});
    CHECK(cyclotomic_poly(6) == IPoly{1, -1, 1});
    CHECK(cyclotomic_poly(12) == IPoly{1, 0, -1, 0, 1});
    // degree of Phi_N is phi(N)
    CHECK(cyclotomic_poly(45).size() == 25);  // phi(45) = 24
}

TEST_CASE("CyclotomicSum zero detection") {
    CyclotomicSum a(3);
    a.add(0, 1);
    a.add(1, 1);
    a.add(2, 1);
    CHECK(a.is_zero());
    CHECK(std::abs(a.numeric()) < 1e-14);

    CyclotomicSum b(4);
    b.add(0, 1);
    b.add(2, 1);
    CHECK(b.is_zero());

    CyclotomicSum c(5);
    c.add(0, 1);
    c.add(1, bigrat(1, 3));
    CHECK(!c.is_zero());
    CHECK(std::abs(c.numeric()) > 0.5);

    // relation holding only after reduction mod Phi_6: zeta_6 = 1 + zeta_6^2
    CyclotomicSum d(6);
    d.add(1, 1);
    d.add(0, -1);
    d.add(2, -1);
    CHECK(d.is_zero());
}

TEST_CASE("weighted quadratic Gauss sums vanish exactly") {
    for (long long p : {2, 3, 4, 5}) {
        for (long long k : {1, 2, 3, 5, 7}) {
            for (long long h = 1; h < k + 2; ++h) {
                if (std::gcd(h, k) != 1) continue;
                auto r = gauss_sum_main(h, k, p);
                INFO("h=" << h << " k=" << k << " p=" << p);
                CHECK(r.exact);
                CHECK(r.zero);
                CHECK(r.numeric_abs < 1e-9);
            }
        }
    }
}

TEST_CASE("individual shift sub-sums do not vanish (cancellation is real)") {
    int nonzero = 0;
    for (int j = 0; j < 6; ++j) {
        auto r = gauss_sum_term(2, 3, 2, j);
        CHECK(r.exact);
        if (!r.zero) {
            ++nonzero;
            CHECK(r.numeric_abs > 0.1);
        }
    }
    CHECK(nonzero > 0);
}

TEST_CASE("Bernoulli-weighted identities") {
    SECTION("sumsmatch for a sweep of parameters") {
        for (long long p : {2, 3, 5}) {
            for (long long k : {1, 2, 3, 7}) {
                for (long long h : {1, 2, 3}) {
                    if (std::gcd(h, k) != 1) continue;
                    auto r = bernoulli_gauss_identity(h, k, p,
                                                      GaussIdentity::sumsmatch);
                    INFO("h=" << h << " k=" << k << " p=" << p);
                    CHECK(r.exact);
                    CHECK(r.zero);
                }
            }
        }
    }
    SECTION("odd-Bernoulli sums vanish for n = 1, 2") {
        for (unsigned n : {1u, 2u}) {
            auto r = bernoulli_gauss_identity(1, 3, 3, GaussIdentity::wantvanish, n);
            CHECK(r.exact);
            CHECK(r.zero);
            auto r2 = bernoulli_gauss_identity(2, 5, 2, GaussIdentity::wantvanish, n);
            CHECK(r2.exact);
            CHECK(r2.zero);
        }
    }
    SECTION("middle-element branch at p/delta = 2") {
        for (unsigned n : {1u, 2u}) {
            auto r = bernoulli_gauss_identity(1, 2, 2, GaussIdentity::alsowant, n);
            CHECK(r.exact);
            CHECK(r.zero);
        }
        CHECK_THROWS(bernoulli_gauss_identity(1, 3, 3, GaussIdentity::alsowant, 1));
    }
}
