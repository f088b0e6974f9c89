// Unit tests for the Gaussian error-type special functions and exact
// Bernoulli machinery.
#include <catch2/catch_amalgamated.hpp>

#include "falsetheta/bernoulli.hpp"
#include "falsetheta/specfun.hpp"

using namespace ft;

TEST_CASE("E is an odd sigmoid built on erf") {
    CHECK(erf_E(0.0) == 0.0);
    CHECK(erf_E(1.0) == Catch::Approx(std::erf(std::sqrt(pi))).epsilon(1e-15));
    for (double u : {0.1, 0.7, 2.3}) {
        CHECK(erf_E(-u) == Catch::Approx(-erf_E(u)).margin(1e-16));
    }
    CHECK(erf_E(40.0) == Catch::Approx(1.0).margin(1e-15));
    // E(u) = sgn(u)(1 - Gamma(1/2, pi u^2)/sqrt(pi))
    for (double u : {-1.3, -0.2, 0.4, 2.0}) {
        double rhs = sgn(u) * (1.0 - gamma_half(pi * u * u) / std::sqrt(pi));
        CHECK(erf_E(u) == Catch::Approx(rhs).margin(1e-15));
    }
}

TEST_CASE("gamma_half values and functional equation") {
    CHECK(gamma_half(0.0) == Catch::Approx(std::sqrt(pi)).epsilon(1e-15));
    // d/du Gamma(1/2,u) = -e^{-u}/sqrt(u): finite-difference check
    double u = 0.8, h = 1e-6;
    double fd = (gamma_half(u + h) - gamma_half(u - h)) / (2 * h);
    CHECK(fd == Catch::Approx(-std::exp(-u) / std::sqrt(u)).epsilon(1e-8));
}

TEST_CASE("mordell_M basics and Gaussian bound") {
    CHECK(mordell_M(0.0) == 0.0);
    for (double u : {-2.0, -0.5, 0.3, 1.0, 2.7}) {
        CHECK(mordell_M(u) ==
              Catch::Approx(erf_E(u) - sgn(u)).margin(1e-15));
        CHECK(std::abs(mordell_M(u)) <= 2.0 * std::exp(-pi * u * u));
        // M(u) = -sgn(u) Gamma(1/2, pi u^2)/sqrt(pi)
        CHECK(mordell_M(u) ==
              Catch::Approx(-sgn(u) * gamma_half(pi * u * u) / std::sqrt(pi))
                  .margin(1e-15));
    }
}

TEST_CASE("E2 evenness and cross-check against 2-D product quadrature") {
    const double kappa = std::sqrt(3.0);
    for (auto [u1, u2] : {std::pair{0.3, 0.5}, {1.1, -0.4}, {-0.7, 0.2}}) {
        double a = E2(kappa, u1, u2);
        CHECK(a == Catch::Approx(E2(kappa, -u1, -u2)).margin(1e-12));
        CHECK(a == Catch::Approx(E2_product_quadrature(kappa, u1, u2))
                       .margin(1e-9));
    }
    // Degenerate-line values still match the 2-D oracle.
    CHECK(E2(kappa, 0.8, 0.0) ==
          Catch::Approx(E2_product_quadrature(kappa, 0.8, 0.0)).margin(1e-9));
}

TEST_CASE("E2 limit with scaled slope parameter") {
    // E2(eps*kappa; u1, eps u2 + u3/eps) -> sgn(u3) E(u1) as eps -> 0+
    CHECK(E2(0.001, 1.0, 1000.0) == Catch::Approx(erf_E(1.0)).margin(1e-3));
}

TEST_CASE("M2 semi-infinite route agrees with the E2 combination") {
    const double kappa = std::sqrt(3.0);
    std::vector<std::pair<double, double>> pts = {
        {0.9, 0.4},   {1.5, -0.8}, {-1.2, 0.7},  {2.0, 1.0},
        {0.8, 1e-4},  {1.0, 0.57735}, /* near u1 = kappa u2 */
        {0.6, 0.34},  {3.0, -2.0},
    };
    for (auto [u1, u2] : pts) {
        CHECK(M2_via_integral(kappa, u1, u2) ==
              Catch::Approx(M2_via_E2(kappa, u1, u2)).margin(1e-9));
    }
    // M2 jumps by 2 M(u1) across u2 = 0 (sgn(u2) factor); the value on the
    // line is the symmetric (principal-value) one.
    double avg = 0.5 * (M2(kappa, 0.9, 1e-7) + M2(kappa, 0.9, -1e-7));
    CHECK(M2(kappa, 0.9, 0.0) == Catch::Approx(avg).margin(1e-6));
}

TEST_CASE("M2 partial derivatives match finite differences") {
    const double kappa = std::sqrt(3.0);
    double u1 = 0.7, u2 = 0.3, h = 1e-5;
    auto p = M2_partials(kappa, u1, u2);
    double fd1 = (M2(kappa, u1 + h, u2) - M2(kappa, u1 - h, u2)) / (2 * h);
    double fd2 = (M2(kappa, u1, u2 + h) - M2(kappa, u1, u2 - h)) / (2 * h);
    CHECK(p.d1 == Catch::Approx(fd1).margin(1e-7));
    CHECK(p.d2 == Catch::Approx(fd2).margin(1e-7));
    // Closed form of d/du2 at (0.7, 0.3) with kappa = sqrt3
    double expected = std::exp(-pi * std::pow(0.3 + kappa * 0.7, 2) / 4.0) *
                      mordell_M((0.7 - kappa * 0.3) / 2.0);
    CHECK(p.d2 == Catch::Approx(expected).margin(1e-14));
}

TEST_CASE("M2 large-argument decay matches the stated asymptotic") {
    const double kappa = std::sqrt(3.0);
    double u1 = 0.9, u2 = -0.8;  // well away from the degenerate lines
    auto ratio = [&](double lam) {
        double lhs = M2(kappa, lam * u1, lam * u2);
        double rhs = std::exp(-pi * lam * lam * (u1 * u1 + u2 * u2)) /
                     (lam * lam * pi * pi * u2 * (u1 - kappa * u2));
        return lhs / rhs;
    };
    CHECK(ratio(3.0) == Catch::Approx(1.0).epsilon(0.15));
    // and the approximation improves with lambda
    CHECK(std::abs(ratio(4.0) - 1.0) < std::abs(ratio(3.0) - 1.0));
}

TEST_CASE("M2_star coordinates and the one-sided boundary limits") {
    const double kappa = std::sqrt(3.0);
    // Interior points: M2*(sqrt3; x) = M2(sqrt3; sqrt3(2x1+x2), x2).
    double x1 = 0.5, x2 = 0.3;
    double u1 = std::sqrt(3.0) * (2 * x1 + x2);
    CHECK(M2_star(kappa, x1, x2) ==
          Catch::Approx(M2(kappa, u1, x2)).margin(1e-9));
    // M2(sqrt3; sqrt3 x2, x2) - lim_{x1->0+} M2*(sqrt3; +-x1-form) = +-M(2 x2)
    double m2val = M2(kappa, std::sqrt(3.0) * x2, x2);
    double plus = M2_star(kappa, 1e-9, x2);
    double minus = M2_star(kappa, -1e-9, x2);
    CHECK(m2val - plus == Catch::Approx(mordell_M(2 * x2)).margin(1e-7));
    CHECK(m2val - minus == Catch::Approx(-mordell_M(2 * x2)).margin(1e-7));
}

TEST_CASE("Bernoulli numbers and polynomials, exact") {
    const auto& B = bernoulli_numbers(12);
    CHECK(B[0] == bigrat(1));
    CHECK(B[1] == bigrat(-1, 2));
    CHECK(B[2] == bigrat(1, 6));
    CHECK(B[3] == bigrat(0));
    CHECK(B[12] == bigrat(-691, 2730));
    // Reflection B_m(1-x) = (-1)^m B_m(x), exact at a rational point.
    for (unsigned m : {1u, 2u, 5u, 8u, 13u}) {
        bigrat x(3, 7);
        bigrat lhs = bernoulli_poly_exact(m, bigrat(1) - x);
        bigrat rhs = bernoulli_poly_exact(m, x);
        if (m % 2) rhs = -rhs;
        CHECK(lhs == rhs);
    }
    // B_m(0) = B_m; B_1(x) = x - 1/2
    CHECK(bernoulli_poly_exact(8, bigrat(0)) == B[8]);
    CHECK(bernoulli_poly_exact(1, bigrat(1, 3)) == bigrat(-1, 6));
    CHECK(bernoulli_poly(2, 0.5) == Catch::Approx(-1.0 / 12.0).margin(1e-15));
    // Table extends cleanly to order 32 (needed by the expansion machinery).
    CHECK(bernoulli_numbers(32)[32] != bigrat(0));
}
