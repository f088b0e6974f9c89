// Tests for the period integrals.  The single integrals are checked against
// a closed-form termwise oracle (incomplete gamma factors reduce to erfc),
// the double integrals against the shuffle relation, and the modular side
// against the cocycle identities with all pieces computed independently.
#include <catch2/catch_amalgamated.hpp>

#include "falsetheta/eichler.hpp"

using namespace ft;

// Termwise integration of the defining series gives, with c2 the exponent
// coefficient and a_m = c2 m^2:
//   weight 3/2: I_f = (i/sqrt(2 c2)) sum_m sgn(m) erfc(2|m| sqrt(pi c2 v))
//                     e^{-2 pi i a_m tau}
//   weight 1/2: I_f = i sum_m [ sqrt(2/v) e^{-4 pi a_m v}
//                     - 2 pi sqrt(2 c2) |m| erfc(2|m| sqrt(pi c2 v)) ]
//                     e^{-2 pi i a_m tau}      (the m = 0 term is sqrt(2/v))
static cplx oracle_single(const ThetaFactor& f, cplx tau) {
    double c2 = f.c2(), v = tau.imag();
    KahanSum acc;
    for (long long j = -400; j <= 400; ++j) {
        long long m = f.h + f.N * j;
        double am = c2 * double(m) * double(m);
        if (2.0 * pi * am * v > 60.0) continue;  // term below 1e-26
        cplx qm = std::exp(-2.0 * pi * iunit * am * tau);
        double E = std::erfc(2.0 * std::abs(double(m)) * std::sqrt(pi * c2 * v));
        if (f.nu == 1) {
            double sg = (m > 0) - (m < 0);
            acc.add(iunit / std::sqrt(2.0 * c2) * sg * E * qm);
        } else {
            acc.add(iunit *
                    (std::sqrt(2.0 / v) * std::exp(-4.0 * pi * am * v) -
                     2.0 * pi * std::sqrt(2.0 * c2) * std::abs(double(m)) * E) *
                    qm);
        }
    }
    return acc.value();
}

TEST_CASE("single integral against the termwise closed form") {
    std::vector<ThetaFactor> fs = {
        {1, 4, 1, 4, 1}, {1, 4, 3, 4, 3}, {1, 6, 2, 6, 1},
        {0, 4, 1, 4, 1}, {0, 4, 0, 4, 1}, {0, 6, 3, 6, 3},
    };
    for (const auto& f : fs) {
        for (cplx tau : {cplx{0.0, 1.0}, cplx{0.3, 0.8}, cplx{-0.2, 0.35}}) {
            cplx got = eichler_single(f, tau, 1e-12);
            cplx want = oracle_single(f, tau);
            INFO("nu=" << f.nu << " h=" << f.h << " scale=" << f.scale
                       << " tau=" << tau);
            CHECK(std::abs(got - want) < 1e-10);
        }
    }
}

TEST_CASE("shuffle relation for double integrals") {
    struct P { ThetaFactor f1, f2; };
    std::vector<P> pairs = {
        {{1, 4, 1, 4, 3}, {1, 4, 3, 4, 1}},
        {{1, 4, 1, 4, 1}, {0, 4, 2, 4, 1}},
        {{1, 6, 1, 6, 1}, {1, 6, 2, 6, 3}},
        {{1, 6, 1, 6, 1}, {0, 6, 0, 6, 3}},  // non-cuspidal partner
        {{1, 4, 3, 4, 3}, {0, 4, 1, 4, 3}},
    };
    for (const auto& [f1, f2] : pairs) {
        for (cplx tau : {cplx{0.0, 1.0}, cplx{0.3, 0.8}, cplx{1.0, 1.0}}) {
            cplx r = shuffle_residual(f1, f2, tau, 1e-10);
            INFO("h1=" << f1.h << " nu2=" << f2.nu << " h2=" << f2.h
                       << " tau=" << tau);
            CHECK(std::abs(r) < 1e-8);
        }
    }
}

TEST_CASE("single cocycle identity") {
    Matrix2 M{1, 0, 24, 1};
    REQUIRE(in_gamma_p(M, 2));
    for (const ThetaFactor& f :
         {ThetaFactor{1, 4, 1, 4, 3}, ThetaFactor{1, 4, 1, 4, 1},
          ThetaFactor{0, 4, 2, 4, 1}}) {
        for (cplx tau : {cplx{0.0, 1.0}, cplx{1.0, 1.0}}) {
            cplx r = single_cocycle_residual(f, M, tau, 1e-10);
            INFO("nu=" << f.nu << " scale=" << f.scale << " tau=" << tau);
            CHECK(std::abs(r) < 1e-8);
        }
    }
    // a matrix with a nontrivial multiplier
    Matrix2 M2{7, 8, 48, 55};
    REQUIRE(in_gamma_p(M2, 2));
    cplx r = single_cocycle_residual({1, 4, 1, 4, 1}, M2, {0.0, 1.0}, 1e-10);
    CHECK(std::abs(r) < 1e-8);
}

TEST_CASE("double cocycle identity") {
    Matrix2 M{1, 0, 24, 1};
    cplx r1 = double_cocycle_residual({1, 4, 1, 4, 3}, {1, 4, 3, 4, 1}, M,
                                      {0.0, 1.0}, 1e-9);
    CHECK(std::abs(r1) < 1e-6);
    cplx r2 = double_cocycle_residual({1, 4, 1, 4, 1}, {0, 4, 0, 4, 3}, M,
                                      {0.0, 1.0}, 1e-9);
    CHECK(std::abs(r2) < 1e-6);
}

TEST_CASE("lowering annihilates all but the boundary term") {
    for (cplx tau : {cplx{0.0, 1.0}, cplx{0.2, 0.7}}) {
        cplx r1 = lowering_residual({1, 4, 1, 4, 3}, {1, 4, 3, 4, 1}, tau);
        CHECK(std::abs(r1) < 1e-4);
        cplx r2 = lowering_residual({1, 4, 1, 4, 1}, {0, 4, 2, 4, 1}, tau);
        CHECK(std::abs(r2) < 1e-4);
    }
}

TEST_CASE("pair sums evaluate finitely") {
    // smoke: the 12- and 18-pair sums produce stable values
    cplx e1 = E1_eichler(2, {0.0, 1.0}, 1e-8);
    cplx e1b = E1_eichler(2, {0.0, 1.0}, 1e-9);
    CHECK(std::abs(e1 - e1b) < 1e-6);
    cplx e2 = E2_eichler(2, {0.0, 1.0}, 1e-8);
    cplx e2b = E2_eichler(2, {0.0, 1.0}, 1e-9);
    CHECK(std::abs(e2 - e2b) < 1e-6);
}
