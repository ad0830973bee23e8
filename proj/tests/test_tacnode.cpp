#include <tuple>
#include <doctest.h>

#include <cmath>

#include "core/tacnode.hpp"

using namespace cuthex;

TEST_CASE("theta conventions") {
    TacnodeKernel K0({0, 0, 0.0});
    CHECK(K0.theta(Cplx(0.1, 0.2), Cplx(0.3, -0.1)) == Cplx(1, 0));
    CHECK(K0.theta00() == Cplx(1, 0));
    TacnodeKernel K1({1, 2, 0.5});
    // Theta_r(0,0) is real for real beta
    CHECK(std::abs(K1.theta00().imag()) < 1e-14);
    CHECK(std::abs(K1.theta00().real()) > 0);
    // Theta^+_0 = 1 for r = 1
    CHECK(K1.theta_plus(Cplx(0.2, 0), Cplx(0.1, 0)) == Cplx(1, 0));
}

TEST_CASE("quadrature is stable under refinement and abscissa shifts") {
    TacParams p{1, 2, 0.0};
    TacnodeKernel K({p});
    QuadConfig half;
    half.h /= 2;
    TacnodeKernel Kh(p, half);
    QuadConfig longer;
    longer.T *= 1.5;
    TacnodeKernel Kt(p, longer);
    QuadConfig shifted;
    shifted.a = 0.4;
    TacnodeKernel Ka(p, shifted);
    for (auto [t1, h1, t2, h2] : {std::make_tuple(0L, 0.3, 1L, -0.2), std::make_tuple(3L, -0.5, -1L, 0.4)}) {
        double base = K.eval(t1, h1, t2, h2);
        CHECK(std::abs(base - Kh.eval(t1, h1, t2, h2)) < 1e-10);
        CHECK(std::abs(base - Kt.eval(t1, h1, t2, h2)) < 1e-10);
        CHECK(std::abs(base - Ka.eval(t1, h1, t2, h2)) < 1e-10);
    }
}

TEST_CASE("supports of the four integral terms") {
    TacnodeKernel K({1, 2, 0.5});
    for (long t1 : {-1L, 0L, 1L, 2L})
        for (long t2 : {-1L, 0L, 1L}) {
            auto terms = K.eval_terms(t1, 0.3, t2, -0.4);
            if (t1 <= 2) CHECK(std::abs(terms[1]) < 1e-10);       // L1 on tau1 > rho
            if (t2 >= 0) CHECK(std::abs(terms[2]) < 1e-10);       // L2 on tau2 < 0
            if (!(t1 > 2 && t2 < 0)) CHECK(std::abs(terms[4]) < 1e-10);  // L4 on both
        }
    // r = 0 kills L3 identically
    TacnodeKernel K0({0, 1, 0.0});
    CHECK(std::abs(K0.eval_terms(2, 0.1, -1, 0.2)[3]) == 0.0);
}

TEST_CASE("involution, including the fixed point and term level") {
    for (auto [r, rho, beta] : {std::make_tuple(0, 0, 0.0), std::make_tuple(1, 2, 0.0), std::make_tuple(1, 2, 1.0)}) {
        TacnodeKernel K({r, rho, beta});
        CHECK(K.involution_residual(1, 0.4, 0, -0.3) < 1e-8);
        // fixed point tau1 = rho - tau2, theta1 = beta - theta2
        CHECK(K.involution_residual(rho - 1, beta - 0.2, 1, 0.2) < 1e-14);
        // L1 <-> L2 exchange and self-involutive L3, L4
        long t1 = rho + 1, t2 = -1;
        double h1 = 0.3, h2 = -0.2;
        auto a = K.eval_terms(t1, h1, t2, h2);
        auto b = K.eval_terms(rho - t2, beta - h2, rho - t1, beta - h1);
        CHECK(std::abs(a[1] - b[2]) < 1e-8);
        CHECK(std::abs(a[2] - b[1]) < 1e-8);
        CHECK(std::abs(a[3] - b[3]) < 1e-8);
        CHECK(std::abs(a[4] - b[4]) < 1e-8);
        CHECK(std::abs(a[0] - b[0]) < 1e-14);
    }
}

TEST_CASE("r above the cap is rejected") {
    CHECK_THROWS_AS(TacnodeKernel({5, 1, 0.0}), std::domain_error);
    QuadConfig qc;
    qc.r_cap = 5;
    CHECK_THROWS_AS(TacnodeKernel({5, 1, 0.0}, qc), std::domain_error);  // hard r <= 2 limit
}
