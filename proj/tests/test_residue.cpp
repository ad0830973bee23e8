#include <doctest.h>

#include "core/ratfun.hpp"

using namespace cuthex;

TEST_CASE("simple residues") {
    // 1/z over Gamma_0
    RatFun f;
    f.mul_den_root(rat(0));
    CHECK(f.residue_at(rat(0)) == rat(1));
    CHECK(f.sum_residues_all_checked() == rat(1));
    // no poles inside -> 0
    RatFun g{UniPoly::linear(rat(3))};
    CHECK(g.sum_residues_all_checked() == rat(0));
}

TEST_CASE("higher order poles via series expansion") {
    // 1/(z^3 (1-z)): residue at 0 equals the z^2 coefficient of 1/(1-z) = 1
    RatFun f;
    f.mul_scalar(rat(-1));  // 1 - z = -(z - 1)
    f.mul_den_root(rat(0), 3);
    f.mul_den_root(rat(1), 1);
    CHECK(f.residue_at(rat(0)) == rat(1));
    CHECK(f.residue_at(rat(1)) == rat(-1));
    CHECK(f.sum_residues_all_checked() == rat(0));
}

TEST_CASE("the contour integral of 1/(z^{1+k}(1-z)^n)") {
    // equals (k+1)_{n-1}/(n-1)! for n+k >= 1 (the residue at 0)
    for (long k = -2; k <= 4; ++k)
        for (long n = 1; n <= 5; ++n) {
            if (n + k < 1) continue;
            RatFun f;
            f.mul_scalar(rat((n % 2 == 0) ? 1 : -1));  // (1-z)^n = (-1)^n (z-1)^n
            f.mul_den_root(rat(0), static_cast<int>(k + 1));  // <= 0 shifts to numerator
            f.mul_den_root(rat(1), static_cast<int>(n));
            Rat expected = pochhammer(rat(k + 1), n - 1) * inv_factorial(n - 1);
            CHECK(f.residue_at(rat(0)) == expected);
        }
}

TEST_CASE("residues of random rational functions sum to -Res_inf") {
    // hand-rolled generator over a pole grid with multiplicities
    uint64_t state = 99;
    auto next = [&] {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    for (int it = 0; it < 50; ++it) {
        RatFun f;
        std::vector<Rat> coeffs;
        for (int i = 0; i < 4; ++i) coeffs.push_back(rat(static_cast<long>(next() % 19) - 9));
        f.mul_num(UniPoly{std::move(coeffs)} + UniPoly::one());
        long npoles = 1 + next() % 3;
        for (long p = 0; p < npoles; ++p)
            f.mul_den_root(rat(static_cast<long>(next() % 11) - 5), 1 + next() % 2);
        CHECK_NOTHROW(f.sum_residues_all_checked());
    }
}

TEST_CASE("negative multiplicity cancels denominator factors") {
    RatFun f;
    f.mul_den_root(rat(2), 2);
    f.mul_den_root(rat(2), -1);
    CHECK(f.den_roots().at(rat(2)) == 1);
    f.mul_den_root(rat(2), -2);  // one factor moves to the numerator
    CHECK(f.den_roots().count(rat(2)) == 0);
    CHECK(f.num().eval(rat(5)) == rat(3));
}

TEST_CASE("gamma_tau point counts follow the stated rule") {
    long N = 10, y1 = 3;
    for (long n = 0; n <= N; ++n)
        for (long y = -15; y <= 15; ++y) {
            auto pts = gamma_tau_points(y, n, y1, N);
            long tau = (y + n) - (y1 + 1);
            if (tau >= 0) {
                CHECK(pts.empty());
            } else if (y1 - N <= y) {
                CHECK(static_cast<long>(pts.size()) == -tau);
            } else {
                CHECK(static_cast<long>(pts.size()) == N - n + 1);
            }
        }
}

TEST_CASE("evaluation away from poles") {
    RatFun f{UniPoly::linear(rat(1))};  // (z+1)/(z-2)
    f.mul_den_root(rat(2));
    CHECK(f.eval(rat(3)) == rat(4));
    CHECK_THROWS_AS(f.eval(rat(2)), std::domain_error);
}
