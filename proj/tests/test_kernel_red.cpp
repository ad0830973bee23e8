#include <doctest.h>

#include "core/kernel_red.hpp"
#include "core/linalg.hpp"
#include "core/ratfun.hpp"
#include "core/tiling.hpp"

using namespace cuthex;

namespace {
PolygonSpec two_cut_small() {
    PolygonSpec s;
    s.lower_cuts = {1};
    s.lower_gaps = {2, 2};
    s.upper_cuts = {1};
    s.upper_gaps = {2, 2};
    s.b0 = 2;
    s.bu = 2;
    s.d0 = 2;
    return s;
}
}  // namespace

TEST_CASE("K_0 vanishes unless n > m and y >= x") {
    PolygonData P = build_polygon(hexagon_spec(2, 1, 2));
    RedKernel K(P);
    // n <= m with y < x: every term of the kernel must come from the integral
    CHECK(K.eval(2, 0, 1, -5, RedForm::R) == K.eval(2, 0, 1, -5, RedForm::d2));
    CHECK(K.eval(1, 1, 1, 1, RedForm::R) == K.eval(1, 1, 1, 1, RedForm::r3));
}

TEST_CASE("hexagon kernel equals the closed two-integral specialization") {
    long a = 2, b = 1, c = 2;
    PolygonData P = build_polygon(hexagon_spec(a, b, c));
    RedKernel K(P);
    long N = P.N;
    // independent evaluation of the d = 0 double integral with
    // Q(z) = (z-a+1)_c (z+c+1)_b
    auto cor72 = [&](long m, long x, long n, long y) {
        Rat K0(0);
        if (n > m && y >= x)
            K0 = -pochhammer(rat(y - x + 1), n - m - 1) * inv_factorial(n - m - 1);
        if (m >= N) return Rat(K0);
        UniPoly Q = UniPoly::pochhammer_poly(rat(-a + 1), c) * UniPoly::pochhammer_poly(rat(c + 1), b);
        std::vector<Rat> roots;
        for (long j = 0; j < c; ++j) roots.push_back(rat(a - 1 - j));
        for (long j = 0; j < b; ++j) roots.push_back(rat(-c - 1 - j));
        Rat acc(0);
        for (const Rat& v : roots) {
            if (v < x) continue;
            Rat qprime(1);
            for (const Rat& o : roots)
                if (o != v) qprime *= (v - o);
            RatFun f(Q);
            f.mul_den_root(v);
            for (long j = 0; j <= N - n; ++j) f.mul_den_root(rat(y - j));
            acc += pochhammer(v - x + 1, N - m - 1) / qprime * f.sum_residues_all_checked();
        }
        return Rat(K0 + acc * rat(factorial(N - n), factorial(N - m - 1)));
    };
    for (const auto& p1 : P.p_points())
        for (const auto& p2 : P.p_points())
            CHECK(K.eval(p1.n, p1.x, p2.n, p2.x, RedForm::R) == cor72(p1.n, p1.x, p2.n, p2.x));
}

TEST_CASE("determinants match enumeration on a tiny hexagon") {
    PolygonData P = build_polygon(hexagon_spec(1, 1, 1));
    Enumeration en(P);
    RedKernel K(P);
    Measure uni = Measure::uniform();
    auto pts = P.p_points();
    for (const auto& p1 : pts) {
        std::vector<LatticePoint> s = {p1};
        CHECK(K.correlation(s, RedForm::r3) == en.red_correlation(uni, s));
        for (const auto& p2 : pts) {
            if (p2 == p1) continue;
            std::vector<LatticePoint> s2 = {p1, p2};
            CHECK(K.correlation(s2, RedForm::r3) == en.red_correlation(uni, s2));
        }
    }
}

TEST_CASE("forms agree on the small two-cut polygon") {
    PolygonData P = build_polygon(two_cut_small());
    RedKernel K(P);
    auto pts = P.p_points();
    for (size_t i = 0; i < pts.size(); i += 3)
        for (size_t j = 0; j < pts.size(); j += 3) {
            Rat v = K.eval(pts[i].n, pts[i].x, pts[j].n, pts[j].x, RedForm::d2);
            CHECK(K.eval(pts[i].n, pts[i].x, pts[j].n, pts[j].x, RedForm::R) == v);
            CHECK(K.eval(pts[i].n, pts[i].x, pts[j].n, pts[j].x, RedForm::L) == v);
            CHECK(K.eval(pts[i].n, pts[i].x, pts[j].n, pts[j].x, RedForm::r3) == v);
        }
}

TEST_CASE("omega building blocks") {
    PolygonData P = build_polygon(two_cut_small());
    RedKernel K(P);
    // Omega_L(0,0) = (-1)^d Omega_R(0,0)
    Rat sgn = P.d % 2 ? Rat(-1) : Rat(1);
    CHECK(K.omega_L00() == sgn * K.omega_R00());
    // Omega^+_0 = 1 convention coincides with the literal value when d = 0
    PolygonData hex = build_polygon(hexagon_spec(2, 2, 2));
    RedKernel Kh(hex);
    CHECK(Kh.omega_plus(0, rat(7, 3), rat(11, 5)) == 1);
    // ratio identity Omega_L / Omega_L(0,0) = (Q_L(v)/Q_L(z)) Omega^+_r / Omega^+_r(0,0)
    Rat v = rat(22, 7), z = rat(31, 9);
    Rat ql_v(1), ql_z(1);
    for (long u : P.L) {
        ql_v *= (v - u);
        ql_z *= (z - u);
    }
    CHECK(K.omega_L(v, z) / K.omega_L00() ==
          ql_v / ql_z * K.omega_plus(P.r, v, z) / K.omega_plus00());
    // and the minus-side identity d Omega~_L/Omega_L(0,0) = Q_L(v)Q_L(z)/(r+1) ...
    // is covered indirectly by the form L = form r3 equality above.
}

TEST_CASE("K2 descendant vanishes left of the lower cuts") {
    PolygonData P = build_polygon(two_cut_small());
    RedKernel K(P);
    long yd = P.ycut.back();
    // For y <= y_d - 1 both routes must produce the same value with a zero
    // Gamma_0 block; equality of d2 and L forms is the practical check here,
    // plus the h-row determinant being zero makes d2's K2 vanish identically.
    for (long m = 0; m <= P.N; ++m)
        for (long n = 0; n <= P.N; ++n) {
            long y = yd - 1;
            if (!P.in_ptilde(n, y)) continue;
            CHECK(K.eval(m, 0, n, y, RedForm::d2) == K.eval(m, 0, n, y, RedForm::L));
        }
}

TEST_CASE("contour-deformation identities between the R and L companions") {
    // (-1)^d Omega_L(v,z) = Omega_R(v,z) + d (z-v) P(z)/Q(z) Omega~_R(v,z)
    // and (-1)^{d-1} Omega~_L(v,z) = Omega~_R(v,z), away from all poles.
    PolygonSpec mc;
    mc.lower_cuts = {1, 1};
    mc.lower_gaps = {1, 1, 2};
    mc.upper_cuts = {1};
    mc.upper_gaps = {1, 3};
    mc.b0 = 3;
    mc.bu = 2;
    mc.d0 = 1;
    for (const PolygonData& P : {build_polygon(two_cut_small()), build_polygon(mc)}) {
        RedKernel K(P);
        long d = P.d;
        Rat sd = d % 2 ? Rat(-1) : Rat(1);
        for (auto [vn, zn] : {std::make_pair(22L, 31L), {17L, -40L}, {-25L, 53L}}) {
            Rat v = rat(vn, 7), z = rat(zn, 9);
            Rat pz(1), qz(1);
            for (long s : P.P_roots) pz *= (z - s);
            for (long s : P.Q_roots) qz *= (z - s);
            Rat lhs1 = sd * K.omega_L(v, z);
            Rat rhs1 = K.omega_R(v, z) + d * (z - v) * pz / qz * K.omega_tilde_R(v, z);
            CHECK(lhs1 == rhs1);
            CHECK(-sd * K.omega_tilde_L(v, z) == K.omega_tilde_R(v, z));
        }
    }
}

TEST_CASE("determinants match enumeration on gapped and multi-upper-cut polygons") {
    PolygonSpec mc;
    mc.lower_cuts = {1, 1};
    mc.lower_gaps = {1, 1, 2};
    mc.upper_cuts = {1};
    mc.upper_gaps = {1, 3};
    mc.b0 = 3;
    mc.bu = 2;
    mc.d0 = 1;
    PolygonSpec u3;
    u3.lower_cuts = {1};
    u3.lower_gaps = {2, 3};
    u3.upper_cuts = {1, 1};
    u3.upper_gaps = {2, 2, 1};
    u3.b0 = 2;
    u3.bu = 1;
    u3.d0 = 2;
    for (const PolygonSpec& s : {mc, u3}) {
        PolygonData P = build_polygon(s);
        Enumeration en(P);
        RedKernel K(P);
        Measure uni = Measure::uniform();
        auto pts = P.p_points();
        for (size_t i = 0; i < pts.size(); i += 2) {
            std::vector<LatticePoint> s1 = {pts[i]};
            CHECK(K.correlation(s1, RedForm::r3) == en.red_correlation(uni, s1));
        }
        for (size_t i = 0; i < pts.size(); i += 3)
            for (size_t j = i + 1; j < pts.size(); j += 3) {
                std::vector<LatticePoint> s2 = {pts[i], pts[j]};
                CHECK(K.correlation(s2, RedForm::L) == en.red_correlation(uni, s2));
            }
    }
}

TEST_CASE("kernel trace per level counts the dots on the figure-scale polygon") {
    PolygonSpec s;
    s.lower_cuts = {2};
    s.lower_gaps = {4, 6};
    s.upper_cuts = {2};
    s.upper_gaps = {5, 5};
    s.b0 = 3;
    s.bu = 7;
    s.d0 = 7;
    PolygonData P = build_polygon(s);
    RedKernel K(P);
    for (long m : {0L, 3L, 7L}) {
        Rat trace(0);
        for (long x = P.level_min(m); x <= P.level_max(); ++x)
            trace += K.eval(m, x, m, x, RedForm::R);
        CHECK(trace == P.d + m);
    }
}
