#include <doctest.h>

#include "core/kernel_q.hpp"
#include "core/kernel_red.hpp"
#include "core/tiling.hpp"

using namespace cuthex;

namespace {
PolygonSpec reference_two_cut_spec() {
    PolygonSpec s;
    s.lower_cuts = {2};
    s.lower_gaps = {4, 6};
    s.upper_cuts = {2};
    s.upper_gaps = {5, 5};
    s.b0 = 3;
    s.bu = 7;
    s.d0 = 7;
    return s;
}

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

TEST_CASE("H entries take the Pochhammer-power form") {
    PolygonData P = build_polygon(two_cut_small());
    Rat q = rat(1, 2);
    QKernel K(P, q);
    for (size_t i = 0; i < P.xs.size(); ++i)
        for (size_t j = 0; j < P.y.size(); ++j) {
            long r = P.xs[i] - P.y[j];
            Rat expect = r < 0 ? Rat(0) : rat_pow(q, r * P.d) * calP_at_qpow(P.N - 1, r, q);
            CHECK(K.H()[i][j] == expect);
        }
}

TEST_CASE("Htilde has the proven block shape") {
    for (const Rat& q : {rat(1, 2), rat(2, 3)}) {
        QKernel K(build_polygon(two_cut_small()), q);
        CHECK(K.htilde_block_shape_ok());
        QKernel Kh(build_polygon(hexagon_spec(2, 2, 2)), q);
        CHECK(Kh.htilde_block_shape_ok());  // d = 0: pure power block
    }
}

TEST_CASE("Mtilde inverse closed form against the convolution-built M") {
    PolygonData P = build_polygon(two_cut_small());
    QKernel K(P, rat(1, 2));
    Mat M = K.M_from_closed_convolutions();
    Mat Mt = mat_mul(M, mat_inverse(mat_transpose(K.T())));
    Mat closed = K.mtilde_inverse_closed();
    CHECK(mat_mul(Mt, closed) == mat_identity(Mt.size()));
    // antidiagonal entries and identity block of the closed form
    long d = P.d, N = P.N;
    for (long i = 0; i < d; ++i) CHECK(closed[i][i] == 1);
    for (long i = d + 1; i <= d + N; ++i) {
        Rat expect(1);
        for (long t = 1; t <= i - d - 1; ++t) expect *= (1 - rat_pow(rat(1, 2), t));
        CHECK(closed[i - 1][2 * d + N - i] == expect);
    }
}

TEST_CASE("det Htilde identity") {
    QKernel K(build_polygon(two_cut_small()), rat(1, 2));
    CHECK(K.htilde_det_identity_lhs() == K.htilde_det_identity_rhs());
}

TEST_CASE("Karlin-McGregor product equals the exact measure") {
    PolygonData P = build_polygon(two_cut_small());
    Enumeration en(P);
    Rat q = rat(1, 2);
    QKernel K(P, q);
    Measure mq = Measure::q_measure(q);
    for (const auto& t : en.tilings()) CHECK(K.kmcg_weight(t) == en.weight(t, mq));
    // an interlacing-violating array gets weight zero
    Tiling bad = en.tilings()[0];
    bad.levels[1][0] = bad.levels[2][0] + 5;
    CHECK(K.kmcg_weight(bad) == 0);
}

TEST_CASE("matrix and integral routes agree") {
    PolygonData P = build_polygon(reference_two_cut_spec());
    Rat q = rat(2, 3);
    QKernel K(P, q);
    uint64_t state = 4242;
    auto next = [&] {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    auto pts = P.p_points();
    for (int it = 0; it < 20; ++it) {
        const auto& p1 = pts[next() % pts.size()];
        const auto& p2 = pts[next() % pts.size()];
        if (p1.n > P.N - 1 || p2.n > P.N) continue;
        CHECK(K.eval_matrix(p1.n, p1.x, p2.n, p2.x) ==
              K.eval_integral(p1.n, p1.x, p2.n, p2.x));
    }
}

TEST_CASE("determinants against the q-weighted oracle") {
    PolygonData P = build_polygon(hexagon_spec(2, 2, 2));
    Enumeration en(P);
    Rat q = rat(1, 2);
    QKernel K(P, q);
    Measure mq = Measure::q_measure(q);
    auto pts = P.p_points();
    for (size_t i = 0; i < pts.size(); i += 2) {
        std::vector<LatticePoint> s = {pts[i]};
        CHECK(K.correlation(s) == en.red_correlation(mq, s));
    }
    std::vector<LatticePoint> s2 = {pts[3], pts[8]};
    CHECK(K.correlation(s2) == en.red_correlation(mq, s2));
}

TEST_CASE("convolution closed forms against brute-force sums") {
    // phi^{n+1,m+1}(x,y) = h_{y-x}(q^n,...,q^{m-1}) via finite convolution
    Rat q = rat(1, 2);
    auto phi_k = [&](long k, long x, long z) {  // phi_k(x, z) for integer x
        return x <= z ? rat_pow(q, (k - 1) * (z - x)) : Rat(0);
    };
    long n = 2, m = 5, x = -1, y = 4;
    Rat conv(0);
    for (long z1 = x; z1 <= y; ++z1)
        for (long z2 = z1; z2 <= y; ++z2)
            conv += phi_k(n + 1, x, z1) * phi_k(n + 2, z1, z2) * phi_k(n + 3, z2, y);
    CHECK(conv == rat_pow(q, n * (y - x)) * calP_at_qpow(m - n - 1, y - x, q));
    // virtual-row geometric tail: phi_n(virt,.) * phi-chain with exact bound
    long vn = 2, vm = 4, yy = 3;
    Rat closed = rat_pow(q, (vn - 1) * yy);
    for (long t = 1; t <= vm - vn; ++t) closed /= (1 - rat_pow(q, t));
    auto truncated = [&](long depth) {
        Rat acc(0);
        for (long z = yy - depth; z <= yy; ++z)
            acc += rat_pow(q, (vn - 1) * z) * rat_pow(q, vn * (yy - z)) *
                   calP_at_qpow(vm - vn - 1, yy - z, q);
        return acc;
    };
    // |closed - truncated(depth)| <= c * q^{depth+1} / (1 - q) with
    // c = q^{(vn-1)yy} prod 1/(1-q^i): the summand is geometric with ratio q.
    Rat c = rat_pow(q, (vn - 1) * yy);
    for (long i = 1; i <= vm - vn - 1; ++i) c /= (1 - rat_pow(q, i));
    for (long depth : {8L, 16L}) {
        Rat tail = closed - truncated(depth);
        if (tail < 0) tail = -tail;
        CHECK(tail <= c * rat_pow(q, depth + 1) / (1 - q));
    }
    CHECK(truncated(40) != closed);  // the sum really is infinite
}

TEST_CASE("q to 1 probe converges monotonically") {
    PolygonData P = build_polygon(two_cut_small());
    RedKernel red(P);
    std::vector<std::pair<LatticePoint, LatticePoint>> pairs = {{{1, 1}, {2, 0}},
                                                                {{2, -1}, {3, 1}}};
    std::vector<Rat> eps = {rat(1, 4), rat(1, 8), rat(1, 16)};
    auto rep = q_to_one_probe(P, red, pairs, eps);
    CHECK(rep.monotone);
    // exact-equality case with both sides zero: x right of every top point
    QKernel K(P, rat(7, 8));
    CHECK(K.conjugated(3, 100, 2, 50) == 0);
    CHECK(red.eval(3, 100, 2, 50, RedForm::R) == 0);
}

TEST_CASE("d = 0 probe converges to the hexagon kernel") {
    PolygonData P = build_polygon(hexagon_spec(2, 1, 2));
    RedKernel red(P);
    std::vector<std::pair<LatticePoint, LatticePoint>> pairs = {{{1, 0}, {2, 1}},
                                                                {{2, -1}, {1, 1}}};
    std::vector<Rat> eps = {rat(1, 8), rat(1, 16), rat(1, 32)};
    auto rep = q_to_one_probe(P, red, pairs, eps);
    CHECK(rep.monotone);
    for (const Rat& d : rep.abs_diff.back()) CHECK(d < 10 * eps.back());
}

TEST_CASE("routes agree on gapped and multi-upper-cut polygons") {
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
        QKernel K(P, rat(3, 5));
        auto pts = P.p_points();
        for (size_t i = 0; i < pts.size(); i += 2)
            for (size_t j = 0; j < pts.size(); j += 3) {
                if (pts[i].n > P.N - 1) continue;
                CHECK(K.eval_matrix(pts[i].n, pts[i].x, pts[j].n, pts[j].x) ==
                      K.eval_integral(pts[i].n, pts[i].x, pts[j].n, pts[j].x));
            }
    }
}

TEST_CASE("structure product on the figure-scale polygon") {
    PolygonData P = build_polygon(reference_two_cut_spec());
    QKernel K(P, rat(1, 2));
    CHECK(K.htilde_block_shape_ok());
    Mat M = K.M_from_closed_convolutions();
    Mat Mt = mat_mul(M, mat_inverse(mat_transpose(K.T())));
    CHECK(mat_mul(Mt, K.mtilde_inverse_closed()) == mat_identity(Mt.size()));
    CHECK(K.htilde_det_identity_lhs() == K.htilde_det_identity_rhs());
}

TEST_CASE("the probe reports a convergence order near one") {
    PolygonData P = build_polygon(two_cut_small());
    RedKernel red(P);
    std::vector<std::pair<LatticePoint, LatticePoint>> pairs = {{{1, 1}, {2, 0}}};
    std::vector<Rat> eps = {rat(1, 8), rat(1, 16), rat(1, 32), rat(1, 64)};
    auto rep = q_to_one_probe(P, red, pairs, eps);
    REQUIRE(rep.order.size() == 1);
    CHECK(rep.order[0] > 0.5);
    CHECK(rep.order[0] < 2.0);
}
