#include <doctest.h>

#include "core/lkernel.hpp"
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

TEST_CASE("off-lattice blue points are rejected") {
    BlueKernel L(build_polygon(two_cut_small()));
    CHECK_THROWS_AS(L.eval({2, 2}, {1, 0}), std::domain_error);
    CHECK_THROWS_AS(L.eval({1, 0}, {2, 2}), std::domain_error);
}

TEST_CASE("blue determinants equal blue enumeration") {
    PolygonData P = build_polygon(two_cut_small());
    Enumeration en(P);
    BlueKernel L(P);
    Measure uni = Measure::uniform();
    auto sites = en.blue_support();
    REQUIRE(!sites.empty());
    for (size_t i = 0; i < sites.size(); ++i) {
        std::vector<BluePoint> s1 = {sites[i]};
        CHECK(L.correlation(s1) == en.blue_correlation(uni, s1));
    }
    for (size_t i = 0; i < sites.size(); i += 2)
        for (size_t j = i + 1; j < sites.size(); j += 2) {
            std::vector<BluePoint> s2 = {sites[i], sites[j]};
            CHECK(L.correlation(s2) == en.blue_correlation(uni, s2));
        }
}

TEST_CASE("line sums reproduce the deterministic blue counts") {
    PolygonData P = build_polygon(two_cut_small());
    BlueKernel L(P);
    long m1 = P.spec.lower_gaps[0];
    for (long eta = m1; eta <= m1 + P.rho; ++eta) CHECK(L.line_sum(eta) == P.r);
    for (long eta = -P.d + 1; eta < P.sum_m + P.b; ++eta)
        CHECK(L.line_sum(eta) == expected_blue_count_two_cut(P, eta));
    CHECK(L.line_sum(-P.d - 3) == 0);  // line outside the parallelogram
}

TEST_CASE("line sums on the figure-scale two-cut polygon") {
    PolygonSpec s;
    s.lower_cuts = {2};
    s.lower_gaps = {4, 6};
    s.upper_cuts = {2};
    s.upper_gaps = {5, 5};
    s.b0 = 3;
    s.bu = 7;
    s.d0 = 7;
    PolygonData P = build_polygon(s);
    BlueKernel L(P);
    long m1 = P.spec.lower_gaps[0];
    // inside the strip every line carries exactly r dots
    for (long eta = m1; eta <= m1 + P.rho; ++eta) CHECK(L.line_sum(eta) == P.r);
    // a few anchors of the piecewise profile outside the strip
    for (long eta : {m1 - P.d, m1 + P.rho + P.d, -P.d + 1, P.spec.upper_gaps[0] + P.b})
        CHECK(L.line_sum(eta) == expected_blue_count_two_cut(P, eta));
}
