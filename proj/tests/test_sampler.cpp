#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "core/sampler.hpp"

using namespace cuthex;

TEST_CASE("equal seeds give identical trajectories") {
    PolygonData P = build_polygon(hexagon_spec(2, 2, 2));
    Chain a(P, Measure::uniform(), 99), b(P, Measure::uniform(), 99);
    a.run(5000);
    b.run(5000);
    CHECK(a.current() == b.current());
    Chain c(P, Measure::uniform(), 100);
    c.run(5000);
    CHECK(a.current().levels != c.current().levels);  // different seed, different path
}

TEST_CASE("zero steps returns the minimal tiling") {
    PolygonData P = build_polygon(hexagon_spec(2, 2, 2));
    CHECK(Chain::sample(P, Measure::uniform(), 0, 7) == minimal_tiling(P));
}

TEST_CASE("chain state always satisfies interlacing") {
    PolygonData P = build_polygon(hexagon_spec(2, 1, 2));
    Chain c(P, Measure::q_measure(rat(1, 2)), 5);
    for (int s = 0; s < 2000; ++s) {
        c.step();
        if (s % 200 == 0) CHECK(tiling_valid(P, c.current()));
    }
    CHECK(tiling_valid(P, c.current()));
}

TEST_CASE("two tilings of the unit hexagon appear with equal frequency") {
    PolygonData P = build_polygon(hexagon_spec(1, 1, 1));
    Enumeration en(P);
    REQUIRE(en.count() == 2);
    Chain c(P, Measure::uniform(), 2024);
    long hits = 0, total = 100000;
    for (long s = 0; s < total; ++s) {
        c.step();
        if (c.current() == en.tilings()[0]) ++hits;
    }
    double freq = double(hits) / total;
    // 3 sigma of a fair coin over (dependent) draws; generous band
    CHECK(freq > 0.45);
    CHECK(freq < 0.55);
}

TEST_CASE("the chain visits every tiling of a small instance") {
    PolygonData P = build_polygon(hexagon_spec(2, 2, 2));
    Enumeration en(P);
    std::set<std::vector<std::vector<long>>> seen;
    Chain c(P, Measure::uniform(), 31337);
    for (long s = 0; s < 100000 && seen.size() < en.tilings().size(); ++s) {
        c.step();
        seen.insert(c.current().levels);
    }
    CHECK(seen.size() == en.tilings().size());
}

TEST_CASE("line statistics are tiling independent") {
    PolygonSpec tc;
    tc.lower_cuts = {1};
    tc.lower_gaps = {2, 2};
    tc.upper_cuts = {1};
    tc.upper_gaps = {2, 2};
    tc.b0 = 2;
    tc.bu = 2;
    tc.d0 = 2;
    PolygonData P = build_polygon(tc);
    std::vector<Tiling> samples;
    Chain c(P, Measure::uniform(), 77);
    for (int i = 0; i < 5; ++i) {
        c.run(500);
        samples.push_back(c.current());
    }
    LineStats st = blue_line_stats(P, samples);
    REQUIRE(st.blue_counts.size() == 5);
    for (size_t i = 1; i < st.blue_counts.size(); ++i)
        CHECK(st.blue_counts[i] == st.blue_counts[0]);
    for (long k = 0; k <= P.N; ++k) CHECK(st.red_counts[k] == P.d + k);
}
