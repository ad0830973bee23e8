#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "core/render.hpp"
#include "core/sampler.hpp"

using namespace cuthex;

TEST_CASE("tiles cover the parallelogram triangles exactly once") {
    for (const auto& spec : {hexagon_spec(2, 2, 2), hexagon_spec(2, 1, 3)}) {
        PolygonData P = build_polygon(spec);
        Enumeration en(P);
        for (const auto& t : en.tilings())
            CHECK(tiling_triangles(P, t) == region_triangles(P));
    }
    PolygonSpec tc;
    tc.lower_cuts = {1};
    tc.lower_gaps = {2, 2};
    tc.upper_cuts = {1};
    tc.upper_gaps = {2, 2};
    tc.b0 = 2;
    tc.bu = 2;
    tc.d0 = 2;
    PolygonData P = build_polygon(tc);
    Enumeration en(P);
    for (const auto& t : en.tilings()) CHECK(tiling_triangles(P, t) == region_triangles(P));
}

TEST_CASE("rendering is deterministic and matches the golden file") {
    PolygonData P = build_polygon(hexagon_spec(1, 1, 1));
    Tiling t = minimal_tiling(P);
    RenderStyle style;
    style.show_red_dots = true;
    std::string svg1 = render_svg(P, t, style);
    std::string svg2 = render_svg(P, t, style);
    CHECK(svg1 == svg2);
    std::ifstream golden(std::string(CUTHEX_TEST_DATA) + "/golden_111.svg", std::ios::binary);
    REQUIRE(golden.good());
    std::ostringstream gs;
    gs << golden.rdbuf();
    CHECK(svg1 == gs.str());
}

TEST_CASE("dot overlay counts per level") {
    PolygonData P = build_polygon(hexagon_spec(2, 2, 2));
    Tiling t = minimal_tiling(P);
    std::string svg = render_svg(P, t, {.scale = 10, .show_red_dots = true});
    // count circle elements: one red dot per lattice dot = sum of (d+k)
    size_t dots = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++dots;
        pos += 7;
    }
    long expect = 0;
    for (long k = 0; k <= P.N; ++k) expect += P.d + k;
    CHECK(static_cast<long>(dots) == expect);
}
