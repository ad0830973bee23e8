#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "core/tiling.hpp"

namespace cuthex {

struct RenderStyle {
    int scale = 24;  // pixels per lattice unit (kept even so vertices are integral)
    bool show_red_dots = false;
    bool show_blue_dots = false;
    bool show_strips = false;  // {rho} / {sigma} guides, two-cut model only
    std::string red = "#d9544f";
    std::string blue = "#4f7bd9";
    std::string green = "#5aa85a";
};

// Deterministic SVG in the three-tile convention: red tiles straddle the red
// dots, blue tiles are the vertical hole steps, green tiles the oblique ones.
std::string render_svg(const PolygonData& P, const Tiling& t, const RenderStyle& style = {});

// Triangle decomposition used by the renderer: each tile covers two lattice
// triangles; the multiset over a tiling must cover the parallelogram strips
// exactly once (exposed for the exact-cover test).
// Triangle id: (type 1 = up, 2 = down, a2 = doubled left corner abscissa, strip j)
using TriangleId = std::tuple<int, long, long>;
std::vector<TriangleId> tiling_triangles(const PolygonData& P, const Tiling& t);
std::vector<TriangleId> region_triangles(const PolygonData& P);

}  // namespace cuthex
