#include "core/render.hpp"

#include <algorithm>
#include <sstream>

namespace cuthex {

namespace {

struct HoleStep {
    long strip, x;
    bool stay;  // stay => blue tile at x, move => green tile x -> x-1
};

std::vector<long> holes_at(const PolygonData& P, const Tiling& t, long k) {
    std::vector<long> holes;
    const auto& lv = t.levels[k];
    size_t idx = 0;
    for (long x = P.level_max(); x >= P.level_min(k); --x) {
        if (idx < lv.size() && lv[idx] == x)
            ++idx;
        else
            holes.push_back(x);
    }
    return holes;
}

std::vector<HoleStep> hole_steps(const PolygonData& P, const Tiling& t) {
    std::vector<HoleStep> steps;
    std::vector<long> cur = holes_at(P, t, 0);
    for (long k = 0; k < P.N; ++k) {
        std::vector<long> nxt = holes_at(P, t, k + 1);
        for (size_t i = 0; i < cur.size(); ++i)
            steps.push_back({k, cur[i], nxt[i] == cur[i]});
        cur = std::move(nxt);
    }
    return steps;
}

}  // namespace

std::vector<TriangleId> tiling_triangles(const PolygonData& P, const Tiling& t) {
    std::vector<TriangleId> tri;
    for (long n = 0; n <= P.N; ++n)
        for (long x : t.levels[n]) {
            if (n >= 1) tri.push_back({2, 2 * x - 1, n - 1});
            if (n <= P.N - 1) tri.push_back({1, 2 * x - 1, n});
        }
    for (const auto& s : hole_steps(P, t)) {
        if (s.stay) {
            tri.push_back({1, 2 * s.x - 1, s.strip});
            tri.push_back({2, 2 * s.x - 1, s.strip});
        } else {
            tri.push_back({1, 2 * s.x - 1, s.strip});
            tri.push_back({2, 2 * s.x - 3, s.strip});
        }
    }
    std::sort(tri.begin(), tri.end());
    return tri;
}

std::vector<TriangleId> region_triangles(const PolygonData& P) {
    std::vector<TriangleId> tri;
    for (long j = 0; j < P.N; ++j) {
        for (long a2 = -2 * (P.d + j) - 1; a2 <= 2 * P.sum_m - 3; a2 += 2)
            tri.push_back({1, a2, j});
        for (long a2 = -2 * (P.d + j) - 3; a2 <= 2 * P.sum_m - 3; a2 += 2)
            tri.push_back({2, a2, j});
    }
    std::sort(tri.begin(), tri.end());
    return tri;
}

namespace {

struct SvgWriter {
    long minx2, maxx2, scale, N2;
    std::ostringstream body;

    long px(long x2) const { return (x2 - minx2) * scale / 2; }
    long py(long n2) const { return (N2 - n2) * scale / 2; }

    void poly(std::initializer_list<std::pair<long, long>> pts /* (x2, n2) */,
              const std::string& fill) {
        body << "<polygon points=\"";
        bool first = true;
        for (const auto& [x2, n2] : pts) {
            if (!first) body << " ";
            first = false;
            body << px(x2) << "," << py(n2);
        }
        body << "\" fill=\"" << fill << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    void dot(long x2, long n2, const std::string& color) {
        body << "<circle cx=\"" << px(x2) << "\" cy=\"" << py(n2) << "\" r=\"" << scale / 6
             << "\" fill=\"" << color << "\"/>\n";
    }
    void line(long x2a, long n2a, long x2b, long n2b, const std::string& color) {
        body << "<line x1=\"" << px(x2a) << "\" y1=\"" << py(n2a) << "\" x2=\"" << px(x2b)
             << "\" y2=\"" << py(n2b) << "\" stroke=\"" << color
             << "\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";
    }
};

}  // namespace

std::string render_svg(const PolygonData& P, const Tiling& t, const RenderStyle& style) {
    if (!tiling_valid(P, t)) throw std::domain_error("render: invalid tiling for this polygon");
    SvgWriter w;
    w.scale = style.scale % 2 == 0 ? style.scale : style.scale + 1;
    w.minx2 = 2 * (-P.d - P.N) - 3;
    w.maxx2 = 2 * P.sum_m + 1;
    w.N2 = 2 * P.N + 2;

    // red tiles, clipped to the strip range 0..N
    for (long n = 0; n <= P.N; ++n)
        for (long x : t.levels[n]) {
            long x2 = 2 * x;
            if (n == 0)
                w.poly({{x2 + 1, 0}, {x2 - 1, 2}, {x2 - 1, 0}}, style.red);
            else if (n == P.N)
                w.poly({{x2 + 1, 2 * n - 2}, {x2 + 1, 2 * n}, {x2 - 1, 2 * n}}, style.red);
            else
                w.poly({{x2 + 1, 2 * n - 2}, {x2 + 1, 2 * n}, {x2 - 1, 2 * n + 2}, {x2 - 1, 2 * n}},
                       style.red);
        }
    for (const auto& s : hole_steps(P, t)) {
        long x2 = 2 * s.x, j2 = 2 * s.strip;
        if (s.stay)
            w.poly({{x2 - 1, j2}, {x2 + 1, j2}, {x2 + 1, j2 + 2}, {x2 - 1, j2 + 2}}, style.blue);
        else
            w.poly({{x2 - 1, j2}, {x2 + 1, j2}, {x2 - 1, j2 + 2}, {x2 - 3, j2 + 2}}, style.green);
    }
    if (style.show_red_dots)
        for (long n = 0; n <= P.N; ++n)
            for (long x : t.levels[n]) w.dot(2 * x, 2 * n, "#7a1f1f");
    if (style.show_blue_dots)
        for (const auto& s : hole_steps(P, t))
            if (s.stay) w.dot(2 * s.x, 2 * s.strip + 1, "#1f2f7a");
    if (style.show_strips && P.two_cut) {
        long m1 = P.spec.lower_gaps[0];
        // oblique strip boundaries eta = m1 and eta = m1 + rho: x = eta - n - 1/2
        for (long eta : {m1, m1 + P.rho})
            w.line(2 * eta - 1, 0, 2 * (eta - P.N) - 1, 2 * P.N, "#555500");
        long n1 = P.spec.upper_gaps[0];
        // vertical strip boundaries x = n1 - c - 1/2 and x = m1 - d - 1/2
        for (long x2 : {2 * (n1 - P.c) - 1, 2 * (m1 - P.d) - 1})
            w.line(x2, 0, x2, 2 * P.N, "#550055");
    }

    std::ostringstream svg;
    long wpx = w.px(w.maxx2), hpx = w.py(-2);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << wpx + 1 << "\" height=\""
        << hpx + 1 << "\" viewBox=\"0 0 " << wpx + 1 << " " << hpx + 1 << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << w.body.str() << "</svg>\n";
    return svg.str();
}

}  // namespace cuthex
