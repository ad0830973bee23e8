#include "core/lkernel.hpp"

#include "core/linalg.hpp"

namespace cuthex {

namespace {
void check_blue(const BluePoint& p) {
    if (((p.eta + p.xi) % 2 + 2) % 2 != 1)
        throw std::domain_error("blue point requires eta + xi odd");
}
}  // namespace

Rat BlueKernel::eval(const BluePoint& p1, const BluePoint& p2, RedForm form) const {
    check_blue(p1);
    check_blue(p2);
    long m_down = (p1.eta + p1.xi - 1) / 2;  // m - 1/2
    long x1 = (p1.eta - p1.xi - 1) / 2;
    long m_up = (p2.eta + p2.xi + 1) / 2;  // m' + 1/2
    long x2 = (p2.eta - p2.xi - 1) / 2;
    return -red_.eval(m_down, x1, m_up, x2, form);
}

Rat BlueKernel::correlation(std::span<const BluePoint> pts, RedForm form) const {
    size_t k = pts.size();
    Mat a(k, std::vector<Rat>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) a[i][j] = eval(pts[i], pts[j], form);
    return mat_det(std::move(a));
}

std::vector<BluePoint> BlueKernel::line_sites(long eta) const {
    const PolygonData& P = red_.polygon();
    std::vector<BluePoint> sites;
    for (long j = 0; j <= P.N - 1; ++j) {
        long x = eta - j - 1;  // strip j crossed at this position
        if (x < P.level_min(j) || x > P.level_max()) continue;
        sites.push_back({eta, j - x});
    }
    return sites;
}

Rat BlueKernel::line_sum(long eta, RedForm form) const {
    Rat s(0);
    for (const auto& p : line_sites(eta)) s += eval(p, p, form);
    return s;
}

}  // namespace cuthex
