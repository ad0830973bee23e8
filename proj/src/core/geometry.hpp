#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core/rational.hpp"

namespace cuthex {

// Raised for malformed or inconsistent polygon specifications; the message
// names the first violated constraint.
struct SpecError : std::runtime_error {
    explicit SpecError(const std::string& msg) : std::runtime_error(msg) {}
};

// Cut-hexagon input data: cut and gap lengths, the two side triangles and the
// lower oblique side. Coordinates are derived, never supplied.
struct PolygonSpec {
    std::vector<long> lower_cuts;  // d_1..d_ell, positive
    std::vector<long> lower_gaps;  // m_1..m_{ell+1}, positive
    std::vector<long> upper_cuts;  // b_1..b_{u-1}, positive
    std::vector<long> upper_gaps;  // n_1..n_u, positive
    long b0 = 0;                   // left side triangle
    long bu = 0;                   // right side triangle
    long d0 = 0;                   // lower oblique side (N = b0 + d0)
};

struct LatticePoint {
    long n = 0, x = 0;
    bool operator==(const LatticePoint&) const = default;
    auto operator<=>(const LatticePoint&) const = default;
};

// Oblique coordinates in doubled form so the half-integer grid stays exact:
// eta2 = 2*eta, xi2 = 2*xi with eta = n + x + 1/2, xi = n - x - 1/2.
std::pair<long, long> to_oblique2(long n2, long x2);
std::pair<long, long> from_oblique2(long eta2, long xi2);

// Blue lattice point: integer (eta, xi) with eta + xi odd. The geometric point
// is (n, x) = ((eta+xi)/2, (eta-xi-1)/2) with half-integer n.
struct BluePoint {
    long eta = 0, xi = 0;
    bool operator==(const BluePoint&) const = default;
    auto operator<=>(const BluePoint&) const = default;
};

struct PolygonData {
    PolygonSpec spec;
    long ell = 0, u = 1;  // number of lower cuts, number of upper gaps
    long d = 0, N = 0;
    long sum_m = 0;  // = sum_n

    // Bottom data: y_1 > ... > y_{d+N}; the first d entries are the cut points,
    // then y_{d+k} = -d-k.
    std::vector<long> y;
    std::vector<long> ycut;
    // Top data: x_1 > ... > x_{d+N} (cuts plus both side triangles).
    std::vector<long> xs;

    // The L/R/C/G decomposition of the top points, stored descending.
    std::vector<long> L, R, C, G;
    long r = 0, g = 0;

    // Monic root lists: P = QC * PG, Q = QL * QC * QR.
    std::vector<long> P_roots, Q_roots, QL_roots, QC_roots, QR_roots, PG_roots;

    // Inclusive [a, b] integer intervals of the cut points.
    std::vector<std::pair<long, long>> lower_cut_intervals;
    std::vector<std::pair<long, long>> upper_cut_intervals;

    // Two-cut model extras (the equal-cut model with bu = d0, N - bu = b0).
    bool two_cut = false;
    long rho = 0, sigma = 0, b = 0, c = 0;

    bool in_ptilde(long n, long x) const;
    // Point of the polygon proper (triangles and frozen cut staircases removed).
    bool in_p(long n, long x) const;
    long level_min(long n) const { return -d - n; }
    long level_max() const { return sum_m - 1; }
    std::vector<LatticePoint> p_points() const;  // all lattice points of P
};

PolygonData build_polygon(const PolygonSpec& spec);

PolygonSpec spec_from_json(const std::string& json_text);
std::string spec_to_json(const PolygonSpec& spec);
std::string describe(const PolygonData& P);  // JSON summary of derived data

// The plain a,b,c hexagon (no cuts): bottom edge a, side triangles b and c.
PolygonSpec hexagon_spec(long a, long b, long c);

}  // namespace cuthex
