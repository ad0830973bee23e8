#include "core/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace cuthex {

std::pair<long, long> to_oblique2(long n2, long x2) { return {n2 + x2 + 1, n2 - x2 - 1}; }
std::pair<long, long> from_oblique2(long eta2, long xi2) {
    return {(eta2 + xi2) / 2, (eta2 - xi2 - 2) / 2};
}

namespace {
long vec_sum(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }
}  // namespace

PolygonData build_polygon(const PolygonSpec& spec) {
    PolygonData P;
    P.spec = spec;
    P.ell = static_cast<long>(spec.lower_cuts.size());
    P.u = static_cast<long>(spec.upper_gaps.size());

    for (long v : spec.lower_cuts)
        if (v <= 0) throw SpecError("lower_cuts entries must be positive");
    for (long v : spec.upper_cuts)
        if (v <= 0) throw SpecError("upper_cuts entries must be positive");
    for (long v : spec.lower_gaps)
        if (v <= 0) throw SpecError("lower_gaps entries must be positive");
    for (long v : spec.upper_gaps)
        if (v <= 0) throw SpecError("upper_gaps entries must be positive");
    if (spec.b0 < 0 || spec.bu < 0 || spec.d0 < 0)
        throw SpecError("b0, bu, d0 must be nonnegative");
    if (static_cast<long>(spec.lower_gaps.size()) != P.ell + 1)
        throw SpecError("lower_gaps must have one more entry than lower_cuts");
    if (P.u < 1) throw SpecError("upper_gaps must be nonempty");
    if (static_cast<long>(spec.upper_cuts.size()) != P.u - 1)
        throw SpecError("upper_gaps must have one more entry than upper_cuts");

    P.d = vec_sum(spec.lower_cuts);
    P.N = spec.b0 + spec.d0;
    if (P.N < 1) throw SpecError("N = b0 + d0 must be positive");
    P.sum_m = vec_sum(spec.lower_gaps);
    long sum_n = vec_sum(spec.upper_gaps);
    if (P.sum_m != sum_n) throw SpecError("sum(lower_gaps) != sum(upper_gaps)");
    long sum_b = spec.b0 + vec_sum(spec.upper_cuts) + spec.bu;
    if (sum_b != P.d + P.N) throw SpecError("b0 + sum(upper_cuts) + bu != d + N");

    // Bottom line: cut points right-to-left from the walk, then the points left
    // of the figure at -d-1, -d-2, ...
    long pos = -P.d;  // leftmost integer on the bottom edge of the parallelogram
    for (long i = 0; i < P.ell; ++i) {
        pos += spec.lower_gaps[i];
        P.lower_cut_intervals.push_back({pos, pos + spec.lower_cuts[i] - 1});
        pos += spec.lower_cuts[i];
    }
    for (auto it = P.lower_cut_intervals.rbegin(); it != P.lower_cut_intervals.rend(); ++it)
        for (long z = it->second; z >= it->first; --z) P.ycut.push_back(z);
    P.y = P.ycut;
    for (long k = 1; k <= P.N; ++k) P.y.push_back(-P.d - k);

    // Top line: left triangle, alternating gaps and cuts, right triangle.
    std::vector<long> top;
    pos = -P.d - P.N;
    for (long i = 0; i < spec.b0; ++i) top.push_back(pos++);
    for (long i = 0; i < P.u; ++i) {
        pos += spec.upper_gaps[i];
        if (i < P.u - 1) {
            P.upper_cut_intervals.push_back({pos, pos + spec.upper_cuts[i] - 1});
            for (long j = 0; j < spec.upper_cuts[i]; ++j) top.push_back(pos++);
        }
    }
    for (long i = 0; i < spec.bu; ++i) top.push_back(pos++);
    if (pos - 1 != P.sum_m - 1) throw SpecError("internal: top boundary does not close up");
    P.xs.assign(top.rbegin(), top.rend());

    if (static_cast<long>(P.xs.size()) != P.d + P.N)
        throw SpecError("internal: top point count != d + N");
    for (long i = 0; i < P.d + P.N; ++i)
        if (P.xs[i] < P.y[i])
            throw SpecError("x_i >= y_i violated at i = " + std::to_string(i + 1));

    if (P.d > 0) {
        long y1 = P.ycut.front(), yd = P.ycut.back();
        if (y1 - yd > P.N - 1) throw SpecError("y_1 - y_d > N - 1");
        for (const auto& [a, b] : P.upper_cut_intervals)
            if (a <= yd && yd <= b)
                throw SpecError("y_d lies among the upper-cut columns");
        // L/R/C thresholds per the top-point classification.
        for (long x : P.xs) {
            if (x < y1 - P.N + 1)
                P.L.push_back(x);
            else if (x >= yd)
                P.R.push_back(x);
            else
                P.C.push_back(x);
        }
        for (long z = yd - 1; z >= y1 - P.N + 1; --z) {
            P.P_roots.push_back(z);
            if (!std::binary_search(P.C.rbegin(), P.C.rend(), z)) P.G.push_back(z);
        }
        P.g = y1 - yd - P.d + 1;
    } else {
        P.R = P.xs;
        P.g = 0;
    }
    P.r = static_cast<long>(P.L.size()) - P.d;
    if (P.r < 0) throw SpecError("r = |L| - d < 0");
    P.Q_roots = P.xs;
    P.QL_roots = P.L;
    P.QC_roots = P.C;
    P.QR_roots = P.R;
    P.PG_roots = P.G;

    // Two-cut model: equal cuts above and below, bu = d0 and N - bu = b0.
    if (P.ell == 1 && P.u == 2 && spec.lower_cuts[0] == spec.upper_cuts[0] &&
        spec.bu == spec.d0 && P.N - spec.bu == spec.b0) {
        P.two_cut = true;
        P.b = spec.b0;
        P.c = spec.bu;
        long m1 = spec.lower_gaps[0], m2 = spec.lower_gaps[1];
        long n1 = spec.upper_gaps[0], n2 = spec.upper_gaps[1];
        P.rho = n1 - m1 + P.b - P.d;
        P.sigma = m1 - n1 + P.c - P.d;
        if (P.rho < 0) throw SpecError("two-cut model: rho = n1 - m1 + b - d < 0");
        if (P.sigma < 0) throw SpecError("two-cut model: sigma = m1 - n1 + c - d < 0");
        // Outer bounds of the inequality chain, non-strict so that the strips
        // may touch the boundary corners (c - d = n1 occurs in valid polygons).
        if (!(std::max(-n2, -m1) <= P.d - P.b))
            throw SpecError("two-cut model: max(-n2, -m1) <= d - b fails");
        if (!(P.c - P.d <= std::min(m2, n1)))
            throw SpecError("two-cut model: c - d <= min(m2, n1) fails");
    }
    return P;
}

bool PolygonData::in_ptilde(long n, long x) const {
    return 0 <= n && n <= N && level_min(n) <= x && x <= level_max();
}

bool PolygonData::in_p(long n, long x) const {
    if (!in_ptilde(n, x)) return false;
    if (x < -d - std::min(n, spec.d0)) return false;  // left side triangle
    if (n > N - spec.bu && x > sum_m - 1 - (n - (N - spec.bu))) return false;  // right triangle
    for (const auto& [a, b] : lower_cut_intervals)
        if (a <= x && x + n <= b) return false;  // frozen staircase above a lower cut
    for (const auto& [a, b] : upper_cut_intervals)
        if (x <= b && x >= a + (N - n)) return false;  // frozen staircase below an upper cut
    return true;
}

std::vector<LatticePoint> PolygonData::p_points() const {
    std::vector<LatticePoint> pts;
    for (long n = 0; n <= N; ++n)
        for (long x = level_min(n); x <= level_max(); ++x)
            if (in_p(n, x)) pts.push_back({n, x});
    return pts;
}

PolygonSpec hexagon_spec(long a, long b, long c) {
    PolygonSpec s;
    s.lower_gaps = {a};
    s.upper_gaps = {a};
    s.b0 = b;
    s.bu = c;
    s.d0 = c;
    return s;
}

namespace {

std::vector<long> json_long_array(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key)) return {};
    if (!j[key].is_array()) throw SpecError("field '" + key + "' must be an array of integers");
    std::vector<long> out;
    for (const auto& v : j[key]) {
        if (!v.is_number_integer()) throw SpecError("field '" + key + "' must contain integers");
        out.push_back(v.get<long>());
    }
    return out;
}

long json_long(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key)) throw SpecError("missing field '" + key + "'");
    if (!j[key].is_number_integer()) throw SpecError("field '" + key + "' must be an integer");
    return j[key].get<long>();
}

}  // namespace

PolygonSpec spec_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecError(std::string("invalid JSON: ") + e.what());
    }
    PolygonSpec s;
    s.lower_cuts = json_long_array(j, "lower_cuts");
    s.lower_gaps = json_long_array(j, "lower_gaps");
    s.upper_cuts = json_long_array(j, "upper_cuts");
    s.upper_gaps = json_long_array(j, "upper_gaps");
    if (s.lower_gaps.empty()) throw SpecError("missing field 'lower_gaps'");
    if (s.upper_gaps.empty()) throw SpecError("missing field 'upper_gaps'");
    s.b0 = json_long(j, "b0");
    s.bu = json_long(j, "bu");
    s.d0 = json_long(j, "d0");
    return s;
}

std::string spec_to_json(const PolygonSpec& spec) {
    nlohmann::json j;
    j["lower_cuts"] = spec.lower_cuts;
    j["lower_gaps"] = spec.lower_gaps;
    j["upper_cuts"] = spec.upper_cuts;
    j["upper_gaps"] = spec.upper_gaps;
    j["b0"] = spec.b0;
    j["bu"] = spec.bu;
    j["d0"] = spec.d0;
    return j.dump();
}

std::string describe(const PolygonData& P) {
    nlohmann::json j;
    j["N"] = P.N;
    j["d"] = P.d;
    j["g"] = P.g;
    j["r"] = P.r;
    j["sum_m"] = P.sum_m;
    j["y_cut"] = P.ycut;
    j["x_top"] = P.xs;
    j["L"] = P.L;
    j["R"] = P.R;
    j["C"] = P.C;
    j["G"] = P.G;
    if (P.two_cut) {
        j["two_cut"] = true;
        j["rho"] = P.rho;
        j["sigma"] = P.sigma;
        j["b"] = P.b;
        j["c"] = P.c;
    } else {
        j["two_cut"] = false;
    }
    return j.dump();
}

}  // namespace cuthex
